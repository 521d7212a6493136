#pragma once

#include <deque>
#include <limits>
#include <string>
#include <vector>

#include "planarflow/embedding.hpp"
#include "planarflow/path.hpp"

namespace planarflow {

/// Integer potential per face, normalized so the root face (f_t) is 0.
struct FacePotential {
  std::vector<Amount> value;
  Face root = kNoFace;

  Amount operator[](Face f) const { return value[static_cast<std::size_t>(f)]; }
};

/// Potentials with f[d] == phi[right_face(d)] - phi[left_face(d)] and phi[f_t] == 0.
inline FacePotential potentials_from_circulation(const PlanarEmbedding& emb, const FlowAssignment& f) {
  if (static_cast<Dart>(f.size()) != emb.dart_count()) {
    throw Error(ErrorKind::InvalidArgument, "flow size does not match embedding");
  }
  FacePotential pot;
  pot.root = emb.f_t();
  pot.value.assign(static_cast<std::size_t>(emb.face_count()), 0);
  std::vector<char> done(static_cast<std::size_t>(emb.face_count()), 0);
  std::deque<Face> queue{pot.root};
  done[static_cast<std::size_t>(pot.root)] = 1;
  while (!queue.empty()) {
    const Face face = queue.front();
    queue.pop_front();
    for (Dart d : emb.face_darts(face)) {
      const Face other = emb.right_face(d);
      if (done[static_cast<std::size_t>(other)]) continue;
      done[static_cast<std::size_t>(other)] = 1;
      pot.value[static_cast<std::size_t>(other)] = pot.value[static_cast<std::size_t>(face)] + f[d];
      queue.push_back(other);
    }
  }
  for (Dart d = 0; d < emb.dart_count(); ++d) {
    if (f[d] != pot[emb.right_face(d)] - pot[emb.left_face(d)]) {
      throw Error(ErrorKind::NotACirculation, "potential difference mismatch on dart " + std::to_string(d));
    }
  }
  return pot;
}

inline FlowAssignment circulation_from_potentials(const PlanarEmbedding& emb, const FacePotential& pot) {
  FlowAssignment f(static_cast<std::size_t>(emb.dart_count()));
  for (Dart d = 0; d < emb.dart_count(); d += 2) f.set(d, pot[emb.right_face(d)] - pot[emb.left_face(d)]);
  return f;
}

/// True iff every face potential of the circulation is non-negative.
inline bool is_clockwise(const PlanarEmbedding& emb, const FlowAssignment& f) {
  const auto pot = potentials_from_circulation(emb, f);
  for (Amount v : pot.value) {
    if (v < 0) return false;
  }
  return true;
}

/// Unit circulation of a closed walk: +1 on each of its darts.
inline FlowAssignment unit_circulation(const PlanarEmbedding& emb, std::span<const Dart> cycle) {
  FlowAssignment f(static_cast<std::size_t>(emb.dart_count()));
  for (Dart d : cycle) f.add(d, 1);
  return f;
}

inline bool is_clockwise_cycle(const PlanarEmbedding& emb, std::span<const Dart> cycle) {
  return is_clockwise(emb, unit_circulation(emb, cycle));
}

/// Strict: a is left of b iff a + rev(b) is a clockwise circulation with some positive potential.
inline bool is_left_of(const PlanarEmbedding& emb, const Path& a, const Path& b) {
  for (const Path* p : {&a, &b}) {
    require_walk(emb, *p);
    if (p->empty() || path_start(emb, *p) != emb.s() || path_end(emb, *p) != emb.t()) {
      throw Error(ErrorKind::WrongEndpoints, "is_left_of needs s-to-t paths");
    }
  }
  FlowAssignment f(static_cast<std::size_t>(emb.dart_count()));
  for (Dart d : a.darts) f.add(d, 1);
  for (Dart d : b.darts) f.add(d, -1);
  const auto pot = potentials_from_circulation(emb, f);
  bool positive = false;
  for (Amount v : pot.value) {
    if (v < 0) return false;
    positive = positive || v > 0;
  }
  return positive;
}

/// Minimum number of faces in a sequence from a face at s to a face at t where
/// consecutive faces share a vertex.
inline int compute_phi(const PlanarEmbedding& emb, Vertex s, Vertex t) {
  if (s == t) throw Error(ErrorKind::InvalidArgument, "phi needs distinct terminals");
  constexpr int kUnset = std::numeric_limits<int>::max();
  std::vector<int> face_dist(static_cast<std::size_t>(emb.face_count()), kUnset);
  std::vector<char> vertex_done(static_cast<std::size_t>(emb.vertex_count()), 0);
  std::vector<char> at_t(static_cast<std::size_t>(emb.face_count()), 0);
  for (Face f : emb.faces_around(t)) at_t[static_cast<std::size_t>(f)] = 1;

  std::deque<Face> queue;
  vertex_done[static_cast<std::size_t>(s)] = 1;
  for (Face f : emb.faces_around(s)) {
    if (face_dist[static_cast<std::size_t>(f)] == kUnset) {
      face_dist[static_cast<std::size_t>(f)] = 1;
      queue.push_back(f);
    }
  }
  while (!queue.empty()) {
    const Face f = queue.front();
    queue.pop_front();
    const int dist = face_dist[static_cast<std::size_t>(f)];
    if (at_t[static_cast<std::size_t>(f)]) return dist;
    for (Dart d : emb.face_darts(f)) {
      const Vertex v = emb.tail(d);
      if (vertex_done[static_cast<std::size_t>(v)]) continue;
      vertex_done[static_cast<std::size_t>(v)] = 1;
      for (Face g : emb.faces_around(v)) {
        if (face_dist[static_cast<std::size_t>(g)] == kUnset) {
          face_dist[static_cast<std::size_t>(g)] = dist + 1;
          queue.push_back(g);
        }
      }
    }
  }
  throw Error(ErrorKind::Disconnected, "no face sequence reaches t");
}

inline int compute_phi(const PlanarEmbedding& emb) { return compute_phi(emb, emb.s(), emb.t()); }

}  // namespace planarflow
