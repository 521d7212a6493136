#pragma once

#include <deque>
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "planarflow/embedding.hpp"
#include "planarflow/flow.hpp"
#include "planarflow/potential.hpp"

namespace planarflow {

/// Accumulates shortest-path work. Callers own it and pass it down explicitly.
struct SpStats {
  std::int64_t shortest_path_count = 0;
  std::int64_t pq_operations = 0;

  SpStats& operator+=(const SpStats& o) {
    shortest_path_count += o.shortest_path_count;
    pq_operations += o.pq_operations;
    return *this;
  }
};

struct DualDistances {
  std::vector<Amount> distance;  // per face
  std::vector<Dart> parent;      // primal dart whose dual reached the face; kNoDart at the root
  Face root = kNoFace;

  Amount operator[](Face f) const { return distance[static_cast<std::size_t>(f)]; }
};

// Dijkstra over the dual. The dual of dart d runs from left_face(d) to
// right_face(d) with length c[d]; binary heap with lazy deletion.
inline DualDistances dijkstra_dual(const PlanarEmbedding& emb, const CapacityFn& length, Face root,
                                   SpStats* stats = nullptr) {
  require_sizes(emb, length.size(), "capacity");
  if (root < 0 || root >= emb.face_count()) throw Error(ErrorKind::InvalidArgument, "root face out of range");
  constexpr Amount kInf = std::numeric_limits<Amount>::max();
  DualDistances out;
  out.root = root;
  out.distance.assign(static_cast<std::size_t>(emb.face_count()), kInf);
  out.parent.assign(static_cast<std::size_t>(emb.face_count()), kNoDart);

  using Entry = std::pair<Amount, Face>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  std::int64_t ops = 0;
  out.distance[static_cast<std::size_t>(root)] = 0;
  heap.emplace(0, root);
  ++ops;
  while (!heap.empty()) {
    const auto [dist, face] = heap.top();
    heap.pop();
    ++ops;
    if (dist != out.distance[static_cast<std::size_t>(face)]) continue;
    for (Dart d : emb.face_darts(face)) {
      const Face next = emb.right_face(d);
      const Amount candidate = dist + length[d];
      if (candidate < out.distance[static_cast<std::size_t>(next)]) {
        out.distance[static_cast<std::size_t>(next)] = candidate;
        out.parent[static_cast<std::size_t>(next)] = d;
        heap.emplace(candidate, next);
        ++ops;
      }
    }
  }
  if (stats) {
    ++stats->shortest_path_count;
    stats->pq_operations += ops;
  }
  return out;
}

struct HassinResult {
  FlowAssignment flow;
  Amount value = 0;
};

// Maximum s-to-t flow when s and t share `common_face`. An artificial t->s arc
// with capacity 1 + sum(c) is drawn inside that face; distances from the face
// on its left give potentials whose differences are the leftmost maximum flow.
inline HassinResult hassin_max_flow(const PlanarEmbedding& emb, const CapacityFn& c, Vertex s, Vertex t,
                                    Face common_face, SpStats* stats = nullptr) {
  require_sizes(emb, c.size(), "capacity");
  const auto corner_t = emb.corner_in_face(t, common_face);
  const auto corner_s = emb.corner_in_face(s, common_face);
  if (!corner_t || !corner_s) {
    throw Error(ErrorKind::NotCofacial, "vertices " + std::to_string(s) + " and " + std::to_string(t) +
                                            " are not both on face " + std::to_string(common_face));
  }

  auto arcs = emb.arcs();
  auto rotations = emb.rotations();
  const Dart ts = static_cast<Dart>(2 * arcs.size());
  arcs.push_back({t, s});
  auto insert_before = [&](Vertex v, Dart before, Dart inserted) {
    auto& rot = rotations[static_cast<std::size_t>(v)];
    rot.insert(rot.begin() + static_cast<std::ptrdiff_t>(emb.position(before)), inserted);
  };
  insert_before(t, *corner_t, ts);
  insert_before(s, *corner_s, rev(ts));
  const PlanarEmbedding augmented = build_embedding(emb.vertex_count(), arcs, std::move(rotations), s, t);

  std::vector<Amount> lengths(c.values().begin(), c.values().end());
  lengths.push_back(c.total() + 1);
  lengths.push_back(0);
  const auto dist = dijkstra_dual(augmented, CapacityFn(std::move(lengths)), augmented.left_face(ts), stats);

  HassinResult out{FlowAssignment(static_cast<std::size_t>(emb.dart_count())), 0};
  for (Dart d = 0; d < emb.dart_count(); d += 2) {
    out.flow.set(d, dist[augmented.right_face(d)] - dist[augmented.left_face(d)]);
  }
  out.value = dist[augmented.right_face(ts)] - dist[augmented.left_face(ts)];
  return out;
}

inline HassinResult hassin_max_flow(const PlanarEmbedding& emb, const CapacityFn& c, SpStats* stats = nullptr) {
  return hassin_max_flow(emb, c, emb.s(), emb.t(), emb.f_t(), stats);
}

struct KnkResult {
  FlowAssignment circulation;
  CapacityFn residual;  // c0, clockwise acyclic
};

/// Saturates every clockwise residual cycle using dual distances from f_t as potentials.
inline KnkResult knk_normalize(const PlanarEmbedding& emb, const CapacityFn& c, SpStats* stats = nullptr) {
  const auto dist = dijkstra_dual(emb, c, emb.f_t(), stats);
  FlowAssignment circ(static_cast<std::size_t>(emb.dart_count()));
  for (Dart d = 0; d < emb.dart_count(); d += 2) {
    circ.set(d, dist[emb.right_face(d)] - dist[emb.left_face(d)]);
  }
  CapacityFn c0 = residual(c, circ);
  return {std::move(circ), std::move(c0)};
}

// No clockwise cycle is residual iff the leftmost circulation is zero, i.e.
// every face is at dual distance 0 from f_t. Only zero-length dual darts
// matter, so a plain search suffices.
inline bool is_cw_acyclic(const PlanarEmbedding& emb, const CapacityFn& c) {
  require_sizes(emb, c.size(), "capacity");
  std::vector<char> reached(static_cast<std::size_t>(emb.face_count()), 0);
  std::deque<Face> queue{emb.f_t()};
  reached[static_cast<std::size_t>(emb.f_t())] = 1;
  Face count = 1;
  while (!queue.empty()) {
    const Face f = queue.front();
    queue.pop_front();
    for (Dart d : emb.face_darts(f)) {
      const Face g = emb.right_face(d);
      if (c[d] == 0 && !reached[static_cast<std::size_t>(g)]) {
        reached[static_cast<std::size_t>(g)] = 1;
        ++count;
        queue.push_back(g);
      }
    }
  }
  return count == emb.face_count();
}

}  // namespace planarflow
