#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "planarflow/types.hpp"

namespace planarflow {

struct ArcEnds {
  Vertex tail = kNoVertex;
  Vertex head = kNoVertex;
};

class PlanarEmbedding;

PlanarEmbedding build_embedding(Vertex vertex_count, std::span<const ArcEnds> arcs,
                                std::vector<std::vector<Dart>> rotations, Vertex s, Vertex t,
                                std::optional<Dart> fs_corner = std::nullopt,
                                std::optional<Dart> ft_corner = std::nullopt);

// Dart-based rotation system on the sphere.
//
// Rotations list the darts leaving each vertex in clockwise order. A face is
// traced by face_next(d) = rot_next(rev(d)), which walks the face on the left
// of d. A "corner" at vertex v is named by a dart c leaving v and denotes the
// wedge between rot_prev(c) and c, i.e. the face left_face(c).
//
// f_s and f_t are stored as corners; f_t is the infinite face for every notion
// of clockwise in this library.
class PlanarEmbedding {
 public:
  PlanarEmbedding() = default;

  Vertex vertex_count() const noexcept { return static_cast<Vertex>(rotation_.size()); }
  Dart dart_count() const noexcept { return static_cast<Dart>(tail_.size()); }
  std::int32_t edge_count() const noexcept { return dart_count() / 2; }
  Face face_count() const noexcept { return static_cast<Face>(face_darts_.size()); }

  Vertex tail(Dart d) const { return tail_[static_cast<std::size_t>(d)]; }
  Vertex head(Dart d) const { return tail_[static_cast<std::size_t>(rev(d))]; }

  std::span<const Dart> rotation(Vertex v) const { return rotation_[static_cast<std::size_t>(v)]; }
  std::size_t degree(Vertex v) const { return rotation_[static_cast<std::size_t>(v)].size(); }
  std::size_t position(Dart d) const { return position_[static_cast<std::size_t>(d)]; }

  /// Clockwise successor of d around tail(d).
  Dart rot_next(Dart d) const {
    const auto& rot = rotation_[static_cast<std::size_t>(tail(d))];
    return rot[(position(d) + 1) % rot.size()];
  }
  /// Counterclockwise successor of d around tail(d).
  Dart rot_prev(Dart d) const {
    const auto& rot = rotation_[static_cast<std::size_t>(tail(d))];
    return rot[(position(d) + rot.size() - 1) % rot.size()];
  }
  Dart face_next(Dart d) const { return rot_next(rev(d)); }

  Face left_face(Dart d) const { return face_of_[static_cast<std::size_t>(d)]; }
  Face right_face(Dart d) const { return face_of_[static_cast<std::size_t>(rev(d))]; }

  /// Darts with f on their left, in face-traversal order.
  std::span<const Dart> face_darts(Face f) const { return face_darts_[static_cast<std::size_t>(f)]; }

  Vertex s() const noexcept { return s_; }
  Vertex t() const noexcept { return t_; }
  Dart fs_corner() const noexcept { return fs_corner_; }
  Dart ft_corner() const noexcept { return ft_corner_; }
  Face f_s() const { return left_face(fs_corner_); }
  Face f_t() const { return left_face(ft_corner_); }

  /// Arc endpoints in arc order, suitable for rebuilding a modified embedding.
  std::vector<ArcEnds> arcs() const {
    std::vector<ArcEnds> out(static_cast<std::size_t>(edge_count()));
    for (std::int32_t a = 0; a < edge_count(); ++a) {
      out[static_cast<std::size_t>(a)] = {tail(forward_dart(a)), head(forward_dart(a))};
    }
    return out;
  }
  std::vector<std::vector<Dart>> rotations() const { return rotation_; }

  /// Faces incident to v, one entry per corner (a face may repeat).
  std::vector<Face> faces_around(Vertex v) const {
    std::vector<Face> out;
    for (Dart d : rotation(v)) out.push_back(left_face(d));
    return out;
  }

  /// A dart leaving v whose corner lies in face f, if any.
  std::optional<Dart> corner_in_face(Vertex v, Face f) const {
    for (Dart d : rotation(v)) {
      if (left_face(d) == f) return d;
    }
    return std::nullopt;
  }

  /// Returns a copy with different designated terminals and corners.
  PlanarEmbedding with_terminals(Vertex s, Vertex t, std::optional<Dart> fs_corner = std::nullopt,
                                 std::optional<Dart> ft_corner = std::nullopt) const {
    PlanarEmbedding out = *this;
    out.s_ = s;
    out.t_ = t;
    out.fs_corner_ = out.resolve_corner(s, fs_corner, "f_s");
    out.ft_corner_ = out.resolve_corner(t, ft_corner, "f_t");
    return out;
  }

 private:
  friend PlanarEmbedding build_embedding(Vertex, std::span<const ArcEnds>,
                                         std::vector<std::vector<Dart>>, Vertex, Vertex,
                                         std::optional<Dart>, std::optional<Dart>);

  Dart resolve_corner(Vertex v, std::optional<Dart> hint, const char* name) const {
    if (v < 0 || v >= vertex_count()) {
      throw Error(ErrorKind::InvalidArgument, std::string("terminal for ") + name + " out of range");
    }
    if (rotation(v).empty()) {
      throw Error(ErrorKind::Disconnected, std::string("terminal for ") + name + " is isolated");
    }
    if (!hint) return rotation(v).front();
    if (*hint < 0 || *hint >= dart_count() || tail(*hint) != v) {
      throw Error(ErrorKind::InvalidArgument,
                  std::string("corner hint for ") + name + " must be a dart leaving its terminal");
    }
    return *hint;
  }

  std::vector<Vertex> tail_;
  std::vector<std::vector<Dart>> rotation_;
  std::vector<std::size_t> position_;
  std::vector<Face> face_of_;
  std::vector<std::vector<Dart>> face_darts_;
  Vertex s_ = kNoVertex;
  Vertex t_ = kNoVertex;
  Dart fs_corner_ = kNoDart;
  Dart ft_corner_ = kNoDart;
};

inline PlanarEmbedding build_embedding(Vertex vertex_count, std::span<const ArcEnds> arcs,
                                       std::vector<std::vector<Dart>> rotations, Vertex s, Vertex t,
                                       std::optional<Dart> fs_corner, std::optional<Dart> ft_corner) {
  if (vertex_count < 1) throw Error(ErrorKind::InvalidArgument, "vertex count must be positive");
  if (static_cast<Vertex>(rotations.size()) != vertex_count) {
    throw Error(ErrorKind::MalformedRotation,
                "expected " + std::to_string(vertex_count) + " rotations, got " +
                    std::to_string(rotations.size()));
  }
  const Dart dart_count = static_cast<Dart>(2 * arcs.size());

  PlanarEmbedding emb;
  emb.tail_.resize(static_cast<std::size_t>(dart_count));
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const auto [u, v] = arcs[a];
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
      throw Error(ErrorKind::InvalidArgument, "arc " + std::to_string(a) + " endpoint out of range");
    }
    if (u == v) throw Error(ErrorKind::SelfLoop, "arc " + std::to_string(a) + " is a self-loop");
    emb.tail_[2 * a] = u;
    emb.tail_[2 * a + 1] = v;
  }

  emb.position_.assign(static_cast<std::size_t>(dart_count), 0);
  std::vector<char> seen(static_cast<std::size_t>(dart_count), 0);
  for (Vertex v = 0; v < vertex_count; ++v) {
    const auto& rot = rotations[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < rot.size(); ++i) {
      const Dart d = rot[i];
      if (d < 0 || d >= dart_count) {
        throw Error(ErrorKind::MalformedRotation,
                    "rotation of vertex " + std::to_string(v) + " names unknown dart " + std::to_string(d));
      }
      if (seen[static_cast<std::size_t>(d)]) {
        throw Error(ErrorKind::MalformedRotation, "dart " + std::to_string(d) + " appears twice in rotations");
      }
      if (emb.tail_[static_cast<std::size_t>(d)] != v) {
        throw Error(ErrorKind::MalformedRotation,
                    "dart " + std::to_string(d) + " listed at vertex " + std::to_string(v) + " but leaves vertex " +
                        std::to_string(emb.tail_[static_cast<std::size_t>(d)]));
      }
      seen[static_cast<std::size_t>(d)] = 1;
      emb.position_[static_cast<std::size_t>(d)] = i;
    }
  }
  for (Dart d = 0; d < dart_count; ++d) {
    if (!seen[static_cast<std::size_t>(d)]) {
      throw Error(ErrorKind::MalformedRotation, "dart " + std::to_string(d) + " missing from rotations");
    }
  }
  emb.rotation_ = std::move(rotations);

  // Connectivity over the underlying undirected graph.
  {
    std::vector<char> reached(static_cast<std::size_t>(vertex_count), 0);
    std::vector<Vertex> stack{0};
    reached[0] = 1;
    Vertex count = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Dart d : emb.rotation_[static_cast<std::size_t>(v)]) {
        const Vertex w = emb.head(d);
        if (!reached[static_cast<std::size_t>(w)]) {
          reached[static_cast<std::size_t>(w)] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    if (count != vertex_count) {
      throw Error(ErrorKind::Disconnected, std::to_string(vertex_count - count) + " vertices unreachable from vertex 0");
    }
  }

  emb.face_of_.assign(static_cast<std::size_t>(dart_count), kNoFace);
  for (Dart start = 0; start < dart_count; ++start) {
    if (emb.face_of_[static_cast<std::size_t>(start)] != kNoFace) continue;
    const Face f = static_cast<Face>(emb.face_darts_.size());
    auto& boundary = emb.face_darts_.emplace_back();
    Dart d = start;
    do {
      emb.face_of_[static_cast<std::size_t>(d)] = f;
      boundary.push_back(d);
      d = emb.face_next(d);
    } while (d != start);
  }

  const std::int64_t euler = static_cast<std::int64_t>(vertex_count) - dart_count / 2 + emb.face_count();
  if (euler != 2) {
    throw Error(ErrorKind::NonPlanarRotation,
                "Euler characteristic " + std::to_string(euler) + " != 2 (V=" + std::to_string(vertex_count) +
                    ", E=" + std::to_string(dart_count / 2) + ", F=" + std::to_string(emb.face_count()) + ")");
  }

  if (s == t) throw Error(ErrorKind::InvalidArgument, "source and sink coincide");
  emb.s_ = s;
  emb.t_ = t;
  emb.fs_corner_ = emb.resolve_corner(s, fs_corner, "f_s");
  emb.ft_corner_ = emb.resolve_corner(t, ft_corner, "f_t");
  return emb;
}

}  // namespace planarflow
