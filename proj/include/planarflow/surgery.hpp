#pragma once

#include <optional>
#include <string>
#include <vector>

#include "planarflow/embedding.hpp"
#include "planarflow/flow.hpp"
#include "planarflow/path.hpp"

namespace planarflow {

// G cut open along a simple s-to-t path P. Interior vertices of P are split;
// s and t are not, so P_L and P_R share endpoints and bound one new face (the
// slit), which becomes f_t of the cut embedding.
//
// Original path darts form P_L. Path arc j gets a copy with arc id m + j (same
// orientation) forming P_R. The right copy of interior vertex i of P has id
// n + i - 1. Darts on the left of P move to P_R.
struct CutGraph {
  PlanarEmbedding embedding;
  CapacityFn capacity;
  std::vector<Dart> base_dart;  // per cut dart
  Path left_copy;               // P_L
  Path right_copy;              // P_R
  Face slit_face = kNoFace;
  CapacityFn base_capacity;
};

inline CutGraph cut_open(const PlanarEmbedding& emb, const Path& p, const CapacityFn& c) {
  require_simple_st_path(emb, p);
  require_sizes(emb, c.size(), "capacity");
  const PathSides sides(emb, p);
  const Vertex n = emb.vertex_count();
  const std::int32_t m = emb.edge_count();
  const std::size_t len = p.size();

  auto arcs = emb.arcs();
  auto rotations = emb.rotations();
  auto right_vertex = [&](std::size_t i) { return static_cast<Vertex>(n + static_cast<Vertex>(i) - 1); };
  auto right_dart = [&](std::size_t j) {
    const Dart base = forward_dart(m + static_cast<std::int32_t>(j));
    return (p.darts[j] & 1) ? rev(base) : base;
  };

  for (std::size_t j = 0; j < len; ++j) {
    const Dart d = p.darts[j];
    Vertex u = emb.tail(d);
    Vertex v = emb.head(d);
    if (j > 0) u = right_vertex(j);
    if (j + 1 < len) v = right_vertex(j + 1);
    arcs.push_back((d & 1) ? ArcEnds{v, u} : ArcEnds{u, v});
  }
  rotations.resize(static_cast<std::size_t>(n) + len - 1);

  const auto verts = path_vertices(emb, p);
  for (std::size_t i = 1; i < len; ++i) {
    const Vertex v = verts[i];
    const Dart in_rev = rev(p.darts[i - 1]);
    const Dart out = p.darts[i];
    std::vector<Dart> left_rot{rev(right_dart(i - 1))};
    std::vector<Dart> right_rot{out};
    for (Dart d = emb.rot_next(in_rev); d != out; d = emb.rot_next(d)) {
      left_rot.push_back(d);
      auto& arc = arcs[static_cast<std::size_t>(arc_of(d))];
      ((d & 1) ? arc.head : arc.tail) = right_vertex(i);
    }
    for (Dart d = emb.rot_next(out); d != in_rev; d = emb.rot_next(d)) right_rot.push_back(d);
    right_rot.push_back(in_rev);
    left_rot.push_back(right_dart(i));
    rotations[static_cast<std::size_t>(v)] = std::move(right_rot);
    rotations[static_cast<std::size_t>(right_vertex(i))] = std::move(left_rot);
  }

  const Dart first = p.darts.front();
  const Dart last_rev = rev(p.darts.back());
  {
    auto& rot = rotations[static_cast<std::size_t>(verts.front())];
    rot.insert(rot.begin() + static_cast<std::ptrdiff_t>(emb.position(first)), right_dart(0));
  }
  {
    auto& rot = rotations[static_cast<std::size_t>(verts.back())];
    rot.insert(rot.begin() + static_cast<std::ptrdiff_t>(emb.position(last_rev)) + 1, rev(right_dart(len - 1)));
  }

  CutGraph out;
  const auto cut_n = static_cast<Vertex>(rotations.size());
  out.embedding = build_embedding(cut_n, arcs, std::move(rotations), emb.s(), emb.t(),
                                  first, rev(right_dart(len - 1)));
  out.slit_face = out.embedding.f_t();
  out.base_dart.resize(static_cast<std::size_t>(out.embedding.dart_count()));
  for (Dart d = 0; d < emb.dart_count(); ++d) out.base_dart[static_cast<std::size_t>(d)] = d;
  std::vector<Amount> cap(c.values().begin(), c.values().end());
  cap.resize(static_cast<std::size_t>(out.embedding.dart_count()));
  for (std::size_t j = 0; j < len; ++j) {
    const Dart d = right_dart(j);
    out.base_dart[static_cast<std::size_t>(d)] = p.darts[j];
    out.base_dart[static_cast<std::size_t>(rev(d))] = rev(p.darts[j]);
    cap[static_cast<std::size_t>(d)] = c[p.darts[j]];
    cap[static_cast<std::size_t>(rev(d))] = c[rev(p.darts[j])];
    out.right_copy.darts.push_back(d);
  }
  out.left_copy = p;
  out.capacity = CapacityFn(std::move(cap));
  out.base_capacity = c;
  return out;
}

/// Sums cut-graph flow over the preimages of each base dart.
inline FlowAssignment map_back_summed(const CutGraph& cut, const FlowAssignment& f_cut) {
  require_sizes(cut.embedding, f_cut.size(), "flow");
  FlowAssignment out(cut.base_capacity.size());
  for (Dart d = 0; d < cut.embedding.dart_count(); d += 2) out.add(cut.base_dart[static_cast<std::size_t>(d)], f_cut[d]);
  for (Dart d = 0; d < static_cast<Dart>(out.size()); ++d) {
    if (out[d] > cut.base_capacity[d]) {
      throw Error(ErrorKind::SummedCapacityViolated, "summed flow " + std::to_string(out[d]) + " on dart " +
                                                         std::to_string(d) + " exceeds capacity " +
                                                         std::to_string(cut.base_capacity[d]));
    }
  }
  return out;
}

/// Where a cover dart comes from.
struct CoverDart {
  Dart base = kNoDart;  // kNoDart for super arcs
  int region = -1;      // 0-based copy of a non-boundary dart, -1 on boundaries
  int boundary = -1;    // j for darts of L^j, -1 otherwise
};

// Finite section of the cylinder cover: k copies of G cut along L, where L
// runs from the hole at f_s to the hole at f_t. Copy i (1-based) lies between
// boundary copies L^{i-1} (its left) and L^i. Vertices of L, including s and t,
// have one copy per boundary; other vertices one per copy.
//
// The embedding exists only once super-terminals are attached: without them
// the strip may fall apart into pieces.
class CoverGraph {
 public:
  int k() const noexcept { return k_; }
  const Path& base_path() const noexcept { return base_path_; }
  std::size_t base_dart_count() const noexcept { return base_dart_count_; }

  Vertex vertex_count() const noexcept { return static_cast<Vertex>(vertex_base_.size()); }
  Dart dart_count() const noexcept { return static_cast<Dart>(2 * arcs_.size()); }
  Vertex base_vertex(Vertex v) const { return vertex_base_[static_cast<std::size_t>(v)]; }
  const CoverDart& origin(Dart d) const { return darts_[static_cast<std::size_t>(d)]; }

  /// 1-based copy a dart belongs to; boundary darts of L^j count toward copy j+1 (copy k for L^k).
  int copy_of(Dart d) const {
    const auto& o = origin(d);
    if (o.base == kNoDart) return 0;
    if (o.boundary >= 0) return std::min(o.boundary + 1, k_);
    return o.region + 1;
  }

  const std::vector<Vertex>& s_copies() const noexcept { return s_copies_; }  // s^0..s^k
  const std::vector<Vertex>& t_copies() const noexcept { return t_copies_; }  // t^0..t^k

  bool has_super_terminals() const noexcept { return embedding_.has_value(); }
  Vertex super_source() const noexcept { return super_source_; }
  Vertex super_sink() const noexcept { return super_sink_; }
  /// Arc ids of S->s^j then t^j->T, j = 0..k.
  const std::vector<std::int32_t>& super_arcs() const noexcept { return super_arcs_; }
  std::int32_t source_arc(int j) const { return super_arcs_.at(static_cast<std::size_t>(j)); }

  const PlanarEmbedding& embedding() const {
    if (!embedding_) throw Error(ErrorKind::InvalidArgument, "cover has no super-terminals yet");
    return *embedding_;
  }
  Face outer_face() const { return embedding().f_t(); }
  const CapacityFn& capacity() const noexcept { return capacity_; }

  /// Copy with every super-arc capacity replaced.
  CoverGraph with_super_capacity(Amount cap) const {
    CoverGraph out = *this;
    for (std::int32_t a : super_arcs_) out.capacity_.set(forward_dart(a), cap);
    return out;
  }

  /// Cover vertex of base vertex v in copy (or boundary) j; kNoVertex when absent.
  Vertex lift(Vertex v, int j) const {
    const auto& copies = vertex_copies_[static_cast<std::size_t>(v)];
    if (j < 0 || j >= static_cast<int>(copies.size())) return kNoVertex;
    return copies[static_cast<std::size_t>(j)];
  }

  /// The dart over base dart d leaving cover vertex x, if present in the section.
  std::optional<Dart> lift_dart(Vertex x, Dart d) const {
    for (Dart e : rotations_[static_cast<std::size_t>(x)]) {
      if (origin(e).base == d) return e;
    }
    return std::nullopt;
  }

 private:
  friend CoverGraph build_cover(const PlanarEmbedding&, const Path&, int, const CapacityFn&);
  friend CoverGraph attach_super_terminals(const CoverGraph&, Amount);

  int k_ = 0;
  Path base_path_;
  std::size_t base_dart_count_ = 0;
  std::vector<Vertex> vertex_base_;
  std::vector<std::vector<Vertex>> vertex_copies_;
  std::vector<ArcEnds> arcs_;
  std::vector<CoverDart> darts_;
  std::vector<std::vector<Dart>> rotations_;  // lifted rotations; s^j and t^j start at the hole
  std::vector<Vertex> s_copies_, t_copies_;
  Vertex super_source_ = kNoVertex, super_sink_ = kNoVertex;
  std::vector<std::int32_t> super_arcs_;
  std::optional<PlanarEmbedding> embedding_;
  CapacityFn capacity_;
  Dart outer_dart_ = kNoDart;
};

inline CoverGraph build_cover(const PlanarEmbedding& emb, const Path& l, int k, const CapacityFn& c) {
  require_simple_st_path(emb, l);
  require_sizes(emb, c.size(), "capacity");
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "cover needs k >= 1");
  const PathSides sides(emb, l);

  CoverGraph cover;
  cover.k_ = k;
  cover.base_path_ = l;
  cover.base_dart_count_ = static_cast<std::size_t>(emb.dart_count());

  cover.vertex_copies_.resize(static_cast<std::size_t>(emb.vertex_count()));
  for (Vertex v = 0; v < emb.vertex_count(); ++v) {
    const int copies = sides.on_path(v) ? k + 1 : k;
    for (int j = 0; j < copies; ++j) {
      cover.vertex_copies_[static_cast<std::size_t>(v)].push_back(static_cast<Vertex>(cover.vertex_base_.size()));
      cover.vertex_base_.push_back(v);
    }
  }

  std::vector<char> on_l(static_cast<std::size_t>(emb.edge_count()), 0);
  for (Dart d : l.darts) on_l[static_cast<std::size_t>(arc_of(d))] = 1;

  // Copy of the endpoint at tail(d) for the lift of d in region r.
  auto end_copy = [&](Dart d, int r) {
    if (!sides.on_path(emb.tail(d))) return r;
    return sides.side(d) == Side::Left ? r + 1 : r;
  };

  std::vector<std::int32_t> arc_offset(static_cast<std::size_t>(emb.edge_count()));
  for (std::int32_t a = 0; a < emb.edge_count(); ++a) {
    arc_offset[static_cast<std::size_t>(a)] = static_cast<std::int32_t>(cover.arcs_.size());
    const Dart d = forward_dart(a);
    if (on_l[static_cast<std::size_t>(a)]) {
      for (int j = 0; j <= k; ++j) {
        cover.arcs_.push_back({cover.lift(emb.tail(d), j), cover.lift(emb.head(d), j)});
        cover.darts_.push_back({d, -1, j});
        cover.darts_.push_back({rev(d), -1, j});
      }
    } else {
      for (int r = 0; r < k; ++r) {
        cover.arcs_.push_back({cover.lift(emb.tail(d), end_copy(d, r)), cover.lift(emb.head(d), end_copy(rev(d), r))});
        cover.darts_.push_back({d, r, -1});
        cover.darts_.push_back({rev(d), r, -1});
      }
    }
  }

  // Lift of base dart d leaving the cover vertex in copy j of tail(d), if any.
  auto lifted = [&](Dart d, int j) -> std::optional<Dart> {
    const std::int32_t a = arc_of(d);
    int instance = j;
    if (!on_l[static_cast<std::size_t>(a)]) {
      if (sides.on_path(emb.tail(d)) && sides.side(d) == Side::Left) instance = j - 1;
      if (instance < 0 || instance >= k) return std::nullopt;
    }
    const Dart base = forward_dart(arc_offset[static_cast<std::size_t>(a)] + instance);
    return (d & 1) ? rev(base) : base;
  };

  cover.rotations_.resize(cover.vertex_base_.size());
  for (Vertex v = 0; v < emb.vertex_count(); ++v) {
    Dart start = emb.rotation(v).front();
    if (v == emb.s()) start = emb.fs_corner();
    if (v == emb.t()) start = emb.ft_corner();
    const auto& copies = cover.vertex_copies_[static_cast<std::size_t>(v)];
    for (int j = 0; j < static_cast<int>(copies.size()); ++j) {
      auto& rot = cover.rotations_[static_cast<std::size_t>(copies[static_cast<std::size_t>(j)])];
      Dart d = start;
      do {
        if (auto e = lifted(d, j)) rot.push_back(*e);
        d = emb.rot_next(d);
      } while (d != start);
    }
  }

  for (int j = 0; j <= k; ++j) {
    cover.s_copies_.push_back(cover.lift(emb.s(), j));
    cover.t_copies_.push_back(cover.lift(emb.t(), j));
  }
  cover.outer_dart_ = *lifted(l.darts.front(), 0);

  std::vector<Amount> cap(cover.darts_.size());
  for (std::size_t d = 0; d < cap.size(); ++d) cap[d] = c[cover.darts_[d].base];
  cover.capacity_ = CapacityFn(std::move(cap));
  return cover;
}

// Adds S below the strip with arcs S->s^j and T above it with arcs t^j->T,
// then embeds the result. S and T share the outer face, bounded by L^0 and L^k.
inline CoverGraph attach_super_terminals(const CoverGraph& cover, Amount cap_per_arc) {
  if (cover.has_super_terminals()) throw Error(ErrorKind::InvalidArgument, "super-terminals already attached");
  if (cap_per_arc <= 0) throw Error(ErrorKind::InvalidArgument, "super-arc capacity must be positive");
  CoverGraph out = cover;
  const int k = cover.k_;
  out.super_source_ = static_cast<Vertex>(out.vertex_base_.size());
  out.super_sink_ = out.super_source_ + 1;
  out.vertex_base_.push_back(kNoVertex);
  out.vertex_base_.push_back(kNoVertex);
  out.rotations_.resize(out.vertex_base_.size());

  auto& s_rot = out.rotations_[static_cast<std::size_t>(out.super_source_)];
  for (int j = 0; j <= k; ++j) {
    const auto a = static_cast<std::int32_t>(out.arcs_.size());
    const Vertex sj = out.s_copies_[static_cast<std::size_t>(j)];
    out.arcs_.push_back({out.super_source_, sj});
    out.darts_.push_back({});
    out.darts_.push_back({});
    out.super_arcs_.push_back(a);
    s_rot.push_back(forward_dart(a));
    auto& rot = out.rotations_[static_cast<std::size_t>(sj)];
    rot.insert(rot.begin(), rev(forward_dart(a)));
  }
  auto& t_rot = out.rotations_[static_cast<std::size_t>(out.super_sink_)];
  for (int j = 0; j <= k; ++j) {
    const auto a = static_cast<std::int32_t>(out.arcs_.size());
    const Vertex tj = out.t_copies_[static_cast<std::size_t>(j)];
    out.arcs_.push_back({tj, out.super_sink_});
    out.darts_.push_back({});
    out.darts_.push_back({});
    out.super_arcs_.push_back(a);
    t_rot.insert(t_rot.begin(), rev(forward_dart(a)));
    auto& rot = out.rotations_[static_cast<std::size_t>(tj)];
    rot.insert(rot.begin(), forward_dart(a));
  }

  std::vector<Amount> cap(out.capacity_.values().begin(), out.capacity_.values().end());
  cap.resize(out.darts_.size(), 0);
  for (std::int32_t a : out.super_arcs_) cap[static_cast<std::size_t>(forward_dart(a))] = cap_per_arc;
  out.capacity_ = CapacityFn(std::move(cap));

  PlanarEmbedding emb = build_embedding(out.vertex_count(), out.arcs_, out.rotations_, out.super_source_, out.super_sink_);
  const Face outer = emb.left_face(out.outer_dart_);
  const auto fs = emb.corner_in_face(out.super_source_, outer);
  const auto ft = emb.corner_in_face(out.super_sink_, outer);
  if (!fs || !ft) throw Error(ErrorKind::NotCofacial, "super-terminals are not on the outer face");
  out.embedding_ = emb.with_terminals(out.super_source_, out.super_sink_, *fs, *ft);
  return out;
}

/// Base flow read from copy i (1-based); boundary darts come from L^{i-1}.
inline FlowAssignment extract_copy_flow(const CoverGraph& cover, const FlowAssignment& f_cover, int copy_index) {
  if (copy_index < 1 || copy_index > cover.k()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "copy " + std::to_string(copy_index) + " outside 1.." + std::to_string(cover.k()));
  }
  if (static_cast<Dart>(f_cover.size()) != cover.dart_count()) {
    throw Error(ErrorKind::InvalidArgument, "flow size does not match cover");
  }
  FlowAssignment out(cover.base_dart_count());
  for (Dart d = 0; d < cover.dart_count(); d += 2) {
    const auto& o = cover.origin(d);
    if (o.base == kNoDart) continue;
    if (o.boundary == copy_index - 1 || o.region == copy_index - 1) out.set(o.base, f_cover[d]);
  }
  return out;
}

}  // namespace planarflow
