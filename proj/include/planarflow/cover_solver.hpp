#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "planarflow/dual_sp.hpp"
#include "planarflow/potential.hpp"
#include "planarflow/surgery.hpp"

namespace planarflow {

struct FlowResult {
  FlowAssignment flow;  // with respect to the caller's capacities
  Amount value = 0;
  SpStats stats;
  int phi = 0;
  int k = 0;
  int iterations = 0;
  std::string solver;
};

namespace detail {

// Depth-first search backwards from t over darts accepted by `usable`. At t
// the darts are tried counterclockwise starting just before the f_t corner; at
// a vertex reached through dart a (leaving it) counterclockwise from rot_prev(a).
template <class Usable>
std::optional<Path> leftmost_search(const PlanarEmbedding& emb, Usable usable) {
  struct Frame {
    Vertex v;
    Dart next;
    std::size_t tried;
    Dart via;
  };
  std::vector<char> visited(static_cast<std::size_t>(emb.vertex_count()), 0);
  std::vector<Frame> stack{{emb.t(), emb.rot_prev(emb.ft_corner()), 0, kNoDart}};
  visited[static_cast<std::size_t>(emb.t())] = 1;
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.tried == emb.degree(top.v)) {
      stack.pop_back();
      continue;
    }
    const Dart e = top.next;
    top.next = emb.rot_prev(e);
    ++top.tried;
    const Dart a = rev(e);
    const Vertex u = emb.tail(a);
    if (visited[static_cast<std::size_t>(u)] || !usable(a)) continue;
    visited[static_cast<std::size_t>(u)] = 1;
    stack.push_back({u, emb.rot_prev(a), 0, a});
    if (u == emb.s()) {
      Path p;
      for (auto it = stack.rbegin(); it != stack.rend() && it->via != kNoDart; ++it) p.darts.push_back(it->via);
      return p;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Leftmost simple residual s-to-t path for clockwise-acyclic capacities.
inline std::optional<Path> leftmost_residual_path(const PlanarEmbedding& emb, const CapacityFn& c) {
  require_sizes(emb, c.size(), "capacity");
  if (!is_cw_acyclic(emb, c)) throw Error(ErrorKind::NotCwAcyclic, "capacities admit a clockwise residual cycle");
  return detail::leftmost_search(emb, [&](Dart a) { return c[a] > 0; });
}

inline std::optional<Path> leftmost_residual_path(const PlanarEmbedding& emb, const CapacityFn& c, Vertex s, Vertex t) {
  if (s == emb.s() && t == emb.t()) return leftmost_residual_path(emb, c);
  return leftmost_residual_path(emb.with_terminals(s, t), c);
}

namespace detail {

struct CoverValue {
  CoverGraph cover;
  Amount value = 0;
};

inline CoverValue cover_value(const PlanarEmbedding& emb, const CapacityFn& c0, int phi, SpStats* stats) {
  if (phi < 1) throw Error(ErrorKind::InvalidArgument, "phi must be positive");
  // Without a residual path the value is 0; any simple s-to-t path still
  // serves as the cut so the pipeline keeps its shape.
  auto l = leftmost_residual_path(emb, c0);
  if (!l) l = leftmost_search(emb, [](Dart) { return true; });
  if (!l) throw Error(ErrorKind::Disconnected, "t is unreachable from s");
  const int k = 4 * phi + 1;
  CoverValue out{attach_super_terminals(build_cover(emb, *l, k, c0), c0.total() + 1), 0};
  const auto& cemb = out.cover.embedding();
  const auto h = hassin_max_flow(cemb, out.cover.capacity(), cemb.s(), cemb.t(), cemb.f_t(), stats);
  out.value = h.flow[forward_dart(out.cover.source_arc(2 * phi))];
  return out;
}

}  // namespace detail

/// Maximum flow value read off the super-arc into s^{2 phi} of a cover with 4 phi + 1 copies.
inline Amount max_flow_value_via_cover(const PlanarEmbedding& emb, const CapacityFn& c0, Vertex s, Vertex t, int phi,
                                       SpStats* stats = nullptr) {
  const PlanarEmbedding& g = (s == emb.s() && t == emb.t()) ? emb : emb.with_terminals(s, t);
  require_sizes(g, c0.size(), "capacity");
  return detail::cover_value(g, c0, phi, stats).value;
}

inline FlowResult max_flow_via_cover(const PlanarEmbedding& emb, const CapacityFn& c) {
  require_sizes(emb, c.size(), "capacity");
  FlowResult out{FlowAssignment(c.size()), 0, {}, compute_phi(emb), 0, 0, "cover"};
  auto knk = knk_normalize(emb, c, &out.stats);
  auto cv = detail::cover_value(emb, knk.residual, out.phi, &out.stats);
  out.k = cv.cover.k();
  const CoverGraph rewritten = cv.cover.with_super_capacity(cv.value);
  const auto& cemb = rewritten.embedding();
  const auto h = hassin_max_flow(cemb, rewritten.capacity(), cemb.s(), cemb.t(), cemb.f_t(), &out.stats);
  out.flow = knk.circulation + extract_copy_flow(rewritten, h.flow, 2 * out.phi + 1);
  out.value = flow_value(emb, out.flow, emb.s());
  return out;
}

inline FlowResult max_flow_via_cover(const PlanarEmbedding& emb, const CapacityFn& c, Vertex s, Vertex t) {
  if (s == emb.s() && t == emb.t()) return max_flow_via_cover(emb, c);
  return max_flow_via_cover(emb.with_terminals(s, t), c);
}

}  // namespace planarflow
