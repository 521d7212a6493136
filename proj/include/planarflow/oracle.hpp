#pragma once

#include <deque>
#include <limits>
#include <string>
#include <vector>

#include "planarflow/dual_sp.hpp"
#include "planarflow/flow.hpp"

namespace planarflow {

struct OracleResult {
  Amount value = 0;
  FlowAssignment flow;
  std::vector<Dart> min_cut;  // darts from the s side to the t side
};

// Shortest augmenting paths over darts. Only tail/head incidences are read; the
// rotation system plays no part.
inline OracleResult edmonds_karp(const PlanarEmbedding& emb, const CapacityFn& c, Vertex s, Vertex t) {
  require_sizes(emb, c.size(), "capacity");
  const auto n = static_cast<std::size_t>(emb.vertex_count());
  std::vector<std::vector<Dart>> out_darts(n);
  for (Dart d = 0; d < emb.dart_count(); ++d) out_darts[static_cast<std::size_t>(emb.tail(d))].push_back(d);

  std::vector<Amount> r(c.values().begin(), c.values().end());
  OracleResult res{0, FlowAssignment(c.size()), {}};
  std::vector<Dart> parent(n);
  auto bfs = [&] {
    std::fill(parent.begin(), parent.end(), kNoDart);
    std::vector<char> seen(n, 0);
    seen[static_cast<std::size_t>(s)] = 1;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Dart d : out_darts[static_cast<std::size_t>(v)]) {
        const Vertex w = emb.head(d);
        if (r[static_cast<std::size_t>(d)] > 0 && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          parent[static_cast<std::size_t>(w)] = d;
          queue.push_back(w);
        }
      }
    }
    return seen;
  };

  for (;;) {
    const auto seen = bfs();
    if (!seen[static_cast<std::size_t>(t)]) {
      for (Dart d = 0; d < emb.dart_count(); ++d) {
        if (seen[static_cast<std::size_t>(emb.tail(d))] && !seen[static_cast<std::size_t>(emb.head(d))] && c[d] > 0) {
          res.min_cut.push_back(d);
        }
      }
      break;
    }
    Amount bottleneck = std::numeric_limits<Amount>::max();
    for (Vertex v = t; v != s; v = emb.tail(parent[static_cast<std::size_t>(v)])) {
      bottleneck = std::min(bottleneck, r[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])]);
    }
    for (Vertex v = t; v != s; v = emb.tail(parent[static_cast<std::size_t>(v)])) {
      const Dart d = parent[static_cast<std::size_t>(v)];
      r[static_cast<std::size_t>(d)] -= bottleneck;
      r[static_cast<std::size_t>(rev(d))] += bottleneck;
      res.flow.add(d, bottleneck);
    }
    res.value += bottleneck;
  }
  return res;
}

inline OracleResult edmonds_karp(const PlanarEmbedding& emb, const CapacityFn& c) {
  return edmonds_karp(emb, c, emb.s(), emb.t());
}

/// All simple s-to-t paths through darts with positive capacity.
inline std::vector<Path> enumerate_residual_paths(const PlanarEmbedding& emb, const CapacityFn& c, Vertex s, Vertex t,
                                                  std::size_t max_count) {
  require_sizes(emb, c.size(), "capacity");
  std::vector<Path> out;
  std::vector<char> on_path(static_cast<std::size_t>(emb.vertex_count()), 0);
  Path current;
  auto dfs = [&](auto&& self, Vertex v) -> void {
    if (v == t) {
      if (out.size() == max_count) {
        throw Error(ErrorKind::TooManyPaths, "more than " + std::to_string(max_count) + " residual paths");
      }
      out.push_back(current);
      return;
    }
    on_path[static_cast<std::size_t>(v)] = 1;
    for (Dart d : emb.rotation(v)) {
      const Vertex w = emb.head(d);
      if (c[d] <= 0 || on_path[static_cast<std::size_t>(w)]) continue;
      current.darts.push_back(d);
      self(self, w);
      current.darts.pop_back();
    }
    on_path[static_cast<std::size_t>(v)] = 0;
  };
  dfs(dfs, s);
  return out;
}

struct VerificationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;

  bool ok() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
  const VerificationCheck* find(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

inline VerificationReport verify_flow(const PlanarEmbedding& emb, const CapacityFn& c, const FlowAssignment& f,
                                      Vertex s, Vertex t, bool require_leftmost) {
  VerificationReport rep;
  auto add = [&](std::string name, bool passed, std::string detail = {}) {
    rep.checks.push_back({std::move(name), passed, std::move(detail)});
  };
  if (static_cast<Dart>(c.size()) != emb.dart_count() || static_cast<Dart>(f.size()) != emb.dart_count()) {
    add("sizes", false, "capacity or flow size does not match the graph");
    return rep;
  }

  Dart bad = kNoDart;
  for (Dart d = 0; d < emb.dart_count() && bad == kNoDart; ++d) {
    if (f[d] != -f[rev(d)]) bad = d;
  }
  add("antisymmetry", bad == kNoDart, bad == kNoDart ? "" : "dart " + std::to_string(bad));

  bad = kNoDart;
  for (Dart d = 0; d < emb.dart_count() && bad == kNoDart; ++d) {
    if (f[d] > c[d]) bad = d;
  }
  const bool feasible = bad == kNoDart;
  add("capacity", feasible, feasible ? "" : "dart " + std::to_string(bad));

  Vertex unbalanced = kNoVertex;
  for (Vertex v = 0; v < emb.vertex_count() && unbalanced == kNoVertex; ++v) {
    if (v != s && v != t && net_flow(emb, f, v) != 0) unbalanced = v;
  }
  add("conservation", unbalanced == kNoVertex, unbalanced == kNoVertex ? "" : "vertex " + std::to_string(unbalanced));

  const Amount value = flow_value(emb, f, s);
  if (!feasible) {
    add("maximality", false, "flow is infeasible");
  } else {
    const bool reaches = residual_reachable(emb, residual(c, f), s)[static_cast<std::size_t>(t)];
    add("maximality", !reaches, reaches ? "residual s-to-t path exists" : "");
  }
  const Amount expected = edmonds_karp(emb, c, s, t).value;
  add("value", value == expected, "value " + std::to_string(value) + ", oracle " + std::to_string(expected));

  if (require_leftmost) {
    if (!feasible) {
      add("leftmost", false, "flow is infeasible");
    } else {
      const PlanarEmbedding& g = (s == emb.s() && t == emb.t()) ? emb : emb.with_terminals(s, t);
      const bool zero = knk_normalize(g, residual(c, f)).circulation.is_zero();
      add("leftmost", zero, zero ? "" : "a clockwise residual cycle remains");
    }
  }
  return rep;
}

}  // namespace planarflow
