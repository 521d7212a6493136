#pragma once

#include <optional>
#include <vector>

#include "planarflow/cover_solver.hpp"

namespace planarflow {

enum class CheckLevel { None, Bounds, Full };

struct IterationRecord {
  Path path;                         // A_i
  Amount augmented = 0;              // flow added in this phase
  std::vector<Crossing> crossings;   // A_i crossing A_{i-1}; filled under Full
  std::optional<bool> cw_acyclic;    // residual capacities after the phase; Full only
  std::optional<bool> monotone;      // crossings non-empty and all right-to-left; Full only, i > 0
  std::optional<bool> order_agrees;  // crossings appear in the same order along both paths; Full only, i > 0
};

struct IterationTrace {
  std::vector<IterationRecord> records;
  std::optional<bool> initial_cw_acyclic;  // c_0; Full only
  std::optional<bool> within_bound;        // iterations <= 2 phi + 1; Bounds and Full

  bool all_checks_pass() const {
    auto ok = [](const std::optional<bool>& b) { return !b || *b; };
    if (!ok(initial_cw_acyclic) || !ok(within_bound)) return false;
    for (const auto& r : records) {
      if (!ok(r.cw_acyclic) || !ok(r.monotone) || !ok(r.order_agrees)) return false;
    }
    return true;
  }
};

inline bool check_invariant_no_cw_cycles(const PlanarEmbedding& emb, const CapacityFn& c) { return is_cw_acyclic(emb, c); }

inline bool check_crossing_monotonicity(const PlanarEmbedding& emb, const Path& prev, const Path& cur) {
  const auto xs = crossings(emb, cur, prev);
  if (xs.empty()) return false;
  for (const auto& x : xs) {
    if (x.direction != CrossingDirection::RightToLeft) return false;
  }
  return true;
}

/// True iff the crossings of cur with prev, taken in prev order, also appear in cur order.
inline bool check_crossing_order(const PlanarEmbedding& emb, const Path& prev, const Path& cur) {
  const auto xs = crossings(emb, cur, prev);
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (xs[i].p_first <= xs[i - 1].p_last) return false;
  }
  return true;
}

struct AdaptiveResult {
  FlowResult result;
  IterationTrace trace;
};

inline AdaptiveResult max_adaptive_flow(const PlanarEmbedding& emb, const CapacityFn& c,
                                        CheckLevel check = CheckLevel::None) {
  require_sizes(emb, c.size(), "capacity");
  AdaptiveResult out{{FlowAssignment(c.size()), 0, {}, 0, 0, 0, "adaptive"}, {}};
  FlowResult& res = out.result;
  CapacityFn ci = knk_normalize(emb, c, &res.stats).residual;
  if (check == CheckLevel::Full) out.trace.initial_cw_acyclic = check_invariant_no_cw_cycles(emb, ci);

  while (auto a = leftmost_residual_path(emb, ci)) {
    CutGraph cut = cut_open(emb, *a, ci);
    const auto h = hassin_max_flow(cut.embedding, cut.capacity, emb.s(), emb.t(), cut.slit_face, &res.stats);
    ci = residual(ci, map_back_summed(cut, h.flow));
    ++res.iterations;

    IterationRecord rec{std::move(*a), h.value, {}, {}, {}, {}};
    if (check == CheckLevel::Full) {
      rec.cw_acyclic = check_invariant_no_cw_cycles(emb, ci);
      if (!out.trace.records.empty()) {
        const Path& prev = out.trace.records.back().path;
        rec.crossings = crossings(emb, rec.path, prev);
        rec.monotone = check_crossing_monotonicity(emb, prev, rec.path);
        rec.order_agrees = check_crossing_order(emb, prev, rec.path);
      }
    }
    out.trace.records.push_back(std::move(rec));
  }

  for (Dart d = 0; d < emb.dart_count(); d += 2) res.flow.set(d, c[d] - ci[d]);
  res.value = flow_value(emb, res.flow, emb.s());
  if (check != CheckLevel::None) {
    res.phi = compute_phi(emb);
    out.trace.within_bound = res.iterations <= 2 * res.phi + 1;
  }
  return out;
}

inline AdaptiveResult max_adaptive_flow(const PlanarEmbedding& emb, const CapacityFn& c, Vertex s, Vertex t,
                                        CheckLevel check = CheckLevel::None) {
  if (s == emb.s() && t == emb.t()) return max_adaptive_flow(emb, c, check);
  return max_adaptive_flow(emb.with_terminals(s, t), c, check);
}

}  // namespace planarflow
