#pragma once

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "planarflow/embedding.hpp"
#include "planarflow/path.hpp"

namespace planarflow {

inline void require_sizes(const PlanarEmbedding& emb, std::size_t size, const char* what) {
  if (static_cast<Dart>(size) != emb.dart_count()) {
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " size does not match embedding");
  }
}

/// c_f[d] = c[d] - f[d].
inline CapacityFn residual(const CapacityFn& c, const FlowAssignment& f) {
  if (c.size() != f.size()) throw Error(ErrorKind::InvalidArgument, "capacity/flow size mismatch");
  std::vector<Amount> out(c.size());
  for (Dart d = 0; d < static_cast<Dart>(c.size()); ++d) {
    out[static_cast<std::size_t>(d)] = c[d] - f[d];
    if (out[static_cast<std::size_t>(d)] < 0) {
      throw Error(ErrorKind::CapacityViolated, "flow " + std::to_string(f[d]) + " exceeds capacity " +
                                                   std::to_string(c[d]) + " on dart " + std::to_string(d));
    }
  }
  return CapacityFn(std::move(out));
}

/// Net flow into v: sum of f over darts whose head is v.
inline Amount net_flow(const PlanarEmbedding& emb, const FlowAssignment& f, Vertex v) {
  Amount sum = 0;
  for (Dart d : emb.rotation(v)) sum += f[rev(d)];
  return sum;
}

enum class FlowKind { Infeasible, Pseudoflow, Circulation, STFlow };

struct FlowClass {
  FlowKind kind = FlowKind::Infeasible;
  std::vector<Vertex> excess;   // positive net flow
  std::vector<Vertex> deficit;  // negative net flow
  std::string reason;           // why Infeasible, when it is
};

inline FlowClass classify(const PlanarEmbedding& emb, const CapacityFn& c, const FlowAssignment& f,
                          std::span<const Vertex> sources, std::span<const Vertex> sinks) {
  require_sizes(emb, c.size(), "capacity");
  require_sizes(emb, f.size(), "flow");
  FlowClass out;
  for (Dart d = 0; d < emb.dart_count(); ++d) {
    if (f[d] != -f[rev(d)]) {
      out.reason = "not antisymmetric at dart " + std::to_string(d);
      return out;
    }
    if (f[d] > c[d]) {
      out.reason = "capacity violated at dart " + std::to_string(d);
      return out;
    }
  }
  for (Vertex v = 0; v < emb.vertex_count(); ++v) {
    const Amount net = net_flow(emb, f, v);
    if (net > 0) out.excess.push_back(v);
    if (net < 0) out.deficit.push_back(v);
  }
  auto contains = [](std::span<const Vertex> set, Vertex v) { return std::find(set.begin(), set.end(), v) != set.end(); };
  if (out.excess.empty() && out.deficit.empty()) {
    out.kind = FlowKind::Circulation;
  } else if (std::all_of(out.deficit.begin(), out.deficit.end(), [&](Vertex v) { return contains(sources, v); }) &&
             std::all_of(out.excess.begin(), out.excess.end(), [&](Vertex v) { return contains(sinks, v); })) {
    out.kind = FlowKind::STFlow;
  } else {
    out.kind = FlowKind::Pseudoflow;
  }
  return out;
}

/// |f| = -(net flow of the sources).
inline Amount flow_value(const PlanarEmbedding& emb, const FlowAssignment& f, std::span<const Vertex> sources) {
  require_sizes(emb, f.size(), "flow");
  for (Dart d = 0; d < emb.dart_count(); d += 2) {
    if (f[d] != -f[rev(d)]) throw Error(ErrorKind::NotAFlow, "not antisymmetric at dart " + std::to_string(d));
  }
  Amount sum = 0;
  for (Vertex v : sources) sum -= net_flow(emb, f, v);
  return sum;
}

inline Amount flow_value(const PlanarEmbedding& emb, const FlowAssignment& f, Vertex s) {
  const Vertex sources[] = {s};
  return flow_value(emb, f, sources);
}

/// Vertices reachable from `from` through darts with positive residual capacity.
inline std::vector<char> residual_reachable(const PlanarEmbedding& emb, const CapacityFn& c, Vertex from) {
  std::vector<char> seen(static_cast<std::size_t>(emb.vertex_count()), 0);
  std::deque<Vertex> queue{from};
  seen[static_cast<std::size_t>(from)] = 1;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Dart d : emb.rotation(v)) {
      const Vertex w = emb.head(d);
      if (c[d] > 0 && !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

/// True iff the feasible s-to-t flow f leaves no residual s-to-t path.
inline bool is_maximum(const PlanarEmbedding& emb, const CapacityFn& c, const FlowAssignment& f, Vertex s, Vertex t) {
  const Vertex src[] = {s};
  const Vertex snk[] = {t};
  const auto cls = classify(emb, c, f, src, snk);
  if (cls.kind != FlowKind::STFlow && cls.kind != FlowKind::Circulation) {
    throw Error(ErrorKind::NotAFlow, cls.kind == FlowKind::Infeasible ? cls.reason : "not an s-to-t flow");
  }
  return !residual_reachable(emb, residual(c, f), s)[static_cast<std::size_t>(t)];
}

struct WeightedWalk {
  std::vector<Dart> darts;
  Amount weight = 0;
};

struct Decomposition {
  std::vector<WeightedWalk> paths;   // simple, from a deficit vertex to an excess vertex
  std::vector<WeightedWalk> cycles;  // simple

  FlowAssignment sum(std::size_t dart_count) const {
    FlowAssignment f(dart_count);
    for (const auto* group : {&paths, &cycles}) {
      for (const auto& w : *group) {
        for (Dart d : w.darts) f.add(d, w.weight);
      }
    }
    return f;
  }
};

// Greedy decomposition of a pseudoflow into simple flow paths and cycles.
// Walks follow positive-flow darts taking the sharpest right turn, which keeps
// extracted cycles tight.
inline Decomposition decompose(const PlanarEmbedding& emb, const FlowAssignment& f) {
  require_sizes(emb, f.size(), "flow");
  FlowAssignment work = f;
  Decomposition out;
  std::vector<Amount> net(static_cast<std::size_t>(emb.vertex_count()));
  for (Vertex v = 0; v < emb.vertex_count(); ++v) net[static_cast<std::size_t>(v)] = net_flow(emb, work, v);

  auto next_dart = [&](Vertex v, Dart arrived) -> Dart {
    const auto rot = emb.rotation(v);
    if (arrived == kNoDart) {
      for (Dart d : rot) {
        if (work[d] > 0) return d;
      }
      return kNoDart;
    }
    // Counterclockwise from rev(arrived): first candidate is the sharpest right turn.
    const Dart back = rev(arrived);
    for (Dart d = emb.rot_prev(back); d != back; d = emb.rot_prev(d)) {
      if (work[d] > 0) return d;
    }
    return work[back] > 0 ? back : kNoDart;
  };

  std::vector<int> on_walk(static_cast<std::size_t>(emb.vertex_count()), -1);

  // Repeatedly walks from `start`; cycles met on the way are cancelled. Returns
  // the walk to an excess vertex when stop_at_excess, otherwise stops after
  // the first cycle.
  auto walk = [&](Vertex start, bool stop_at_excess) {
    std::vector<Dart> darts;
    std::vector<Vertex> verts{start};
    on_walk[static_cast<std::size_t>(start)] = 0;
    for (;;) {
      const Vertex v = verts.back();
      if (stop_at_excess && !darts.empty() && net[static_cast<std::size_t>(v)] > 0) {
        Amount w = std::min(-net[static_cast<std::size_t>(start)], net[static_cast<std::size_t>(v)]);
        for (Dart d : darts) w = std::min(w, work[d]);
        for (Dart d : darts) work.add(d, -w);
        net[static_cast<std::size_t>(start)] += w;
        net[static_cast<std::size_t>(v)] -= w;
        out.paths.push_back({darts, w});
        break;
      }
      const Dart d = next_dart(v, darts.empty() ? kNoDart : darts.back());
      if (d == kNoDart) throw Error(ErrorKind::NotAFlow, "flow walk stuck at vertex " + std::to_string(v));
      const Vertex w = emb.head(d);
      const int seen_at = on_walk[static_cast<std::size_t>(w)];
      if (seen_at < 0) {
        darts.push_back(d);
        verts.push_back(w);
        on_walk[static_cast<std::size_t>(w)] = static_cast<int>(verts.size()) - 1;
        continue;
      }
      std::vector<Dart> cycle(darts.begin() + seen_at, darts.end());
      cycle.push_back(d);
      Amount weight = std::numeric_limits<Amount>::max();
      for (Dart x : cycle) weight = std::min(weight, work[x]);
      for (Dart x : cycle) work.add(x, -weight);
      out.cycles.push_back({std::move(cycle), weight});
      for (std::size_t i = static_cast<std::size_t>(seen_at) + 1; i < verts.size(); ++i) {
        on_walk[static_cast<std::size_t>(verts[i])] = -1;
      }
      darts.resize(static_cast<std::size_t>(seen_at));
      verts.resize(static_cast<std::size_t>(seen_at) + 1);
      if (!stop_at_excess) break;
    }
    for (Vertex v : verts) on_walk[static_cast<std::size_t>(v)] = -1;
  };

  for (Vertex v = 0; v < emb.vertex_count(); ++v) {
    while (net[static_cast<std::size_t>(v)] < 0) walk(v, true);
  }
  for (Dart d = 0; d < emb.dart_count(); ++d) {
    while (work[d] > 0) walk(emb.tail(d), false);
  }
  return out;
}

}  // namespace planarflow
