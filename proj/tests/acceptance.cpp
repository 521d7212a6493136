// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <optional>
#include <random>
#include <set>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace planarflow;
using namespace fixtures;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("criterion %2d: %s  %s (%s)\n", id, ok ? "PASS" : "FAIL", what.c_str(), detail.c_str());
  if (!ok) ++failures;
}

std::string ratio(int good, int total) { return std::to_string(good) + "/" + std::to_string(total); }

bool same_flow(const FlowAssignment& a, const FlowAssignment& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t d = 0; d < a.size(); ++d) {
    if (a[static_cast<Dart>(d)] != b[static_cast<Dart>(d)]) return false;
  }
  return true;
}

bool leftmost(const PlanarEmbedding& emb, const CapacityFn& c, const FlowAssignment& f) {
  return knk_normalize(emb, residual(c, f)).circulation.is_zero();
}

struct CorpusRun {
  Amount oracle = 0;
  FlowResult cover;
  std::optional<AdaptiveResult> adaptive;
  int phi = 0;
};

void corpus_criteria() {
  const auto corpus = grid_corpus();
  std::vector<Instance> instances;
  for (const auto& c : corpus) instances.push_back(grid(c.width, c.height, c.cap_max, c.seed, c.mode));

  std::vector<CorpusRun> runs(instances.size());
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& in = instances[i];
    auto& r = runs[i];
    r.oracle = edmonds_karp(in.embedding, in.capacity).value;
    r.cover = max_flow_via_cover(in.embedding, in.capacity);
    try {
      r.adaptive = max_adaptive_flow(in.embedding, in.capacity, CheckLevel::Full);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SummedCapacityViolated) throw;
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (std::size_t i = 0; i < instances.size(); ++i) runs[i].phi = compute_phi(instances[i].embedding);

  const int total = static_cast<int>(runs.size());
  int aborted = 0;
  for (const auto& r : runs) aborted += r.adaptive ? 0 : 1;
  const std::string abort_note = std::to_string(aborted) + " adaptive runs aborted on summed capacity";

  int c1 = 0, c2 = 0, c3 = 0, c4 = 0, c5 = 0, c6 = 0, c7 = 0;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const auto& in = instances[i];
    const auto& r = runs[i];
    const bool has_ad = r.adaptive.has_value();
    if (r.cover.value == r.oracle && has_ad && r.adaptive->result.value == r.oracle) ++c1;
    if (r.cover.stats.shortest_path_count == 3) ++c2;
    if (has_ad && r.adaptive->result.stats.shortest_path_count <= 2 * r.phi + 2 &&
        r.adaptive->result.iterations <= 2 * r.phi + 1) {
      ++c3;
    }
    if (has_ad && same_flow(r.cover.flow, r.adaptive->result.flow)) ++c4;
    if (leftmost(in.embedding, in.capacity, r.cover.flow) && has_ad &&
        leftmost(in.embedding, in.capacity, r.adaptive->result.flow)) {
      ++c5;
    }
    {
      const auto c0 = knk_normalize(in.embedding, in.capacity).residual;
      if (detail::cover_value(in.embedding, c0, r.phi, nullptr).value == r.oracle) ++c6;
    }
    if (has_ad) {
      const auto& tr = r.adaptive->trace;
      bool ok = tr.initial_cw_acyclic.value_or(false);
      for (std::size_t j = 0; j < tr.records.size(); ++j) {
        ok = ok && tr.records[j].cw_acyclic.value_or(false);
        if (j > 0) ok = ok && tr.records[j].monotone.value_or(false);
      }
      if (ok) ++c7;
    }
  }

  char time_buf[64];
  std::snprintf(time_buf, sizeof time_buf, "%.1f s", seconds);
  report(1, c1 == total && seconds < 60.0, "cover = adaptive = oracle value on the grid corpus",
         ratio(c1, total) + ", " + time_buf + ", " + abort_note);
  report(2, c2 == total, "cover solver uses exactly 3 shortest-path computations", ratio(c2, total));
  report(3, c3 == total, "adaptive solver within 2phi+2 shortest paths and 2phi+1 iterations",
         ratio(c3, total) + ", " + abort_note);
  report(4, c4 == total, "cover and adaptive flows identical dart for dart", ratio(c4, total) + ", " + abort_note);
  report(5, c5 == total, "both solver outputs leave no clockwise residual cycle", ratio(c5, total) + ", " + abort_note);
  report(6, c6 == total, "flow on the super-arc into s^(2phi) equals the oracle value", ratio(c6, total));
  report(7, c7 == total, "every adaptive phase keeps capacities cw-acyclic and crosses right to left",
         ratio(c7, total) + ", " + abort_note);
}

// Lifts a simple base path into the cover starting at copy `start` and returns
// the set of copies its darts belong to, or nullopt if it leaves the section.
std::optional<std::set<int>> lifted_copies(const CoverGraph& cover, const PlanarEmbedding& emb, const Path& p,
                                           int start) {
  std::set<int> copies;
  Vertex x = cover.lift(emb.tail(p.darts.front()), start);
  for (Dart d : p.darts) {
    const auto e = cover.lift_dart(x, d);
    if (!e) return std::nullopt;
    copies.insert(cover.copy_of(*e));
    x = cover.embedding().head(*e);
  }
  return copies;
}

void pigeonhole() {
  struct Fixture {
    int w, h;
    std::uint64_t seed;
    StMode mode;
  };
  const Fixture fixtures[] = {{3, 3, 1, StMode::CenterCorner},
                              {5, 5, 2, StMode::CenterCorner},
                              {7, 7, 3, StMode::CenterCorner},
                              {6, 6, 4, StMode::Random},
                              {5, 4, 5, StMode::Corners}};
  std::mt19937_64 rng(2024);
  int samples = 0, general_ok = 0, general = 0, restricted_ok = 0, restricted = 0;
  for (const auto& fx : fixtures) {
    const auto in = grid(fx.w, fx.h, 5, fx.seed, fx.mode);
    const auto& emb = in.embedding;
    const int phi = compute_phi(emb);
    const auto c0 = knk_normalize(emb, in.capacity).residual;
    auto l = leftmost_residual_path(emb, c0);
    if (!l) l = detail::leftmost_search(emb, [](Dart) { return true; });
    const int k = 2 * phi + 9;
    const int mid = phi + 4;
    const auto cover = attach_super_terminals(build_cover(emb, *l, k, c0), 1);
    for (int i = 0; i < 200; ++i, ++samples) {
      const bool endpoint_only = i % 2 == 1;
      const auto start = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(emb.vertex_count()));
      const auto limit = 1 + static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(emb.vertex_count()));
      auto interior = [&](Vertex v) { return !endpoint_only || (v != emb.s() && v != emb.t()); };
      Path p = oracles::random_simple_path(emb, start, limit, rng, interior);
      if (p.empty()) continue;
      const auto copies = lifted_copies(cover, emb, p, mid);
      const int bound = endpoint_only ? phi : phi + 2;
      const bool ok = copies && static_cast<int>(copies->size()) <= bound;
      if (endpoint_only) {
        ++restricted;
        restricted_ok += ok ? 1 : 0;
      } else {
        ++general;
        general_ok += ok ? 1 : 0;
      }
    }
  }
  report(8, general_ok == general && restricted_ok == restricted && samples == 1000,
         "lifted simple paths touch at most phi+2 copies (phi with s,t only at the ends)",
         "general " + ratio(general_ok, general) + ", endpoint-restricted " + ratio(restricted_ok, restricted));
}

void hassin_st_planar() {
  int ok = 0, total = 0;
  const Amount caps[] = {1, 5, 100};
  for (int i = 0; i < 50; ++i, ++total) {
    const int size = 3 + i % 7;
    const auto in = grid(size, 3 + (i / 7) % 5, caps[i % 3], static_cast<std::uint64_t>(5000 + i), StMode::Corners);
    const auto& emb = in.embedding;
    const auto h = hassin_max_flow(emb, in.capacity);
    const auto rep = verify_flow(emb, in.capacity, h.flow, emb.s(), emb.t(), true);
    if (rep.ok() && h.value == edmonds_karp(emb, in.capacity).value) ++ok;
  }
  report(9, ok == total, "Hassin flow on st-planar grids is maximum, leftmost and matches the oracle",
         ratio(ok, total));
}

void leftmost_validation() {
  int fixtures_checked = 0, ok = 0;
  std::vector<Instance> pool{single_arc(), diamond()};
  const Amount caps[] = {1, 2, 5};
  for (int i = 0; i < 300; ++i) {
    const int w = 3 + i % 3;
    const int h = 3 + (i / 3) % 3;
    pool.push_back(grid(w, h, caps[i % 3], static_cast<std::uint64_t>(7000 + i), static_cast<StMode>(i % 3)));
  }
  for (const auto& in : pool) {
    const auto& emb = in.embedding;
    const auto c0 = knk_normalize(emb, in.capacity).residual;
    std::vector<Path> all;
    try {
      all = enumerate_residual_paths(emb, c0, emb.s(), emb.t(), 10);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::TooManyPaths) continue;
      throw;
    }
    if (all.empty()) continue;
    ++fixtures_checked;
    const auto l = leftmost_residual_path(emb, c0);
    bool good = l.has_value();
    for (const auto& p : all) good = good && !is_left_of(emb, p, *l);
    ok += good ? 1 : 0;
  }
  report(10, ok == fixtures_checked && fixtures_checked > 0,
         "no enumerated residual path lies left of the leftmost residual path",
         ratio(ok, fixtures_checked) + " fixtures with at most 10 paths");
}

void no_left_to_right_crossing() {
  const auto corpus = grid_corpus();
  int ok = 0, total = 0, paths = 0;
  // Stride 7 is coprime to the corpus size, so the walk visits every instance once.
  for (std::size_t j = 0; j < corpus.size() && total < 20; ++j) {
    const auto& c = corpus[(7 * j) % corpus.size()];
    const auto in = grid(c.width, c.height, c.cap_max, c.seed, c.mode);
    const auto& emb = in.embedding;
    const auto c0 = knk_normalize(emb, in.capacity).residual;
    const auto l = leftmost_residual_path(emb, c0);
    if (!l) continue;
    ++total;
    bool good = true;
    for (const auto& p : decompose(emb, edmonds_karp(emb, c0).flow).paths) {
      ++paths;
      for (const auto& x : crossings(emb, Path{p.darts}, *l)) good = good && x.direction == CrossingDirection::RightToLeft;
    }
    ok += good ? 1 : 0;
  }
  report(11, ok == total && total == 20, "no oracle flow path crosses the leftmost residual path left to right",
         ratio(ok, total) + " fixtures, " + std::to_string(paths) + " flow paths");
}

}  // namespace

int main() {
  corpus_criteria();
  pigeonhole();
  hassin_st_planar();
  leftmost_validation();
  no_left_to_right_crossing();
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
