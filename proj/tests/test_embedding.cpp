#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace planarflow;
using namespace fixtures;

namespace {

std::vector<Instance> small_fixtures() {
  std::vector<Instance> out{single_arc(), triangle(), diamond()};
  for (const auto& c : grid_corpus()) {
    if (c.width <= 5) out.push_back(grid(c.width, c.height, c.cap_max, c.seed, c.mode));
    if (out.size() >= 40) break;
  }
  return out;
}

// Forward dart of each edge mentioned, sorted and deduplicated.
std::vector<Dart> edges_of(const std::vector<Dart>& darts) {
  std::vector<Dart> out;
  for (Dart d : darts) out.push_back(d & ~1);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <class F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(BuildEmbedding, SingleArc) {
  const auto in = single_arc();
  EXPECT_EQ(in.embedding.vertex_count(), 2);
  EXPECT_EQ(in.embedding.edge_count(), 1);
  EXPECT_EQ(in.embedding.face_count(), 1);
}

TEST(BuildEmbedding, TriangleHasTwoFaces) { EXPECT_EQ(triangle().embedding.face_count(), 2); }

TEST(BuildEmbedding, ThreeByThreeGridHasFiveFaces) {
  const auto in = grid(3, 3, 5, 1, StMode::Corners);
  EXPECT_EQ(in.embedding.vertex_count(), 9);
  EXPECT_EQ(in.embedding.edge_count(), 12);
  EXPECT_EQ(in.embedding.face_count(), 5);
}

TEST(BuildEmbedding, RejectsNonPlanarRotation) {
  // Theta graph with both rotations in the same cyclic order: one face only.
  const std::vector<ArcEnds> arcs{{0, 1}, {0, 1}, {0, 1}};
  EXPECT_EQ(kind_of([&] { build_embedding(2, arcs, {{0, 2, 4}, {1, 3, 5}}, 0, 1, {}, {}); }),
            ErrorKind::NonPlanarRotation);
  EXPECT_NO_THROW(build_embedding(2, arcs, {{0, 2, 4}, {1, 5, 3}}, 0, 1, {}, {}));
}

TEST(BuildEmbedding, RejectsDisconnected) {
  const std::vector<ArcEnds> arcs{{0, 1}, {2, 3}};
  EXPECT_EQ(kind_of([&] { build_embedding(4, arcs, {{0}, {1}, {2}, {3}}, 0, 1, {}, {}); }), ErrorKind::Disconnected);
}

TEST(BuildEmbedding, RejectsMalformedRotations) {
  const std::vector<ArcEnds> arcs{{0, 1}};
  EXPECT_EQ(kind_of([&] { build_embedding(2, arcs, {{0}, {}}, 0, 1, {}, {}); }), ErrorKind::MalformedRotation);
  EXPECT_EQ(kind_of([&] { build_embedding(2, arcs, {{0, 0}, {1}}, 0, 1, {}, {}); }), ErrorKind::MalformedRotation);
  EXPECT_EQ(kind_of([&] { build_embedding(2, arcs, {{1}, {0}}, 0, 1, {}, {}); }), ErrorKind::MalformedRotation);
}

TEST(BuildEmbedding, FaceLengthsSumToTwiceEdgesAndEulerHolds) {
  for (const auto& in : small_fixtures()) {
    const auto& emb = in.embedding;
    std::size_t total = 0;
    for (Face f = 0; f < emb.face_count(); ++f) total += emb.face_darts(f).size();
    EXPECT_EQ(total, static_cast<std::size_t>(2 * emb.edge_count()));
    EXPECT_EQ(emb.vertex_count() - emb.edge_count() + emb.face_count(), 2);
  }
}

TEST(Sides, SingleArcHasNoSideDarts) {
  const auto in = single_arc();
  const Path p{{0}};
  EXPECT_TRUE(left_darts(in.embedding, p).empty());
  EXPECT_TRUE(right_darts(in.embedding, p).empty());
}

TEST(Sides, DiamondRightOfLeftPath) {
  const auto in = diamond();
  const Path p{{0, 4}};  // s->a->t
  EXPECT_TRUE(left_darts(in.embedding, p).empty());
  // s->b, b->t and a->b all touch P on its right.
  EXPECT_EQ(edges_of(right_darts(in.embedding, p)), (std::vector<Dart>{2, 6, 8}));
}

TEST(Sides, PartitionDartsWithOneEndpointOnPath) {
  for (const auto& in : small_fixtures()) {
    const auto& emb = in.embedding;
    const auto l = leftmost_residual_path(emb, knk_normalize(emb, in.capacity).residual);
    if (!l) continue;
    const auto verts = path_vertices(emb, *l);
    auto on = [&](Vertex v) { return std::find(verts.begin(), verts.end(), v) != verts.end(); };
    std::vector<Dart> expected;
    for (Dart d = 0; d < emb.dart_count(); d += 2) {
      if (on(emb.tail(d)) != on(emb.head(d))) expected.push_back(d);
    }
    auto left = edges_of(left_darts(emb, *l));
    auto right = edges_of(right_darts(emb, *l));
    std::vector<Dart> both;
    std::set_intersection(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(both));
    EXPECT_TRUE(both.empty());
    left.insert(left.end(), right.begin(), right.end());
    EXPECT_EQ(edges_of(left), expected);
  }
}

TEST(Sides, RejectsNonSimplePath) {
  const auto in = grid(3, 3, 5, 1, StMode::Corners);
  const Path p = path_through(in.embedding, {0, 1, 4, 3, 6, 7, 4, 5, 8});
  EXPECT_EQ(kind_of([&] { left_darts(in.embedding, p); }), ErrorKind::NotSimple);
}

TEST(Crossings, DisjointPathsDoNotCross) {
  const auto in = grid(3, 3, 5, 1, StMode::Corners);
  const auto p = path_through(in.embedding, {0, 1, 2});
  const auto q = path_through(in.embedding, {6, 7, 8});
  EXPECT_TRUE(crossings(in.embedding, p, q).empty());
}

TEST(Crossings, SingleVertexCrossingInGrid) {
  // Q runs east along the middle row; y grows downward, so its left is the top row.
  const auto in = grid(3, 3, 5, 1, StMode::Corners);
  const auto q = path_through(in.embedding, {3, 4, 5});
  const auto up = path_through(in.embedding, {7, 4, 1});
  const auto down = path_through(in.embedding, {1, 4, 7});
  const auto xs = crossings(in.embedding, up, q);
  ASSERT_EQ(xs.size(), 1u);
  EXPECT_EQ(xs[0].direction, CrossingDirection::RightToLeft);
  EXPECT_EQ(xs[0].shared, (std::vector<Vertex>{4}));
  const auto ys = crossings(in.embedding, down, q);
  ASSERT_EQ(ys.size(), 1u);
  EXPECT_EQ(ys[0].direction, CrossingDirection::LeftToRight);
}

TEST(Crossings, SameSideTouchIsNotACrossing) {
  const auto in = grid(4, 3, 5, 1, StMode::Corners);
  const auto q = path_through(in.embedding, {4, 5, 6, 7});
  const auto touch = path_through(in.embedding, {1, 5, 6, 2});
  EXPECT_TRUE(crossings(in.embedding, touch, q).empty());
  const auto through = path_through(in.embedding, {1, 5, 6, 10});
  const auto xs = crossings(in.embedding, through, q);
  ASSERT_EQ(xs.size(), 1u);
  EXPECT_EQ(xs[0].shared, (std::vector<Vertex>{5, 6}));
  EXPECT_EQ(xs[0].direction, CrossingDirection::LeftToRight);
}

TEST(Crossings, CountIsSymmetric) {
  std::mt19937_64 rng(11);
  const auto in = grid(5, 5, 5, 3, StMode::Corners);
  const auto& emb = in.embedding;
  int compared = 0;
  for (int i = 0; i < 300; ++i) {
    const Vertex a = static_cast<Vertex>(rng() % 25);
    const Vertex b = static_cast<Vertex>(rng() % 25);
    const auto p = oracles::random_simple_path(emb, a, 12, rng, [](Vertex) { return true; });
    const auto q = oracles::random_simple_path(emb, b, 12, rng, [](Vertex) { return true; });
    if (p.empty() || q.empty()) continue;
    EXPECT_EQ(crossings(emb, p, q).size(), crossings(emb, q, p).size());
    ++compared;
  }
  EXPECT_GT(compared, 100);
}

TEST(Potentials, ZeroCirculation) {
  const auto in = diamond();
  const auto pot = potentials_from_circulation(in.embedding, FlowAssignment(10));
  for (Amount v : pot.value) EXPECT_EQ(v, 0);
}

TEST(Potentials, UnitTriangle) {
  const auto in = triangle();
  const auto& emb = in.embedding;
  const auto cw = unit_circulation(emb, std::vector<Dart>{0, 2, 4});
  const auto pot = potentials_from_circulation(emb, cw);
  const Face inner = emb.f_t() == emb.left_face(0) ? emb.right_face(0) : emb.left_face(0);
  EXPECT_EQ(pot[emb.f_t()], 0);
  EXPECT_EQ(pot[inner], 1);
  EXPECT_TRUE(is_clockwise(emb, cw));
  const auto ccw = unit_circulation(emb, std::vector<Dart>{5, 3, 1});
  EXPECT_EQ(potentials_from_circulation(emb, ccw)[inner], -1);
  EXPECT_FALSE(is_clockwise(emb, ccw));
  EXPECT_TRUE(is_clockwise(emb, FlowAssignment(6)));
}

TEST(Potentials, RejectsNonCirculation) {
  const auto in = diamond();
  FlowAssignment f(10);
  f.set(0, 1);
  EXPECT_EQ(kind_of([&] { potentials_from_circulation(in.embedding, f); }), ErrorKind::NotACirculation);
}

TEST(Potentials, RoundTripOnRandomPotentials) {
  std::mt19937_64 rng(5);
  for (const auto& in : small_fixtures()) {
    const auto& emb = in.embedding;
    FacePotential pot;
    pot.root = emb.f_t();
    for (Face f = 0; f < emb.face_count(); ++f) pot.value.push_back(static_cast<Amount>(rng() % 21) - 10);
    pot.value[static_cast<std::size_t>(pot.root)] = 0;
    const auto f = circulation_from_potentials(emb, pot);
    const auto back = potentials_from_circulation(emb, f);
    EXPECT_EQ(back.value, pot.value);
    EXPECT_EQ(circulation_from_potentials(emb, back).values().size(), f.size());
    for (Dart d = 0; d < emb.dart_count(); ++d) EXPECT_EQ(circulation_from_potentials(emb, back)[d], f[d]);
  }
}

TEST(LeftOf, DiamondPaths) {
  const auto in = diamond();
  const Path a{{0, 4}};
  const Path b{{2, 6}};
  EXPECT_TRUE(is_left_of(in.embedding, a, b));
  EXPECT_FALSE(is_left_of(in.embedding, b, a));
  EXPECT_FALSE(is_left_of(in.embedding, a, a));
}

TEST(LeftOf, AtMostOneDirectionHolds) {
  for (const auto& in : small_fixtures()) {
    const auto& emb = in.embedding;
    if (emb.dart_count() > 40) continue;
    CapacityFn all(std::vector<Amount>(static_cast<std::size_t>(emb.dart_count()), 1));
    std::vector<Path> paths;
    try {
      paths = enumerate_residual_paths(emb, all, emb.s(), emb.t(), 60);
    } catch (const Error&) {
      continue;
    }
    for (const auto& a : paths) {
      for (const auto& b : paths) EXPECT_FALSE(is_left_of(emb, a, b) && is_left_of(emb, b, a));
    }
  }
}

TEST(LeftOf, RejectsWrongEndpoints) {
  const auto in = diamond();
  EXPECT_EQ(kind_of([&] { is_left_of(in.embedding, Path{{0}}, Path{{2, 6}}); }), ErrorKind::WrongEndpoints);
}

TEST(Phi, CommonFaceGivesOne) {
  EXPECT_EQ(compute_phi(single_arc().embedding), 1);
  EXPECT_EQ(compute_phi(diamond().embedding), 1);
  EXPECT_EQ(compute_phi(grid(4, 4, 5, 1, StMode::Corners).embedding), 1);
}

TEST(Phi, CenterCornerGrids) {
  // Every inner face of the 3x3 grid touches both the centre and a corner.
  EXPECT_EQ(compute_phi(grid(3, 3, 5, 1, StMode::CenterCorner).embedding), 1);
  EXPECT_EQ(compute_phi(grid(5, 5, 5, 1, StMode::CenterCorner).embedding), 2);
}

TEST(Phi, MatchesRadialGraphDistance) {
  for (const auto& c : grid_corpus()) {
    const auto in = grid(c.width, c.height, c.cap_max, c.seed, c.mode);
    const auto& emb = in.embedding;
    EXPECT_EQ(compute_phi(emb), oracles::radial_phi(emb, emb.s(), emb.t()));
  }
}

TEST(Phi, InvariantUnderRelabeling) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto spec = gen_grid(6, 5, 5, static_cast<std::uint64_t>(trial), StMode::Random);
    std::vector<Vertex> perm(static_cast<std::size_t>(spec.n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    GraphSpec relabeled = spec;
    for (auto& a : relabeled.arcs) {
      a.tail = perm[static_cast<std::size_t>(a.tail)];
      a.head = perm[static_cast<std::size_t>(a.head)];
    }
    for (Vertex v = 0; v < spec.n; ++v) {
      relabeled.rotations[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] =
          spec.rotations[static_cast<std::size_t>(v)];
    }
    relabeled.s = perm[static_cast<std::size_t>(spec.s)];
    relabeled.t = perm[static_cast<std::size_t>(spec.t)];
    EXPECT_EQ(compute_phi(make_instance(spec).embedding), compute_phi(make_instance(relabeled).embedding));
  }
}

TEST(Phi, RejectsEqualTerminals) {
  const auto in = diamond();
  EXPECT_EQ(kind_of([&] { compute_phi(in.embedding, 1, 1); }), ErrorKind::InvalidArgument);
}
