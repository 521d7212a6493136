#pragma once

#include <vector>

#include "planarflow/planarflow.hpp"

namespace fixtures {

using namespace planarflow;

// s=0, a=1, b=2, t=3. Arcs: 0 s->a (2), 1 s->b (2), 2 a->t (1), 3 b->t (2), 4 a->b (1).
// s->a->t runs left of s->b->t; f_s and f_t are the outer face.
inline GraphSpec diamond_spec() {
  GraphSpec g;
  g.n = 4;
  g.arcs = {{0, 1, 2, 0}, {0, 2, 2, 0}, {1, 3, 1, 0}, {2, 3, 2, 0}, {1, 2, 1, 0}};
  g.rotations = {{2, 0}, {4, 8, 1}, {3, 9, 6}, {7, 5}};
  g.s = 0;
  g.t = 3;
  g.fs_hint = 0;
  g.ft_hint = 7;
  return g;
}

inline Instance diamond() { return make_instance(diamond_spec()); }

inline GraphSpec single_arc_spec(Amount cap = 5) {
  GraphSpec g;
  g.n = 2;
  g.arcs = {{0, 1, cap, 0}};
  g.rotations = {{0}, {1}};
  g.s = 0;
  g.t = 1;
  return g;
}

inline Instance single_arc(Amount cap = 5) { return make_instance(single_arc_spec(cap)); }

// Triangle 0->1->2->0 with capacities on the forward darts. The rotation makes
// the cycle 0->1->2->0 clockwise around its bounded face.
inline GraphSpec triangle_spec(Amount cap = 1) {
  GraphSpec g;
  g.n = 3;
  g.arcs = {{0, 1, cap, 0}, {1, 2, cap, 0}, {2, 0, cap, 0}};
  g.rotations = {{0, 5}, {2, 1}, {4, 3}};
  g.s = 0;
  g.t = 1;
  return g;
}

inline Instance triangle(Amount cap = 1) { return make_instance(triangle_spec(cap)); }

inline Instance grid(int w, int h, Amount cap_max, std::uint64_t seed, StMode mode) {
  return make_instance(gen_grid(w, h, cap_max, seed, mode));
}

/// Path through the given vertex sequence, picking the unique dart between consecutive vertices.
inline Path path_through(const PlanarEmbedding& emb, const std::vector<Vertex>& verts) {
  Path p;
  for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
    for (Dart d : emb.rotation(verts[i])) {
      if (emb.head(d) == verts[i + 1]) {
        p.darts.push_back(d);
        break;
      }
    }
  }
  return p;
}

struct GridCase {
  int width;
  int height;
  Amount cap_max;
  std::uint64_t seed;
  StMode mode;
};

/// The 200 seeded grid instances: sizes 3..9, cap_max in {1, 5, 100}, every st mode.
inline std::vector<GridCase> grid_corpus() {
  const Amount caps[] = {1, 5, 100};
  const StMode modes[] = {StMode::Corners, StMode::CenterCorner, StMode::Random};
  std::vector<GridCase> out;
  for (int i = 0; i < 200; ++i) {
    const int size = 3 + i % 7;
    out.push_back({size, size, caps[(i / 7) % 3], static_cast<std::uint64_t>(1000 + i), modes[(i / 21) % 3]});
  }
  return out;
}

}  // namespace fixtures
