#pragma once

#include <random>
#include <string>

#include "planarflow/io.hpp"

namespace planarflow {

enum class StMode { Corners, CenterCorner, Random };

inline const char* to_string(StMode m) {
  switch (m) {
    case StMode::Corners: return "corners";
    case StMode::CenterCorner: return "center-corner";
    case StMode::Random: return "random";
  }
  return "?";
}

inline StMode parse_st_mode(const std::string& s) {
  if (s == "corners") return StMode::Corners;
  if (s == "center-corner") return StMode::CenterCorner;
  if (s == "random") return StMode::Random;
  throw Error(ErrorKind::InvalidArgument, "unknown st mode '" + s + "'");
}

// Directed width x height grid. Vertex (x, y) has id y * width + x; every edge
// is one arc from the lower to the higher id with independent capacities in
// [0, cap_max] for both darts. With y growing downwards the rotation at each
// vertex is up, right, down, left. Terminals on the boundary get corner hints
// in the outer face.
inline GraphSpec gen_grid(int width, int height, Amount cap_max, std::uint64_t seed, StMode mode) {
  if (width < 2 || height < 2) throw Error(ErrorKind::BadDimensions, "grid needs width and height >= 2");
  if (cap_max < 1) throw Error(ErrorKind::InvalidArgument, "cap_max must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Amount> cap(0, cap_max);

  GraphSpec g;
  g.n = width * height;
  g.rotations.assign(static_cast<std::size_t>(g.n), {});
  auto id = [&](int x, int y) { return static_cast<Vertex>(y * width + x); };
  std::vector<Dart> right_of(static_cast<std::size_t>(g.n), kNoDart), down_of(static_cast<std::size_t>(g.n), kNoDart);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      if (x + 1 < width) {
        right_of[static_cast<std::size_t>(id(x, y))] = static_cast<Dart>(2 * g.arcs.size());
        g.arcs.push_back({id(x, y), id(x + 1, y), 0, 0});
      }
      if (y + 1 < height) {
        down_of[static_cast<std::size_t>(id(x, y))] = static_cast<Dart>(2 * g.arcs.size());
        g.arcs.push_back({id(x, y), id(x, y + 1), 0, 0});
      }
    }
  }
  for (auto& a : g.arcs) {
    a.cap = cap(rng);
    a.rev_cap = cap(rng);
  }
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      auto& rot = g.rotations[static_cast<std::size_t>(id(x, y))];
      if (y > 0) rot.push_back(rev(down_of[static_cast<std::size_t>(id(x, y - 1))]));
      if (x + 1 < width) rot.push_back(right_of[static_cast<std::size_t>(id(x, y))]);
      if (y + 1 < height) rot.push_back(down_of[static_cast<std::size_t>(id(x, y))]);
      if (x > 0) rot.push_back(rev(right_of[static_cast<std::size_t>(id(x - 1, y))]));
    }
  }

  switch (mode) {
    case StMode::Corners:
      g.s = id(0, 0);
      g.t = id(width - 1, height - 1);
      break;
    case StMode::CenterCorner:
      g.s = id(width / 2, height / 2);
      g.t = id(0, 0);
      break;
    case StMode::Random: {
      std::uniform_int_distribution<Vertex> pick(0, g.n - 1);
      g.s = pick(rng);
      do {
        g.t = pick(rng);
      } while (g.t == g.s);
      break;
    }
  }

  // The outer face lies left of the dart running up the left column.
  const PlanarEmbedding emb = g.embedding();
  const Face outer = emb.left_face(rev(down_of[static_cast<std::size_t>(id(0, 0))]));
  auto on_boundary = [&](Vertex v) {
    const int x = v % width;
    const int y = v / width;
    return x == 0 || y == 0 || x == width - 1 || y == height - 1;
  };
  if (on_boundary(g.s)) g.fs_hint = emb.corner_in_face(g.s, outer);
  if (on_boundary(g.t)) g.ft_hint = emb.corner_in_face(g.t, outer);
  return g;
}

}  // namespace planarflow
