#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "planarflow/embedding.hpp"

namespace planarflow {

/// A sequence of darts with head(d_i) == tail(d_{i+1}).
struct Path {
  std::vector<Dart> darts;

  bool empty() const noexcept { return darts.empty(); }
  std::size_t size() const noexcept { return darts.size(); }
  friend bool operator==(const Path&, const Path&) = default;
};

inline void require_walk(const PlanarEmbedding& emb, const Path& p) {
  for (std::size_t i = 0; i < p.darts.size(); ++i) {
    const Dart d = p.darts[i];
    if (d < 0 || d >= emb.dart_count()) {
      throw Error(ErrorKind::InvalidArgument, "path names unknown dart " + std::to_string(d));
    }
    if (i > 0 && emb.head(p.darts[i - 1]) != emb.tail(d)) {
      throw Error(ErrorKind::InvalidArgument, "path darts " + std::to_string(i - 1) + " and " + std::to_string(i) +
                                                  " are not consecutive");
    }
  }
}

inline Vertex path_start(const PlanarEmbedding& emb, const Path& p) { return emb.tail(p.darts.front()); }
inline Vertex path_end(const PlanarEmbedding& emb, const Path& p) { return emb.head(p.darts.back()); }

/// Vertex sequence of a non-empty path (size() + 1 entries).
inline std::vector<Vertex> path_vertices(const PlanarEmbedding& emb, const Path& p) {
  std::vector<Vertex> out;
  if (p.empty()) return out;
  out.reserve(p.size() + 1);
  out.push_back(emb.tail(p.darts.front()));
  for (Dart d : p.darts) out.push_back(emb.head(d));
  return out;
}

inline bool is_simple(const PlanarEmbedding& emb, const Path& p) {
  std::vector<char> seen(static_cast<std::size_t>(emb.vertex_count()), 0);
  for (Vertex v : path_vertices(emb, p)) {
    if (seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

inline void require_simple_path(const PlanarEmbedding& emb, const Path& p, Vertex from, Vertex to) {
  if (p.empty()) throw Error(ErrorKind::WrongEndpoints, "empty path");
  require_walk(emb, p);
  if (path_start(emb, p) != from || path_end(emb, p) != to) {
    throw Error(ErrorKind::WrongEndpoints, "path runs from " + std::to_string(path_start(emb, p)) + " to " +
                                               std::to_string(path_end(emb, p)) + ", expected " +
                                               std::to_string(from) + " to " + std::to_string(to));
  }
  if (!is_simple(emb, p)) throw Error(ErrorKind::NotSimple, "path repeats a vertex");
}

inline void require_simple_st_path(const PlanarEmbedding& emb, const Path& p) {
  require_simple_path(emb, p, emb.s(), emb.t());
}

enum class Side { Left, Right, On };

// Classifies darts leaving vertices of a simple path by the side of the path
// they lie on. At interior vertices the side comes from the rotation; at the
// endpoints s and t of an s-to-t path it comes from the f_s / f_t corners:
// clockwise from f_s to the first dart is left at s, counterclockwise from f_t
// to the last dart is left at t.
class PathSides {
 public:
  PathSides(const PlanarEmbedding& emb, const Path& p) : index_(static_cast<std::size_t>(emb.vertex_count()), -1) {
    require_walk(emb, p);
    if (p.empty()) throw Error(ErrorKind::WrongEndpoints, "empty path");
    if (!is_simple(emb, p)) throw Error(ErrorKind::NotSimple, "path repeats a vertex");
    const auto verts = path_vertices(emb, p);
    for (std::size_t i = 0; i < verts.size(); ++i) index_[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);

    side_.assign(static_cast<std::size_t>(emb.dart_count()), Side::On);
    std::vector<char> is_path_dart(static_cast<std::size_t>(emb.dart_count()), 0);
    for (Dart d : p.darts) {
      is_path_dart[static_cast<std::size_t>(d)] = 1;
      is_path_dart[static_cast<std::size_t>(rev(d))] = 1;
    }

    const std::size_t last = verts.size() - 1;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      const Vertex v = verts[i];
      Dart start;      // first dart in the clockwise sweep
      Dart boundary;   // path dart that separates the two sides
      Side before, after;
      if (i == 0 && v == emb.s()) {
        start = emb.fs_corner();
        boundary = p.darts.front();
        before = Side::Left;
        after = Side::Right;
      } else if (i == last && v == emb.t()) {
        start = emb.ft_corner();
        boundary = rev(p.darts.back());
        before = Side::Right;
        after = Side::Left;
      } else if (i == 0 || i == last) {
        // Endpoint that is not a designated terminal: sweep from the path dart.
        start = i == 0 ? p.darts.front() : rev(p.darts.back());
        boundary = start;
        before = Side::Left;
        after = Side::Right;
      } else {
        // Clockwise from rev(in): left side until out, right side afterwards.
        start = emb.rot_next(rev(p.darts[i - 1]));
        boundary = p.darts[i];
        before = Side::Left;
        after = Side::Right;
      }
      Side current = before;
      Dart d = start;
      do {
        if (d == boundary) {
          current = after;
        } else if (!is_path_dart[static_cast<std::size_t>(d)]) {
          side_[static_cast<std::size_t>(d)] = current;
        }
        d = emb.rot_next(d);
      } while (d != start);
    }
  }

  bool on_path(Vertex v) const { return index_[static_cast<std::size_t>(v)] >= 0; }
  int index(Vertex v) const { return index_[static_cast<std::size_t>(v)]; }

  /// Side of a dart whose tail lies on the path; On for path darts and their reverses.
  Side side(Dart d) const { return side_[static_cast<std::size_t>(d)]; }

 private:
  std::vector<int> index_;
  std::vector<Side> side_;
};

namespace detail {

inline std::vector<Dart> side_darts(const PlanarEmbedding& emb, const Path& p, Side wanted) {
  require_simple_st_path(emb, p);
  const PathSides sides(emb, p);
  std::vector<std::pair<Vertex, Vertex>> path_edges;
  for (Dart d : p.darts) path_edges.emplace_back(std::min(emb.tail(d), emb.head(d)), std::max(emb.tail(d), emb.head(d)));
  std::sort(path_edges.begin(), path_edges.end());

  std::vector<Dart> out;
  for (Dart d = 0; d < emb.dart_count(); ++d) {
    const bool tail_on = sides.on_path(emb.tail(d));
    const bool head_on = sides.on_path(emb.head(d));
    if (tail_on && head_on) {
      if (sides.side(d) != Side::On) {
        const std::pair<Vertex, Vertex> key{std::min(emb.tail(d), emb.head(d)), std::max(emb.tail(d), emb.head(d))};
        if (std::binary_search(path_edges.begin(), path_edges.end(), key)) {
          throw Error(ErrorKind::ParallelOnPath, "dart " + std::to_string(d) + " is parallel to a path edge");
        }
      }
      continue;
    }
    if (tail_on && sides.side(d) == wanted) out.push_back(d);
    if (head_on && sides.side(rev(d)) == wanted) out.push_back(d);
  }
  return out;
}

}  // namespace detail

/// Darts with exactly one endpoint on the simple s-to-t path p that attach on its left.
inline std::vector<Dart> left_darts(const PlanarEmbedding& emb, const Path& p) {
  return detail::side_darts(emb, p, Side::Left);
}

inline std::vector<Dart> right_darts(const PlanarEmbedding& emb, const Path& p) {
  return detail::side_darts(emb, p, Side::Right);
}

enum class CrossingDirection { RightToLeft, LeftToRight };

/// A maximal subpath X of q shared with p (in either direction) where p passes
/// from one side of q to the other.
struct Crossing {
  std::vector<Vertex> shared;  // X as a vertex sequence, ordered along q
  CrossingDirection direction = CrossingDirection::RightToLeft;
  std::size_t q_first = 0, q_last = 0;  // vertex positions of X in q
  std::size_t p_first = 0, p_last = 0;  // vertex positions of X's endpoints in p (p order)
  bool reversed = false;                // p traverses rev(X)
};

namespace detail {

// Side of dart d (leaving the vertex at position j of q) relative to q.
inline Side side_relative_to(const PlanarEmbedding& emb, const Path& q, std::size_t j, Dart d) {
  const Dart in_rev = rev(q.darts[j - 1]);
  const Dart out = q.darts[j];
  if (d == in_rev || d == out) return Side::On;
  for (Dart x = emb.rot_next(in_rev); x != out; x = emb.rot_next(x)) {
    if (x == d) return Side::Left;
  }
  return Side::Right;
}

}  // namespace detail

/// Crossings of p with q, in q order. Both paths must be simple.
inline std::vector<Crossing> crossings(const PlanarEmbedding& emb, const Path& p, const Path& q) {
  require_walk(emb, p);
  require_walk(emb, q);
  if (p.empty() || q.empty()) return {};
  if (!is_simple(emb, p) || !is_simple(emb, q)) throw Error(ErrorKind::NotSimple, "crossings need simple paths");

  const auto pv = path_vertices(emb, p);
  const auto qv = path_vertices(emb, q);
  std::vector<int> pos_p(static_cast<std::size_t>(emb.vertex_count()), -1);
  for (std::size_t i = 0; i < pv.size(); ++i) pos_p[static_cast<std::size_t>(pv[i])] = static_cast<int>(i);

  std::vector<Crossing> out;
  std::size_t i = 0;
  while (i < qv.size()) {
    if (pos_p[static_cast<std::size_t>(qv[i])] < 0) {
      ++i;
      continue;
    }
    const std::size_t first = i;
    int dir = 0;
    while (i + 1 < qv.size()) {
      const int here = pos_p[static_cast<std::size_t>(qv[i])];
      const Dart qd = q.darts[i];
      int step = 0;
      if (here + 1 < static_cast<int>(pv.size()) && p.darts[static_cast<std::size_t>(here)] == qd) {
        step = +1;
      } else if (here > 0 && p.darts[static_cast<std::size_t>(here - 1)] == rev(qd)) {
        step = -1;
      }
      if (step == 0 || (dir != 0 && step != dir)) break;
      dir = step;
      ++i;
    }
    const std::size_t last = i;
    ++i;

    if (first == 0 || last == qv.size() - 1) continue;  // prefix or suffix of q
    const int pa = pos_p[static_cast<std::size_t>(qv[first])];
    const int pb = pos_p[static_cast<std::size_t>(qv[last])];
    const int p_lo = std::min(pa, pb);
    const int p_hi = std::max(pa, pb);
    if (p_lo == 0 || p_hi == static_cast<int>(pv.size()) - 1) continue;  // prefix or suffix of p

    // p arrives at p_lo and departs from p_hi.
    const Dart enter = rev(p.darts[static_cast<std::size_t>(p_lo - 1)]);
    const Dart leave = p.darts[static_cast<std::size_t>(p_hi)];
    const std::size_t q_enter = (p_lo == pa) ? first : last;
    const std::size_t q_leave = (p_hi == pb) ? last : first;
    const Side in_side = detail::side_relative_to(emb, q, q_enter, enter);
    const Side out_side = detail::side_relative_to(emb, q, q_leave, leave);
    if (in_side == Side::On || out_side == Side::On || in_side == out_side) continue;

    Crossing c;
    c.shared.assign(qv.begin() + static_cast<std::ptrdiff_t>(first), qv.begin() + static_cast<std::ptrdiff_t>(last) + 1);
    c.direction = in_side == Side::Right ? CrossingDirection::RightToLeft : CrossingDirection::LeftToRight;
    c.q_first = first;
    c.q_last = last;
    c.p_first = static_cast<std::size_t>(p_lo);
    c.p_last = static_cast<std::size_t>(p_hi);
    c.reversed = dir < 0;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace planarflow
