#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "planarflow/embedding.hpp"

namespace planarflow {

struct ArcSpec {
  Vertex tail = kNoVertex;
  Vertex head = kNoVertex;
  Amount cap = 0;
  Amount rev_cap = 0;
};

/// Everything a graph file describes. build() turns it into an embedding.
struct GraphSpec {
  Vertex n = 0;
  std::vector<ArcSpec> arcs;
  std::vector<std::vector<Dart>> rotations;
  Vertex s = kNoVertex;
  Vertex t = kNoVertex;
  std::optional<Dart> fs_hint;
  std::optional<Dart> ft_hint;

  PlanarEmbedding embedding() const {
    std::vector<ArcEnds> ends;
    ends.reserve(arcs.size());
    for (const auto& a : arcs) ends.push_back({a.tail, a.head});
    return build_embedding(n, ends, rotations, s, t, fs_hint, ft_hint);
  }

  CapacityFn capacity() const {
    std::vector<Amount> c;
    c.reserve(2 * arcs.size());
    for (const auto& a : arcs) {
      c.push_back(a.cap);
      c.push_back(a.rev_cap);
    }
    return CapacityFn(std::move(c));
  }
};

struct Instance {
  GraphSpec spec;
  PlanarEmbedding embedding;
  CapacityFn capacity;
};

inline Instance make_instance(GraphSpec spec) {
  Instance out;
  out.embedding = spec.embedding();
  out.capacity = spec.capacity();
  out.spec = std::move(spec);
  return out;
}

namespace detail {

inline std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline std::int64_t parse_int(const std::string& tok, int line_no) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || tok.empty()) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected an integer, got '" + tok + "'");
  }
  return v;
}

// Reads non-comment lines, returning (line number, fields).
inline std::vector<std::pair<int, std::vector<std::string>>> content_lines(std::string_view text) {
  std::vector<std::pair<int, std::vector<std::string>>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto fields = split_fields(line);
    if (!fields.empty()) out.emplace_back(no, std::move(fields));
  }
  return out;
}

}  // namespace detail

// Graph file:
//   planarflow-graph 1
//   n <vertices>
//   m <arcs>
//   s <vertex>
//   t <vertex>
//   fs <dart>            optional
//   ft <dart>            optional
//   a <tail> <head> <cap> [<rev_cap>]      m times, arc i owns darts 2i and 2i+1
//   r <vertex> <dart>... clockwise, one line per vertex
// '#' starts a comment.
inline GraphSpec parse_graph_spec(std::string_view text) {
  const auto lines = detail::content_lines(text);
  if (lines.empty() || lines[0].second.size() != 2 || lines[0].second[0] != "planarflow-graph" ||
      lines[0].second[1] != "1") {
    throw Error(ErrorKind::ParseError, "missing 'planarflow-graph 1' header");
  }
  GraphSpec g;
  std::optional<std::int64_t> m;
  std::vector<char> have_rotation;
  auto fail = [](int no, const std::string& what) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(no) + ": " + what);
  };
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [no, f] = lines[i];
    const std::string& key = f[0];
    auto scalar = [&] {
      if (f.size() != 2) fail(no, "'" + key + "' takes one value");
      return detail::parse_int(f[1], no);
    };
    if (key == "n") {
      g.n = static_cast<Vertex>(scalar());
      if (g.n < 1) fail(no, "vertex count must be positive");
      g.rotations.assign(static_cast<std::size_t>(g.n), {});
      have_rotation.assign(static_cast<std::size_t>(g.n), 0);
    } else if (key == "m") {
      m = scalar();
      if (*m < 0) fail(no, "arc count must be non-negative");
    } else if (key == "s") {
      g.s = static_cast<Vertex>(scalar());
    } else if (key == "t") {
      g.t = static_cast<Vertex>(scalar());
    } else if (key == "fs") {
      g.fs_hint = static_cast<Dart>(scalar());
    } else if (key == "ft") {
      g.ft_hint = static_cast<Dart>(scalar());
    } else if (key == "a") {
      if (f.size() != 4 && f.size() != 5) fail(no, "arc needs tail, head, cap and optional rev_cap");
      ArcSpec a{static_cast<Vertex>(detail::parse_int(f[1], no)), static_cast<Vertex>(detail::parse_int(f[2], no)),
                detail::parse_int(f[3], no), f.size() == 5 ? detail::parse_int(f[4], no) : 0};
      if (a.cap < 0 || a.rev_cap < 0) fail(no, "capacities must be non-negative");
      if (g.n < 1) fail(no, "'n' must precede arcs");
      if (a.tail < 0 || a.tail >= g.n || a.head < 0 || a.head >= g.n) fail(no, "arc endpoint out of range");
      g.arcs.push_back(a);
    } else if (key == "r") {
      if (f.size() < 2) fail(no, "rotation needs a vertex");
      if (g.n < 1) fail(no, "'n' must precede rotations");
      const auto v = detail::parse_int(f[1], no);
      if (v < 0 || v >= g.n) fail(no, "rotation vertex out of range");
      if (have_rotation[static_cast<std::size_t>(v)]) fail(no, "second rotation for vertex " + f[1]);
      have_rotation[static_cast<std::size_t>(v)] = 1;
      for (std::size_t j = 2; j < f.size(); ++j) {
        g.rotations[static_cast<std::size_t>(v)].push_back(static_cast<Dart>(detail::parse_int(f[j], no)));
      }
    } else {
      fail(no, "unknown record '" + key + "'");
    }
  }
  if (g.n < 1) throw Error(ErrorKind::ParseError, "missing 'n'");
  if (!m) throw Error(ErrorKind::ParseError, "missing 'm'");
  if (static_cast<std::int64_t>(g.arcs.size()) != *m) {
    throw Error(ErrorKind::ParseError,
                "declared " + std::to_string(*m) + " arcs, found " + std::to_string(g.arcs.size()));
  }
  if (g.s == kNoVertex || g.t == kNoVertex) throw Error(ErrorKind::ParseError, "missing 's' or 't'");
  return g;
}

inline Instance parse_graph(std::string_view text) { return make_instance(parse_graph_spec(text)); }

inline std::string serialize_graph(const GraphSpec& g) {
  std::ostringstream out;
  out << "planarflow-graph 1\n";
  out << "n " << g.n << "\nm " << g.arcs.size() << "\ns " << g.s << "\nt " << g.t << "\n";
  if (g.fs_hint) out << "fs " << *g.fs_hint << "\n";
  if (g.ft_hint) out << "ft " << *g.ft_hint << "\n";
  for (const auto& a : g.arcs) out << "a " << a.tail << ' ' << a.head << ' ' << a.cap << ' ' << a.rev_cap << "\n";
  for (std::size_t v = 0; v < g.rotations.size(); ++v) {
    out << "r " << v;
    for (Dart d : g.rotations[v]) out << ' ' << d;
    out << "\n";
  }
  return out.str();
}

// Flow file: header, dart count, then "<dart> <flow>" for every forward dart.
inline std::string serialize_flow(const FlowAssignment& f) {
  std::ostringstream out;
  out << "planarflow-flow 1\ndarts " << f.size() << "\n";
  for (std::size_t d = 0; d < f.size(); d += 2) out << d << ' ' << f[static_cast<Dart>(d)] << "\n";
  return out.str();
}

inline FlowAssignment parse_flow(std::string_view text, std::size_t expected_darts) {
  const auto lines = detail::content_lines(text);
  if (lines.empty() || lines[0].second.size() != 2 || lines[0].second[0] != "planarflow-flow" ||
      lines[0].second[1] != "1") {
    throw Error(ErrorKind::ParseError, "missing 'planarflow-flow 1' header");
  }
  FlowAssignment f(expected_darts);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [no, fields] = lines[i];
    if (fields.size() != 2) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(no) + ": expected two fields");
    }
    if (fields[0] == "darts") {
      if (detail::parse_int(fields[1], no) != static_cast<std::int64_t>(expected_darts)) {
        throw Error(ErrorKind::ParseError, "line " + std::to_string(no) + ": flow has " + fields[1] +
                                               " darts, graph has " + std::to_string(expected_darts));
      }
      continue;
    }
    const auto d = detail::parse_int(fields[0], no);
    if (d < 0 || d >= static_cast<std::int64_t>(expected_darts)) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(no) + ": dart out of range");
    }
    f.set(static_cast<Dart>(d), detail::parse_int(fields[1], no));
  }
  return f;
}

}  // namespace planarflow
