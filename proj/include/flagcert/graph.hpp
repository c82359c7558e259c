// Copyright 2026 The flagcert Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Red/blue edge-coloured simple graphs, rooted flags, brute-force symmetry
// search and canonical codes for small graphs.

#ifndef FLAGCERT_GRAPH_HPP_
#define FLAGCERT_GRAPH_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace flagcert {

enum class Color : std::uint8_t { Red = 0, Blue = 1 };

constexpr Color swap(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }

constexpr char color_letter(Color c) { return c == Color::Red ? 'R' : 'B'; }

inline Color color_from_letter(char c) {
  if (c == 'R') return Color::Red;
  if (c == 'B') return Color::Blue;
  throw std::invalid_argument(std::string("unknown colour letter '") + c + "'");
}

using Vertex = int;
using Permutation = std::vector<Vertex>;

/// Largest vertex count accepted by the factorial-time searches.
inline constexpr int kMaxSearchVertices = 8;

struct ColoredEdge {
  Vertex u;
  Vertex v;
  Color color;

  friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
  friend auto operator<=>(const ColoredEdge&, const ColoredEdge&) = default;
};

/// Simple graph whose every edge is red or blue. Stored as a dense symmetric
/// colour matrix; absent pairs are non-edges. No loops.
class ColoredGraph {
 public:
  ColoredGraph() = default;
  explicit ColoredGraph(int n) : n_(n), cells_(checked_size(n), kAbsent) {}
  ColoredGraph(int n, std::span<const ColoredEdge> edges) : ColoredGraph(n) {
    for (const auto& e : edges) set_edge(e.u, e.v, e.color);
  }
  ColoredGraph(int n, std::initializer_list<ColoredEdge> edges)
      : ColoredGraph(n, std::span<const ColoredEdge>(edges.begin(), edges.size())) {}

  int n() const { return n_; }

  std::optional<Color> color(Vertex u, Vertex v) const {
    check_pair(u, v);
    const auto c = cells_[index(u, v)];
    if (c == kAbsent) return std::nullopt;
    return static_cast<Color>(c);
  }
  bool has_edge(Vertex u, Vertex v) const { return color(u, v).has_value(); }

  /// Raw cell: 0 red, 1 blue, -1 absent (also -1 on the diagonal).
  std::int8_t cell(Vertex u, Vertex v) const { return cells_[index(u, v)]; }

  void set_edge(Vertex u, Vertex v, Color c) {
    check_pair(u, v);
    cells_[index(u, v)] = static_cast<std::int8_t>(c);
    cells_[index(v, u)] = static_cast<std::int8_t>(c);
  }
  void remove_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    cells_[index(u, v)] = kAbsent;
    cells_[index(v, u)] = kAbsent;
  }

  /// Edges with u < v, sorted by (u, v).
  std::vector<ColoredEdge> edges() const {
    std::vector<ColoredEdge> out;
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = u + 1; v < n_; ++v) {
        if (const auto c = cells_[index(u, v)]; c != kAbsent) out.push_back({u, v, static_cast<Color>(c)});
      }
    }
    return out;
  }
  int edge_count() const {
    int count = 0;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v) count += cells_[index(u, v)] != kAbsent;
    return count;
  }

  bool is_clique() const {
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v)
        if (cells_[index(u, v)] == kAbsent) return false;
    return true;
  }

  /// Image under a vertex relabelling: vertex v of *this becomes perm[v].
  ColoredGraph relabel(std::span<const Vertex> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
    ColoredGraph out(n_);
    for (const auto& e : edges()) out.set_edge(perm[e.u], perm[e.v], e.color);
    return out;
  }

  ColoredGraph swapped_colors() const {
    ColoredGraph out(n_);
    for (const auto& e : edges()) out.set_edge(e.u, e.v, swap(e.color));
    return out;
  }

  /// Every edge recoloured red; the shape of the graph without its colours.
  ColoredGraph underlying() const {
    ColoredGraph out(n_);
    for (const auto& e : edges()) out.set_edge(e.u, e.v, Color::Red);
    return out;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "n=" << n_ << " {";
    bool first = true;
    for (const auto& e : edges()) {
      os << (first ? "" : " ") << e.u << '-' << e.v << color_letter(e.color);
      first = false;
    }
    os << '}';
    return os.str();
  }

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  static constexpr std::int8_t kAbsent = -1;

  static std::size_t checked_size(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  }
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }
  void check_pair(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
  }

  int n_ = 0;
  std::vector<std::int8_t> cells_;
};

/// A coloured graph with an ordered list of distinct root vertices.
struct Flag {
  ColoredGraph graph;
  std::vector<Vertex> roots;

  Flag() = default;
  Flag(ColoredGraph g, std::vector<Vertex> r) : graph(std::move(g)), roots(std::move(r)) { validate(); }

  void validate() const {
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (roots[i] < 0 || roots[i] >= graph.n()) throw std::invalid_argument("flag root out of range");
      for (std::size_t j = 0; j < i; ++j) {
        if (roots[i] == roots[j]) throw std::invalid_argument("flag roots must be distinct");
      }
    }
  }

  /// Colour of the edge joining the first two roots, if any.
  std::optional<Color> root_edge_color() const {
    if (roots.size() < 2) return std::nullopt;
    return graph.color(roots[0], roots[1]);
  }

  Flag swapped_colors() const { return Flag(graph.swapped_colors(), roots); }

  friend bool operator==(const Flag&, const Flag&) = default;
};

/// Complete graph on n vertices with every edge coloured c.
inline ColoredGraph monochromatic_clique(int n, Color c) {
  ColoredGraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.set_edge(u, v, c);
  return g;
}

/// K_{a,b} with parts {0..a-1} and {a..a+b-1}, every edge coloured c.
inline ColoredGraph complete_bipartite(int a, int b, Color c = Color::Red) {
  ColoredGraph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) g.set_edge(u, v, c);
  return g;
}

/// Cycle 0-1-...-(k-1)-0 whose i-th edge {i, i+1 mod k} has colour pattern[i].
inline ColoredGraph colored_cycle(std::span<const Color> pattern) {
  const int k = static_cast<int>(pattern.size());
  if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  ColoredGraph g(k);
  for (int i = 0; i < k; ++i) g.set_edge(i, (i + 1) % k, pattern[i]);
  return g;
}

/// The alternating cycle on 2k vertices: edges alternate red, blue, red, ...
inline ColoredGraph alternating_cycle(int length) {
  if (length < 4 || length % 2 != 0) throw std::invalid_argument("alternating cycle needs even length >= 4");
  std::vector<Color> pattern(length);
  for (int i = 0; i < length; ++i) pattern[i] = i % 2 == 0 ? Color::Red : Color::Blue;
  return colored_cycle(pattern);
}

namespace detail {

inline void check_search_size(int n) {
  if (n > kMaxSearchVertices) {
    throw std::invalid_argument("exhaustive permutation search limited to " + std::to_string(kMaxSearchVertices) +
                                " vertices, got " + std::to_string(n));
  }
}

inline bool preserves_adjacency(const ColoredGraph& g, std::span<const Vertex> p) {
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if ((g.cell(u, v) < 0) != (g.cell(p[u], p[v]) < 0)) return false;
  return true;
}

inline bool preserves_colors(const ColoredGraph& g, std::span<const Vertex> p) {
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (g.cell(u, v) != g.cell(p[u], p[v])) return false;
  return true;
}

}  // namespace detail

/// All vertex permutations that are automorphisms of g with colours ignored,
/// found by trying each of the n! permutations.
inline std::vector<Permutation> underlying_automorphisms(const ColoredGraph& g) {
  detail::check_search_size(g.n());
  std::vector<Permutation> out;
  Permutation p(g.n());
  std::iota(p.begin(), p.end(), 0);
  do {
    if (detail::preserves_adjacency(g, p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Number of permutations in `group` that preserve every edge colour of g.
inline long automorphism_count(const ColoredGraph& g, std::span<const Permutation> group) {
  long count = 0;
  for (const auto& p : group) count += detail::preserves_colors(g, p);
  return count;
}

/// aut(g): colour-preserving automorphisms.
inline long automorphism_count(const ColoredGraph& g) {
  const auto group = underlying_automorphisms(g);
  return automorphism_count(g, group);
}

/// Edge-colour encoding: (u, v, colour) with u < v in (u, v) order, red = 0,
/// blue = 1, absent pairs omitted. Compared lexicographically.
class CanonicalCode {
 public:
  using Entry = std::tuple<std::uint8_t, std::uint8_t, std::uint8_t>;

  CanonicalCode() = default;
  static CanonicalCode encode(const ColoredGraph& g) {
    CanonicalCode code;
    for (const auto& e : g.edges()) {
      code.entries_.emplace_back(static_cast<std::uint8_t>(e.u), static_cast<std::uint8_t>(e.v),
                                 static_cast<std::uint8_t>(e.color));
    }
    return code;
  }

  const std::vector<Entry>& entries() const { return entries_; }

  /// "u-v:c" entries joined by commas, e.g. "0-3:0,0-4:1".
  std::string to_string() const {
    std::string out;
    for (const auto& [u, v, c] : entries_) {
      if (!out.empty()) out += ',';
      out += std::to_string(u) + '-' + std::to_string(v) + ':' + std::to_string(c);
    }
    return out;
  }

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Least encoding of g over all relabellings in `group`.
inline CanonicalCode canonical_form(const ColoredGraph& g, std::span<const Permutation> group) {
  if (group.empty()) throw std::invalid_argument("canonical_form needs a non-empty group");
  std::optional<CanonicalCode> best;
  for (const auto& p : group) {
    auto code = CanonicalCode::encode(g.relabel(p));
    if (!best || code < *best) best = std::move(code);
  }
  return *best;
}

/// Largest template edge count accepted by enumerate_template_colorings.
inline constexpr int kMaxTemplateEdges = 16;

/// Every red/blue colouring of the edges of `tmpl`. Colouring k paints the
/// i-th sorted edge blue iff bit (e-1-i) of k is set, so the list starts with
/// the all-red colouring and is lexicographic with red before blue.
inline std::vector<ColoredGraph> enumerate_template_colorings(const ColoredGraph& tmpl) {
  const auto pairs = tmpl.edges();
  const int e = static_cast<int>(pairs.size());
  if (e > kMaxTemplateEdges) {
    throw std::invalid_argument("template has " + std::to_string(e) + " edges, limit is " +
                                std::to_string(kMaxTemplateEdges));
  }
  std::vector<ColoredGraph> out;
  out.reserve(std::size_t{1} << e);
  for (std::uint32_t k = 0; k < (std::uint32_t{1} << e); ++k) {
    ColoredGraph g(tmpl.n());
    for (int i = 0; i < e; ++i) {
      const bool blue = (k >> (e - 1 - i)) & 1U;
      g.set_edge(pairs[i].u, pairs[i].v, blue ? Color::Blue : Color::Red);
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace flagcert

#endif  // FLAGCERT_GRAPH_HPP_
