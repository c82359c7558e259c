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

// Exact homomorphism counting and the density functionals built on it.
//
// All counts are exhaustive backtracking searches: pattern vertices are
// assigned one at a time, each candidate image is checked against the
// already-placed neighbours, and a branch dies at the first colour mismatch.
// Long searches poll a std::stop_token and throw Aborted when asked to stop;
// a partial count is never returned.

#ifndef FLAGCERT_COUNTING_HPP_
#define FLAGCERT_COUNTING_HPP_

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <stop_token>
#include <string>
#include <utility>
#include <vector>

#include "flagcert/classify.hpp"
#include "flagcert/graph.hpp"
#include "flagcert/rational.hpp"

// Hardware popcount clone with runtime dispatch where the toolchain allows it.
#if defined(__x86_64__) && defined(__GNUC__) && !defined(__clang__)
#define FLAGCERT_POPCNT_CLONES __attribute__((target_clones("popcnt", "default")))
#else
#define FLAGCERT_POPCNT_CLONES
#endif

namespace flagcert {

using Count = std::uint64_t;

class Aborted : public std::runtime_error {
 public:
  Aborted() : std::runtime_error("aborted: cancellation requested") {}
};

/// Dense map from class index (1-based) to an exact value.
class DensityVector {
 public:
  DensityVector() = default;
  explicit DensityVector(int size) : values_(static_cast<std::size_t>(size)) {}

  int size() const { return static_cast<int>(values_.size()); }
  Rational& operator[](ClassIndex l) { return values_.at(static_cast<std::size_t>(l - 1)); }
  const Rational& operator[](ClassIndex l) const { return values_.at(static_cast<std::size_t>(l - 1)); }

  Rational sum() const {
    Rational s;
    for (const auto& v : values_) s += v;
    return s;
  }
  Rational dot(const DensityVector& other) const {
    if (other.size() != size()) throw std::invalid_argument("density vector size mismatch");
    Rational s;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (!values_[i].is_zero() && !other.values_[i].is_zero()) s += values_[i] * other.values_[i];
    }
    return s;
  }
  /// Indices with nonzero value, ascending.
  std::vector<ClassIndex> support() const {
    std::vector<ClassIndex> out;
    for (std::size_t i = 0; i < values_.size(); ++i)
      if (!values_[i].is_zero()) out.push_back(static_cast<ClassIndex>(i + 1));
    return out;
  }

  friend bool operator==(const DensityVector&, const DensityVector&) = default;

 private:
  std::vector<Rational> values_;
};

namespace detail {

/// Assignment order for a pattern: pinned vertices first, then repeatedly the
/// vertex with the most already-placed neighbours.
struct SearchPlan {
  std::vector<Vertex> order;
  // constraints[k]: (earlier position, required colour cell) for order[k]
  std::vector<std::vector<std::pair<int, std::int8_t>>> constraints;
};

inline SearchPlan make_plan(const ColoredGraph& h, std::span<const Vertex> pinned) {
  const int k = h.n();
  SearchPlan plan;
  std::vector<int> position(k, -1);
  auto place = [&](Vertex v) {
    position[v] = static_cast<int>(plan.order.size());
    plan.order.push_back(v);
  };
  for (Vertex v : pinned) place(v);
  while (static_cast<int>(plan.order.size()) < k) {
    Vertex best = -1;
    int best_links = -1;
    for (Vertex v = 0; v < k; ++v) {
      if (position[v] >= 0) continue;
      int links = 0;
      for (Vertex w : plan.order) links += h.cell(v, w) >= 0;
      if (links > best_links) {
        best = v;
        best_links = links;
      }
    }
    place(best);
  }
  plan.constraints.resize(k);
  for (int pos = 0; pos < k; ++pos) {
    const Vertex v = plan.order[pos];
    for (int earlier = 0; earlier < pos; ++earlier) {
      if (const auto c = h.cell(v, plan.order[earlier]); c >= 0) plan.constraints[pos].emplace_back(earlier, c);
    }
  }
  return plan;
}

class MapCounter {
 public:
  MapCounter(const ColoredGraph& h, const ColoredGraph& g, bool injective, std::span<const Vertex> pinned,
             std::stop_token stop)
      : g_(g), injective_(injective), plan_(make_plan(h, pinned)), image_(h.n(), -1), used_(g.n(), 0),
        stop_(std::move(stop)) {}

  /// Counts maps extending pinned[i] -> pinned_images[i].
  Count run(std::span<const Vertex> pinned_images) {
    const int fixed = static_cast<int>(pinned_images.size());
    for (int pos = 0; pos < fixed; ++pos) {
      const Vertex w = pinned_images[pos];
      if (w < 0 || w >= g_.n()) throw std::out_of_range("pinned image out of range");
      if (injective_ && used_[w]) return 0;
      if (!consistent(pos, w)) return 0;
      image_[pos] = w;
      used_[w] = 1;
    }
    return extend(fixed);
  }

 private:
  bool consistent(int pos, Vertex w) const {
    for (const auto& [earlier, c] : plan_.constraints[pos]) {
      const Vertex x = image_[earlier];
      if (x == w || g_.cell(x, w) != c) return false;
    }
    return true;
  }

  Count extend(int pos) {
    if ((++nodes_ & 0xFFF) == 0 && stop_.stop_requested()) throw Aborted();
    if (pos == static_cast<int>(plan_.order.size())) return 1;
    Count total = 0;
    const bool last = pos + 1 == static_cast<int>(plan_.order.size());
    for (Vertex w = 0; w < g_.n(); ++w) {
      if (injective_ && used_[w]) continue;
      if (!consistent(pos, w)) continue;
      if (last) {
        ++total;
        continue;
      }
      image_[pos] = w;
      used_[w] += 1;
      total += extend(pos + 1);
      used_[w] -= 1;
    }
    return total;
  }

  const ColoredGraph& g_;
  bool injective_;
  SearchPlan plan_;
  std::vector<Vertex> image_;  // indexed by position in plan_.order
  std::vector<int> used_;
  std::stop_token stop_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// hom(h, g): maps sending each edge of h to an equally coloured edge of g.
inline Count hom_count(const ColoredGraph& h, const ColoredGraph& g, std::stop_token stop = {}) {
  if (h.n() == 0) return 1;
  detail::MapCounter counter(h, g, /*injective=*/false, {}, std::move(stop));
  return counter.run({});
}

/// Injective homomorphisms; zero when g has fewer vertices than h.
inline Count hom_inj_count(const ColoredGraph& h, const ColoredGraph& g, std::stop_token stop = {}) {
  if (g.n() < h.n()) return 0;
  if (h.n() == 0) return 1;
  detail::MapCounter counter(h, g, /*injective=*/true, {}, std::move(stop));
  return counter.run({});
}

/// Injective homomorphisms of f.graph sending root i to images[i].
inline Count rooted_hom_inj_count(const Flag& f, const ColoredGraph& g, std::span<const Vertex> images,
                                  std::stop_token stop = {}) {
  if (images.size() != f.roots.size()) throw std::invalid_argument("one image per root required");
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] < 0 || images[i] >= g.n()) throw std::out_of_range("root image out of range");
    for (std::size_t j = 0; j < i; ++j) {
      if (images[i] == images[j]) throw std::invalid_argument("root images must be distinct");
    }
  }
  if (g.n() < f.graph.n()) return 0;
  detail::MapCounter counter(f.graph, g, /*injective=*/true, f.roots, std::move(stop));
  return counter.run(images);
}

/// hom_inj(F, G; u, v) for a two-rooted flag.
inline Count rooted_hom_inj_count(const Flag& f, const ColoredGraph& g, Vertex u, Vertex v,
                                  std::stop_token stop = {}) {
  const std::array<Vertex, 2> images{u, v};
  return rooted_hom_inj_count(f, g, images, std::move(stop));
}

/// t(h, g) = hom(h, g) / v(g)^v(h).
inline Rational t_hom(const ColoredGraph& h, const ColoredGraph& g, std::stop_token stop = {}) {
  if (h.n() == 0) return 1;
  if (g.n() == 0) return 0;
  return Rational(BigInt(hom_count(h, g, std::move(stop))), boost::multiprecision::pow(BigInt(g.n()), h.n()));
}

/// t_inj(h, g) = hom_inj(h, g) (v(g) - v(h))! / v(g)!; zero when v(g) < v(h).
inline Rational t_inj_from_count(Count hom_inj, int pattern_vertices, int host_vertices) {
  if (host_vertices < pattern_vertices) return 0;
  return Rational(BigInt(hom_inj), falling_factorial(static_cast<unsigned>(host_vertices),
                                                     static_cast<unsigned>(pattern_vertices)));
}

inline Rational t_inj(const ColoredGraph& h, const ColoredGraph& g, std::stop_token stop = {}) {
  return t_inj_from_count(hom_inj_count(h, g, std::move(stop)), h.n(), g.n());
}

/// d(J_l, g) = (group order / aut(J_l)) t_inj(J_l, g), defined on cliques.
inline Rational d_density(ClassIndex l, const ColoredGraph& g, const ClassTable& table, std::stop_token stop = {}) {
  if (!g.is_clique()) throw std::invalid_argument("class densities are defined on cliques only");
  const auto& c = table.at(l);
  return Rational(c.multiplicity) * t_inj(c.representative, g, std::move(stop));
}

/// All class densities of a clique.
inline DensityVector density_vector(const ColoredGraph& g, const ClassTable& table, std::stop_token stop = {}) {
  if (!g.is_clique()) throw std::invalid_argument("class densities are defined on cliques only");
  DensityVector d(table.size());
  for (const auto& c : table.classes()) {
    d[c.index] = Rational(c.multiplicity) * t_inj(c.representative, g, stop);
  }
  return d;
}

/// Fraction of the injective embeddings of h's uncoloured shape into j's
/// uncoloured shape that also respect every colour of h.
inline Rational t_bip(const ColoredGraph& h, const ColoredGraph& j, std::stop_token stop = {}) {
  const Count total = hom_inj_count(h.underlying(), j.underlying(), stop);
  if (total == 0) throw std::invalid_argument("pattern does not embed in the template: " + h.to_string());
  return Rational(BigInt(hom_inj_count(h, j, std::move(stop))), BigInt(total));
}

/// Blow-up: vertex x becomes the independent set {x*N, ..., x*N + N-1};
/// pairs in different sets inherit the colour of the original edge.
inline ColoredGraph blow_up(const ColoredGraph& g, int copies) {
  if (copies < 1) throw std::invalid_argument("blow-up factor must be positive");
  ColoredGraph out(g.n() * copies);
  for (const auto& e : g.edges()) {
    for (int a = 0; a < copies; ++a)
      for (int b = 0; b < copies; ++b) out.set_edge(e.u * copies + a, e.v * copies + b, e.color);
  }
  return out;
}

namespace detail {

/// Neighbourhood bitsets per colour.
class NeighbourBits {
 public:
  explicit NeighbourBits(const ColoredGraph& g) : n_(g.n()), words_((g.n() + 63) / 64) {
    for (auto& b : bits_) b.assign(static_cast<std::size_t>(n_) * words_, 0);
    for (const auto& e : g.edges()) {
      auto& b = bits_[static_cast<int>(e.color)];
      b[static_cast<std::size_t>(e.u) * words_ + e.v / 64] |= std::uint64_t{1} << (e.v % 64);
      b[static_cast<std::size_t>(e.v) * words_ + e.u / 64] |= std::uint64_t{1} << (e.u % 64);
    }
  }
  int words() const { return words_; }
  const std::uint64_t* row(Color c, Vertex v) const {
    return bits_[static_cast<int>(c)].data() + static_cast<std::size_t>(v) * words_;
  }

 private:
  int n_;
  int words_;
  std::array<std::vector<std::uint64_t>, 2> bits_;
};

}  // namespace detail

namespace detail {

// Body of hom_inj_six_cycle. It must not throw: GCC 11 marks the dispatcher of
// a target_clones function nothrow, so cancellation is reported through
// `aborted` and raised by the caller. `scratch` holds 6 * nb.words() words.
FLAGCERT_POPCNT_CLONES
inline Count six_cycle_kernel(std::span<const Color, 6> pattern, const NeighbourBits& nb, int n,
                              std::uint64_t* scratch, const std::stop_token& stop, bool& aborted) {
  const int w = nb.words();
  std::uint64_t *s1 = scratch, *s3 = s1 + w, *s5 = s3 + w, *p1 = s5 + w, *p3 = p1 + w, *p5 = p3 + w;
  auto without = [](std::uint64_t* s, Vertex x) { s[x / 64] &= ~(std::uint64_t{1} << (x % 64)); };
  Count total = 0;
  for (Vertex v0 = 0; v0 < n; ++v0) {
    if (stop.stop_requested()) {
      aborted = true;
      return 0;
    }
    const auto* c0 = nb.row(pattern[5], v0);
    for (Vertex v2 = 0; v2 < n; ++v2) {
      if (v2 == v0) continue;
      // Parts of the three candidate sets that do not depend on v4.
      const auto* a0 = nb.row(pattern[0], v0);
      const auto* a2 = nb.row(pattern[1], v2);
      const auto* b2 = nb.row(pattern[2], v2);
      for (int k = 0; k < w; ++k) {
        p1[k] = a0[k] & a2[k];
        p3[k] = b2[k];
        p5[k] = c0[k];
      }
      without(p3, v0);
      without(p5, v2);
      for (Vertex v4 = 0; v4 < n; ++v4) {
        if (v4 == v0 || v4 == v2) continue;
        const auto* b4 = nb.row(pattern[3], v4);
        const auto* c4 = nb.row(pattern[4], v4);
        std::uint64_t n1 = 0, n3 = 0, n5 = 0, n13 = 0, n15 = 0, n35 = 0, n135 = 0;
        for (int k = 0; k < w; ++k) {
          s1[k] = p1[k];
          s3[k] = p3[k] & b4[k];
          s5[k] = p5[k] & c4[k];
        }
        without(s1, v4);
        for (int k = 0; k < w; ++k) {
          const std::uint64_t x1 = s1[k], x3 = s3[k], x5 = s5[k];
          n1 += std::popcount(x1);
          n3 += std::popcount(x3);
          n5 += std::popcount(x5);
          n13 += std::popcount(x1 & x3);
          n15 += std::popcount(x1 & x5);
          n35 += std::popcount(x3 & x5);
          n135 += std::popcount(x1 & x3 & x5);
        }
        total += n1 * n3 * n5 + 2 * n135 - n13 * n5 - n15 * n3 - n35 * n1;
      }
    }
  }
  return total;
}

}  // namespace detail

/// Injective homomorphisms of the 6-cycle coloured by `pattern` (edge i joins
/// cycle vertices i and i+1) into g, in O(n^3 n/64) time.
///
/// Fix the images of the even cycle vertices; each odd vertex then ranges
/// over a common neighbourhood, minus the one even image it may not reuse,
/// and the three odd choices are made distinct by inclusion-exclusion.
inline Count hom_inj_six_cycle(std::span<const Color, 6> pattern, const ColoredGraph& g, std::stop_token stop = {}) {
  const int n = g.n();
  if (n < 6) return 0;
  const detail::NeighbourBits nb(g);
  std::vector<std::uint64_t> scratch(6 * static_cast<std::size_t>(nb.words()));
  bool aborted = false;
  const Count total = detail::six_cycle_kernel(pattern, nb, n, scratch.data(), stop, aborted);
  if (aborted) throw Aborted();
  return total;
}

/// t_inj of a coloured 6-cycle through the fast counter.
inline Rational t_inj_six_cycle(std::span<const Color, 6> pattern, const ColoredGraph& g, std::stop_token stop = {}) {
  return t_inj_from_count(hom_inj_six_cycle(pattern, g, std::move(stop)), 6, g.n());
}

/// Colour pattern of the alternating 6-cycle, matching alternating_cycle(6).
inline constexpr std::array<Color, 6> kAlternatingSixCycle{Color::Red, Color::Blue, Color::Red,
                                                            Color::Blue, Color::Red, Color::Blue};

}  // namespace flagcert

#endif  // FLAGCERT_COUNTING_HPP_
