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

// Brute-force confirmation of the certificate identities on concrete
// cliques, and Monte Carlo estimates on random colourings.
//
// Randomness: the colour of edge {u, v} (u < v) in random_clique_coloring(n,
// seed) is Blue iff the top bit of mix64(seed, v(v-1)/2 + u) is set, where
//
//   mix64(s, i) = splitmix64_finalize(s + 0x9E3779B97F4A7C15 * (i + 1))
//
// and splitmix64_finalize is the output function of SplitMix64. Trial seeds
// are mix64(master, trial). Nothing depends on iteration order or threads.

#ifndef FLAGCERT_ORACLE_HPP_
#define FLAGCERT_ORACLE_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <stop_token>
#include <string>
#include <vector>

#include "flagcert/certificate.hpp"
#include "flagcert/counting.hpp"
#include "flagcert/parallel.hpp"

namespace flagcert {

using Seed = std::uint64_t;

inline constexpr std::uint64_t splitmix64_finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t mix64(Seed seed, std::uint64_t index) {
  return splitmix64_finalize(seed + 0x9E3779B97F4A7C15ULL * (index + 1));
}

inline constexpr Seed derive_seed(Seed master, std::uint64_t index) { return mix64(master, index); }

/// Uniform red/blue colouring of K_n; see the header comment for the stream.
inline ColoredGraph random_clique_coloring(int n, Seed seed) {
  if (n < 1) throw std::invalid_argument("random clique needs n >= 1");
  ColoredGraph g(n);
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      const std::uint64_t e = static_cast<std::uint64_t>(v) * (v - 1) / 2 + u;
      g.set_edge(u, v, (mix64(seed, e) >> 63) ? Color::Blue : Color::Red);
    }
  }
  return g;
}

/// Colouring number `code` of K_n: edge {u, v} is Blue iff bit v(v-1)/2 + u is set.
inline ColoredGraph clique_coloring_from_code(int n, std::uint64_t code) {
  if (n < 1 || n * (n - 1) / 2 > 64) throw std::invalid_argument("clique too large for a 64-bit colouring code");
  ColoredGraph g(n);
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) g.set_edge(u, v, ((code >> (v * (v - 1) / 2 + u)) & 1) ? Color::Blue : Color::Red);
  return g;
}

struct OracleRecord {
  std::string check;
  std::string instance;
  Rational lhs;
  Rational rhs;
  bool holds = false;

  friend bool operator==(const OracleRecord&, const OracleRecord&) = default;
};

struct CheckTally {
  long passed = 0;
  long failed = 0;
  friend bool operator==(const CheckTally&, const CheckTally&) = default;
};

/// Records plus per-check tallies. The tallies always count every record that
/// was added, including records that were not retained.
class OracleReport {
 public:
  OracleReport() = default;
  /// With retain_passing == false only failing records are stored.
  explicit OracleReport(bool retain_passing) : retain_passing_(retain_passing) {}

  void add(OracleRecord r) {
    auto& t = tallies_[r.check];
    (r.holds ? t.passed : t.failed) += 1;
    if (r.holds) ++passed_;
    else ++failed_;
    if (retain_passing_ || !r.holds) records_.push_back(std::move(r));
  }

  /// Appends `other`; merging is associative, and order only affects the
  /// sequence of stored records.
  void merge(const OracleReport& other) {
    for (const auto& [name, t] : other.tallies_) {
      tallies_[name].passed += t.passed;
      tallies_[name].failed += t.failed;
    }
    passed_ += other.passed_;
    failed_ += other.failed_;
    instances_ += other.instances_;
    records_.insert(records_.end(), other.records_.begin(), other.records_.end());
  }

  void count_instance() { ++instances_; }

  const std::vector<OracleRecord>& records() const { return records_; }
  const std::map<std::string, CheckTally>& tallies() const { return tallies_; }
  long passed() const { return passed_; }
  long failed() const { return failed_; }
  long total() const { return passed_ + failed_; }
  long instances() const { return instances_; }
  bool ok() const { return failed_ == 0 && total() > 0; }

  friend bool operator==(const OracleReport&, const OracleReport&) = default;

 private:
  bool retain_passing_ = true;
  std::vector<OracleRecord> records_;
  std::map<std::string, CheckTally> tallies_;
  long passed_ = 0;
  long failed_ = 0;
  long instances_ = 0;
};

struct MonteCarloResult {
  int n = 0;
  long trials = 0;
  Seed seed = 0;
  Rational mean;
  Rational min;
  Rational max;
  std::vector<Rational> values;  // per trial, in trial order

  friend bool operator==(const MonteCarloResult&, const MonteCarloResult&) = default;
};

/// Brute-force checker bound to one certificate.
class Oracle {
 public:
  /// Largest clique the exact checks accept.
  static constexpr int kMaxExactVertices = 14;

  explicit Oracle(Certificate cert = builtin_c6a_certificate())
      : cert_(std::move(cert)), table_(certificate_class_table(cert_)), base_(base_vector(cert_, table_.size())),
        target_expansion_(expand_in_classes(cert_.target, table_)) {
    for (const auto& family : cert_.families) {
      if (auto p = detail::family_problem(family)) throw std::invalid_argument("malformed family: " + *p);
      FamilyData data{&family, {}, expand_family(family, table_), {}, BigInt(1)};
      const std::size_t m = family.flags.size();
      data.products.resize(m);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          data.products[i].push_back(flag_product_rooted(family.flags[i], family.flags[j]));
      for (int i = 0; i < family.matrix.order(); ++i)
        for (int j = 0; j < family.matrix.order(); ++j)
          data.scale = boost::multiprecision::lcm(data.scale, family.matrix(i, j).denominator());
      data.scaled.assign(m * m, 0);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          const BigInt v = family.matrix(static_cast<int>(i), static_cast<int>(j)).numerator() * data.scale /
                           family.matrix(static_cast<int>(i), static_cast<int>(j)).denominator();
          if (boost::multiprecision::abs(v) > BigInt(1) << 40) throw std::invalid_argument("matrix entries too large");
          data.scaled[i * m + j] = static_cast<long long>(v);
        }
      }
      families_.push_back(std::move(data));
    }
  }

  // Family data points into cert_.
  Oracle(const Oracle&) = delete;
  Oracle& operator=(const Oracle&) = delete;

  const Certificate& certificate() const { return cert_; }
  const ClassTable& table() const { return table_; }

  /// (a) sum of class densities, (b) the target expansion identity and (c)
  /// every product expansion identity, all exact.
  OracleReport check_identities(const ColoredGraph& g, const std::string& instance = "",
                                std::stop_token stop = {}) const {
    require_clique(g, 0);
    const auto ev = evaluate(g, stop);
    OracleReport report;
    identities_into(ev, label(g, instance), report);
    report.count_instance();
    return report;
  }

  /// The flagged inequality: lhs = t_inj(target, g), rhs = base . d plus the
  /// normalised sum over ordered root pairs of the family quadratic forms.
  /// Also records, per family and (i, j), the overlap surplus
  /// sum_{u,v} x_i x_j >= hom_inj(F_i . F_j, g).
  OracleReport check_flagged_inequality(const ColoredGraph& g, const std::string& instance = "",
                                        std::stop_token stop = {}) const {
    require_clique(g, 6);
    const auto ev = evaluate(g, stop);
    OracleReport report;
    inequality_into(g, ev, label(g, instance), report, stop);
    report.count_instance();
    return report;
  }

  /// Both checks on one clique, sharing the expensive counts.
  OracleReport check_all(const ColoredGraph& g, const std::string& instance = "", bool retain_passing = true,
                         std::stop_token stop = {}) const {
    require_clique(g, 6);
    const auto ev = evaluate(g, stop);
    OracleReport report(retain_passing);
    const auto name = label(g, instance);
    identities_into(ev, name, report);
    inequality_into(g, ev, name, report, stop);
    report.count_instance();
    return report;
  }

  /// Colourings first..last-1 of K_n in clique_coloring_from_code numbering;
  /// only failing records are retained. Work is split into fixed chunks that
  /// are merged in code order, so the report does not depend on `threads`.
  OracleReport sweep_cliques(int n, std::uint64_t first, std::uint64_t last, unsigned threads = 1,
                             std::stop_token stop = {}) const {
    if (first > last) throw std::invalid_argument("empty colouring range");
    constexpr std::uint64_t kChunk = 512;
    const std::size_t chunks = static_cast<std::size_t>((last - first + kChunk - 1) / kChunk);
    std::vector<OracleReport> parts(chunks, OracleReport(false));
    parallel_for(chunks, threads, [&](std::size_t c) {
      const std::uint64_t begin = first + c * kChunk;
      const std::uint64_t end = std::min(last, begin + kChunk);
      for (std::uint64_t code = begin; code < end; ++code) {
        parts[c].merge(check_all(clique_coloring_from_code(n, code),
                                 "K" + std::to_string(n) + " colouring " + std::to_string(code), false, stop));
      }
    });
    OracleReport out(false);
    for (const auto& p : parts) out.merge(p);
    return out;
  }

  /// Every colouring of K_6.
  OracleReport exhaustive_k6(unsigned threads = 1, std::stop_token stop = {}) const {
    return sweep_cliques(6, 0, std::uint64_t{1} << 15, threads, stop);
  }

 private:
  struct FamilyData {
    const FlagFamily* family;
    std::vector<std::vector<Flag>> products;  // [i][j] = F_i . F_j, rooted
    FamilyExpansions expansions;
    std::vector<long long> scaled;  // scale * matrix, row-major
    BigInt scale;
  };

  struct Evaluation {
    int n = 0;
    DensityVector d;
    Count target_count = 0;
    std::vector<std::vector<Count>> product_counts;  // [family][i*m + j]
  };

  static std::string label(const ColoredGraph& g, const std::string& instance) {
    return instance.empty() ? "K" + std::to_string(g.n()) : instance;
  }

  static void require_clique(const ColoredGraph& g, int min_vertices) {
    if (!g.is_clique()) throw std::invalid_argument("oracle checks need a complete coloured graph");
    if (g.n() < min_vertices) {
      throw std::invalid_argument("check needs n >= " + std::to_string(min_vertices) + ", got " + std::to_string(g.n()));
    }
    if (g.n() > kMaxExactVertices) {
      const BigInt maps = falling_factorial(static_cast<unsigned>(g.n()), 6);
      throw std::invalid_argument("n = " + std::to_string(g.n()) + " exceeds " + std::to_string(kMaxExactVertices) +
                                  ": each product count ranges over up to " + maps.str() +
                                  " injective maps, times 128 products");
    }
  }

  Evaluation evaluate(const ColoredGraph& g, std::stop_token stop) const {
    Evaluation ev;
    ev.n = g.n();
    ev.d = density_vector(g, table_, stop);
    ev.target_count = hom_inj_count(cert_.target, g, stop);
    for (const auto& fam : families_) {
      const std::size_t m = fam.products.size();
      std::vector<Count> counts(m * m);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) counts[i * m + j] = hom_inj_count(fam.products[i][j].graph, g, stop);
      ev.product_counts.push_back(std::move(counts));
    }
    return ev;
  }

  void identities_into(const Evaluation& ev, const std::string& instance, OracleReport& report) const {
    const Rational sum = ev.d.sum();
    const Rational expected_sum = ev.n >= cert_.target.n() ? Rational(1) : Rational(0);
    report.add({"sum_density", instance, sum, expected_sum, sum == expected_sum});

    const Rational t = t_inj_from_count(ev.target_count, cert_.target.n(), ev.n);
    const Rational rhs = target_expansion_.dot(ev.d);
    report.add({"double_count", instance, t, rhs, t == rhs});

    for (std::size_t f = 0; f < families_.size(); ++f) {
      const auto& fam = families_[f];
      const std::size_t m = fam.products.size();
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          const auto& p = fam.products[i][j].graph;
          const Rational lhs = t_inj_from_count(ev.product_counts[f][i * m + j], p.n(), ev.n);
          const Rational r = fam.expansions[i][j].dot(ev.d);
          report.add({"expansion:" + pair_name(*fam.family, i, j), instance, lhs, r, lhs == r});
        }
      }
    }
  }

  void inequality_into(const ColoredGraph& g, const Evaluation& ev, const std::string& instance,
                       OracleReport& report, std::stop_token stop) const {
    const int n = g.n();
    const int k = cert_.target.n();
    Rational quadratic;
    for (std::size_t f = 0; f < families_.size(); ++f) {
      const auto& fam = families_[f];
      const auto& flags = fam.family->flags;
      const std::size_t m = flags.size();
      const std::size_t r = flags.front().roots.size();
      std::vector<BigInt> pair_sums(m * m);
      BigInt form_sum = 0;
      std::vector<Count> x(m);
      std::vector<Vertex> images(r);
      // Every ordered tuple of distinct root images.
      auto visit = [&]() {
        for (std::size_t i = 0; i < m; ++i) x[i] = rooted_hom_inj_count(flags[i], g, images, stop);
        __int128 form = 0;
        for (std::size_t i = 0; i < m; ++i) {
          if (x[i] == 0) continue;
          for (std::size_t j = 0; j < m; ++j) {
            if (x[j] == 0) continue;
            const __int128 xx = static_cast<__int128>(x[i]) * x[j];
            form += fam.scaled[i * m + j] * xx;
            pair_sums[i * m + j] += static_cast<unsigned long long>(x[i] * x[j]);
          }
        }
        form_sum += to_big(form);
      };
      for_each_injective_tuple(n, images, 0, visit);
      quadratic += Rational(form_sum, fam.scale);

      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          const Rational product_count(BigInt(ev.product_counts[f][i * m + j]));
          const Rational squares(pair_sums[i * m + j]);
          report.add({"surplus:" + pair_name(*fam.family, i, j), instance, product_count, squares,
                      product_count <= squares});
        }
      }
    }
    const Rational lhs = t_inj_from_count(ev.target_count, k, n);
    const Rational rhs = base_.dot(ev.d) + quadratic / Rational(falling_factorial(static_cast<unsigned>(n),
                                                                                  static_cast<unsigned>(k)));
    report.add({"inequality", instance, lhs, rhs, lhs <= rhs});
  }

  template <typename Fn>
  static void for_each_injective_tuple(int n, std::vector<Vertex>& images, std::size_t pos, Fn& fn) {
    if (pos == images.size()) {
      fn();
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      bool used = false;
      for (std::size_t k = 0; k < pos; ++k) used = used || images[k] == v;
      if (used) continue;
      images[pos] = v;
      for_each_injective_tuple(n, images, pos + 1, fn);
    }
  }

  static BigInt to_big(__int128 v) {
    const bool negative = v < 0;
    unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    BigInt out = static_cast<unsigned long long>(u >> 64);
    out <<= 64;
    out += static_cast<unsigned long long>(u);
    return negative ? BigInt(-out) : out;
  }

  static std::string pair_name(const FlagFamily& family, std::size_t i, std::size_t j) {
    const char c = color_letter(family.root_edge_color);
    return std::string(1, c) + std::to_string(i + 1) + "." + c + std::to_string(j + 1);
  }

  Certificate cert_;
  ClassTable table_;
  DensityVector base_;
  DensityVector target_expansion_;
  std::vector<FamilyData> families_;
};

/// Exact mean, min and max of t_inj(C_6^A, .) over random cliques.
inline MonteCarloResult monte_carlo_mean(int n, long trials, Seed seed, unsigned threads = 1,
                                         std::stop_token stop = {}) {
  if (n < 6) throw std::invalid_argument("Monte Carlo needs n >= 6");
  if (trials < 1) throw std::invalid_argument("Monte Carlo needs at least one trial");
  MonteCarloResult out;
  out.n = n;
  out.trials = trials;
  out.seed = seed;
  out.values.resize(static_cast<std::size_t>(trials));
  parallel_for(out.values.size(), threads, [&](std::size_t t) {
    const auto g = random_clique_coloring(n, derive_seed(seed, t));
    out.values[t] = t_inj_six_cycle(kAlternatingSixCycle, g, stop);
  });
  Rational sum;
  out.min = out.values.front();
  out.max = out.values.front();
  for (const auto& v : out.values) {
    sum += v;
    if (v < out.min) out.min = v;
    if (v > out.max) out.max = v;
  }
  out.mean = sum / Rational(trials);
  return out;
}

}  // namespace flagcert

#endif  // FLAGCERT_ORACLE_HPP_
