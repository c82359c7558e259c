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

// Flag-algebra certificates: the proof object, flag products, the
// coefficient engine and the verifier that ties them together.

#ifndef FLAGCERT_CERTIFICATE_HPP_
#define FLAGCERT_CERTIFICATE_HPP_

#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagcert/builtin.hpp"
#include "flagcert/classify.hpp"
#include "flagcert/counting.hpp"
#include "flagcert/golden.hpp"
#include "flagcert/graph.hpp"
#include "flagcert/parallel.hpp"
#include "flagcert/psd.hpp"
#include "flagcert/rational.hpp"

namespace flagcert {

/// Flags in this engine carry at most two roots.
inline constexpr std::size_t kMaxRoots = 2;

struct FlagFamily {
  Color root_edge_color = Color::Red;
  std::vector<Flag> flags;
  SymMatrix matrix;

  friend bool operator==(const FlagFamily&, const FlagFamily&) = default;
};

struct Certificate {
  std::string name;
  std::array<int, 2> template_parts{3, 3};
  ColoredGraph target;
  std::optional<std::vector<ColoredGraph>> classes;
  std::map<ClassIndex, Rational> base;  // absent classes have coefficient 0
  std::vector<FlagFamily> families;
  Rational bound;
  /// Require base(l) == t_bip(target, J_l) for every class.
  bool strict_base = true;

  ColoredGraph template_graph() const { return complete_bipartite(template_parts[0], template_parts[1]); }

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Glue two flags along their roots: roots become vertices 0..r-1 in root
/// order, followed by the other vertices of f1, then those of f2. Root
/// markers are dropped.
inline Flag flag_product_rooted(const Flag& f1, const Flag& f2) {
  if (f1.roots.size() != f2.roots.size()) throw std::invalid_argument("flags have different root counts");
  const int r = static_cast<int>(f1.roots.size());
  const int n = f1.graph.n() + f2.graph.n() - r;
  auto layout = [r](const Flag& f, int first_free) {
    std::vector<Vertex> map(f.graph.n(), -1);
    for (int k = 0; k < r; ++k) map[f.roots[k]] = k;
    for (Vertex v = 0; v < f.graph.n(); ++v)
      if (map[v] < 0) map[v] = first_free++;
    return map;
  };
  const auto m1 = layout(f1, r);
  const auto m2 = layout(f2, f1.graph.n());
  ColoredGraph g(n);
  for (const auto& e : f1.graph.edges()) g.set_edge(m1[e.u], m1[e.v], e.color);
  for (const auto& e : f2.graph.edges()) {
    const Vertex a = m2[e.u], b = m2[e.v];
    if (const auto existing = g.color(a, b); existing && *existing != e.color) {
      throw std::invalid_argument("root edge colour conflict between flags");
    }
    g.set_edge(a, b, e.color);
  }
  std::vector<Vertex> roots(r);
  for (int k = 0; k < r; ++k) roots[k] = k;
  return Flag(std::move(g), std::move(roots));
}

/// F_1 . F_2 as an unrooted graph.
inline ColoredGraph flag_product(const Flag& f1, const Flag& f2) { return flag_product_rooted(f1, f2).graph; }

/// l -> t_bip(p, J_l).
inline DensityVector expand_in_classes(const ColoredGraph& p, const ClassTable& table) {
  DensityVector out(table.size());
  for (const auto& c : table.classes()) out[c.index] = t_bip(p, c.representative);
  return out;
}

/// expansions[i][j] = expand_in_classes(F_i . F_j) over all ordered pairs.
using FamilyExpansions = std::vector<std::vector<DensityVector>>;

inline FamilyExpansions expand_family(const FlagFamily& family, const ClassTable& table,
                                      unsigned threads = 1) {
  const std::size_t m = family.flags.size();
  FamilyExpansions out(m, std::vector<DensityVector>(m));
  parallel_for(m * m, threads, [&](std::size_t k) {
    const std::size_t i = k / m, j = k % m;
    out[i][j] = expand_in_classes(flag_product(family.flags[i], family.flags[j]), table);
  });
  return out;
}

/// Dense base vector of a certificate.
inline DensityVector base_vector(const Certificate& cert, int class_count) {
  DensityVector out(class_count);
  for (const auto& [l, v] : cert.base) {
    if (l < 1 || l > class_count) throw std::out_of_range("base refers to unknown class " + std::to_string(l));
    out[l] = v;
  }
  return out;
}

/// l -> base(l) + sum over families and ordered pairs (i,j) of
/// M(i,j) t_bip(F_i . F_j, J_l).
inline DensityVector certificate_coefficients(const Certificate& cert, const ClassTable& table,
                                              const std::vector<FamilyExpansions>& expansions) {
  DensityVector out = base_vector(cert, table.size());
  for (std::size_t f = 0; f < cert.families.size(); ++f) {
    const auto& family = cert.families[f];
    const int m = static_cast<int>(family.flags.size());
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        const Rational& a = family.matrix(i, j);
        if (a.is_zero()) continue;
        const auto& e = expansions[f][i][j];
        for (ClassIndex l : e.support()) out[l] += a * e[l];
      }
    }
  }
  return out;
}

inline DensityVector certificate_coefficients(const Certificate& cert, const ClassTable& table) {
  std::vector<FamilyExpansions> expansions;
  for (const auto& family : cert.families) expansions.push_back(expand_family(family, table));
  return certificate_coefficients(cert, table, expansions);
}

/// Class table a certificate is indexed by: the listed classes when given,
/// the published numbering for K_{3,3}, canonical-code order otherwise.
inline ClassTable certificate_class_table(const Certificate& cert) {
  const auto tmpl = cert.template_graph();
  if (cert.classes) return classify_template(tmpl, std::span<const ColoredGraph>(*cert.classes));
  if (cert.template_parts == std::array<int, 2>{3, 3}) return builtin::k33_class_table();
  return classify_template(tmpl);
}

enum class CheckStatus { Pass, Fail, Skipped };

inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::Skipped:
      return "skipped";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  std::string detail;
};

struct FamilyReport {
  Color root_edge_color = Color::Red;
  int order = 0;
  PsdReport psd;
};

struct VerificationReport {
  std::string name;
  Rational bound;
  long colorings = 0;
  std::vector<ClassRecord> classes;  // representatives, aut counts, multiplicities
  DensityVector base;
  DensityVector coefficients;
  std::vector<FamilyReport> families;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (c.status == CheckStatus::Fail) return false;
    return !checks.empty();
  }
  const CheckResult* find(const std::string& check_name) const {
    for (const auto& c : checks)
      if (c.name == check_name) return &c;
    return nullptr;
  }
};

namespace detail {

inline std::string family_label(std::size_t f, const FlagFamily& family) {
  return "family[" + std::to_string(f) + "](" + color_letter(family.root_edge_color) + ")";
}

inline std::optional<std::string> family_problem(const FlagFamily& family) {
  if (family.flags.empty()) return "no flags";
  if (family.matrix.order() != static_cast<int>(family.flags.size())) {
    return "matrix order " + std::to_string(family.matrix.order()) + " but " + std::to_string(family.flags.size()) +
           " flags";
  }
  const std::size_t r = family.flags.front().roots.size();
  if (r > kMaxRoots) return "flags with more than two roots are not supported";
  for (std::size_t k = 0; k < family.flags.size(); ++k) {
    const auto& f = family.flags[k];
    if (f.roots.size() != r) return "flag " + std::to_string(k + 1) + " has a different root count";
    if (r == 2 && f.root_edge_color() != family.root_edge_color) {
      return "flag " + std::to_string(k + 1) + " root edge does not match the family colour";
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Runs every check and records the outcome; never throws on a failed check.
/// Structural problems (bad class list, malformed families) are reported as
/// failures and the dependent checks are skipped.
inline VerificationReport verify_certificate(const Certificate& cert, unsigned threads = 1) {
  VerificationReport report;
  report.name = cert.name;
  report.bound = cert.bound;
  auto add = [&](std::string name, CheckStatus s, std::string detail) {
    report.checks.push_back({std::move(name), s, std::move(detail)});
  };

  // Classification.
  std::optional<ClassTable> table;
  const auto tmpl = cert.template_graph();
  const bool is_k33 = cert.template_parts == std::array<int, 2>{3, 3};
  try {
    table = certificate_class_table(cert);
    report.colorings = table->total_colorings();
    report.classes = table->classes();
    const long expected = 1L << tmpl.edge_count();
    std::ostringstream detail;
    detail << report.colorings << " colourings, " << table->size() << " classes";
    const bool ok = report.colorings == expected && (!is_k33 || table->size() == 26);
    add("classification", ok ? CheckStatus::Pass : CheckStatus::Fail, detail.str());
  } catch (const std::exception& e) {
    add("classification", CheckStatus::Fail, e.what());
  }

  if (cert.classes) {
    if (table && is_k33) {
      const auto shipped = builtin::k33_class_table();
      std::string mismatch;
      for (const auto& c : table->classes()) {
        if (shipped.index_of(c.representative) != c.index) {
          mismatch += (mismatch.empty() ? "" : ", ") + std::to_string(c.index);
        }
      }
      add("classes_cross_check", mismatch.empty() ? CheckStatus::Pass : CheckStatus::Fail,
          mismatch.empty() ? "listed classes match the regenerated table" : "classes out of order: " + mismatch);
    } else {
      add("classes_cross_check", table ? CheckStatus::Skipped : CheckStatus::Fail,
          table ? "no published numbering for this template" : "classification failed");
    }
  }

  bool families_ok = true;
  {
    std::string problems;
    for (std::size_t f = 0; f < cert.families.size(); ++f) {
      if (auto p = detail::family_problem(cert.families[f])) {
        problems += (problems.empty() ? "" : "; ") + detail::family_label(f, cert.families[f]) + ": " + *p;
      }
    }
    families_ok = problems.empty();
    add("families", families_ok ? CheckStatus::Pass : CheckStatus::Fail,
        families_ok ? std::to_string(cert.families.size()) + " families well formed" : problems);
  }

  if (!table) {
    for (const char* name : {"base_vector", "psd", "coefficients", "golden_expansions"}) {
      add(name, CheckStatus::Skipped, "classification failed");
    }
    return report;
  }

  // Base vector: nonnegative, and equal to the target's t_bip expansion.
  try {
    report.base = base_vector(cert, table->size());
    std::string problems;
    for (ClassIndex l = 1; l <= table->size(); ++l) {
      if (report.base[l].sign() < 0) problems += " negative at J" + std::to_string(l) + ";";
    }
    if (cert.strict_base) {
      const auto expected = expand_in_classes(cert.target, *table);
      for (ClassIndex l = 1; l <= table->size(); ++l) {
        if (report.base[l] != expected[l]) {
          problems += " J" + std::to_string(l) + ": " + report.base[l].to_string() + " != t_bip " +
                      expected[l].to_string() + ";";
        }
      }
    }
    add("base_vector", problems.empty() ? CheckStatus::Pass : CheckStatus::Fail,
        problems.empty() ? (cert.strict_base ? "base equals t_bip(target, .)" : "base nonnegative (relaxed)")
                         : problems);
  } catch (const std::exception& e) {
    add("base_vector", CheckStatus::Fail, e.what());
  }

  // PSD per family.
  for (std::size_t f = 0; f < cert.families.size(); ++f) {
    const auto& family = cert.families[f];
    FamilyReport fr{family.root_edge_color, family.matrix.order(), psd_check(family.matrix)};
    std::string detail = fr.psd.is_psd ? "PSD, kernel dimension " + std::to_string(fr.psd.kernel_basis.size())
                                       : "not PSD: " + fr.psd.reason;
    add("psd:" + detail::family_label(f, family), fr.psd.is_psd ? CheckStatus::Pass : CheckStatus::Fail,
        std::move(detail));
    report.families.push_back(std::move(fr));
  }

  if (!families_ok) {
    add("coefficients", CheckStatus::Skipped, "families malformed");
    add("golden_expansions", CheckStatus::Skipped, "families malformed");
    return report;
  }

  std::vector<FamilyExpansions> expansions;
  try {
    for (const auto& family : cert.families) expansions.push_back(expand_family(family, *table, threads));
    report.coefficients = certificate_coefficients(cert, *table, expansions);
    std::string off;
    for (ClassIndex l = 1; l <= table->size(); ++l) {
      if (report.coefficients[l] != cert.bound) {
        off += (off.empty() ? "J" : ", J") + std::to_string(l) + "=" + report.coefficients[l].to_string();
      }
    }
    add("coefficients", off.empty() ? CheckStatus::Pass : CheckStatus::Fail,
        off.empty() ? "all " + std::to_string(table->size()) + " coefficients equal " + cert.bound.to_string()
                    : "differ from bound: " + off);
  } catch (const std::exception& e) {
    add("coefficients", CheckStatus::Fail, e.what());
    add("golden_expansions", CheckStatus::Skipped, "expansion failed");
    return report;
  }

  // Golden comparison applies to families made of the published flags,
  // indexed by the published class numbering.
  const bool published_order = is_k33 && (!cert.classes || (report.find("classes_cross_check") &&
                                                            report.find("classes_cross_check")->status ==
                                                                CheckStatus::Pass));
  int compared = 0;
  std::string mismatches;
  if (published_order) {
    const auto red = builtin::red_flags();
    const auto blue = builtin::blue_flags();
    for (const auto& g : golden::expansions()) {
      for (std::size_t f = 0; f < cert.families.size(); ++f) {
        const auto& family = cert.families[f];
        if (family.root_edge_color != g.family || family.flags != (g.family == Color::Red ? red : blue)) continue;
        DensityVector want(table->size());
        for (const auto& [l, num] : g.terms) want[l] = Rational(num, golden::kEmbeddings);
        if (expansions[f][g.i - 1][g.j - 1] != want) {
          mismatches += std::string(mismatches.empty() ? "" : ", ") + color_letter(g.family) + std::to_string(g.i) +
                        "." + color_letter(g.family) + std::to_string(g.j);
        }
        ++compared;
      }
    }
  }
  if (compared == 0) {
    add("golden_expansions", CheckStatus::Skipped, "families differ from the published flags");
  } else {
    add("golden_expansions", mismatches.empty() ? CheckStatus::Pass : CheckStatus::Fail,
        mismatches.empty() ? std::to_string(compared) + " published expansions reproduced"
                           : "mismatch: " + mismatches);
  }
  return report;
}

/// The alternating 6-cycle certificate: bound 1/64.
inline Certificate builtin_c6a_certificate() {
  Certificate cert;
  cert.name = "c6a";
  cert.template_parts = {3, 3};
  cert.target = alternating_cycle(6);
  cert.classes = builtin::k33_reference_classes();
  cert.base = {{4, Rational(1, 6)}, {9, Rational(1, 12)}, {11, Rational(1, 12)}, {12, Rational(1, 6)}};
  const auto matrix = builtin::flag_matrix();
  cert.families.push_back({Color::Red, builtin::red_flags(), matrix});
  cert.families.push_back({Color::Blue, builtin::blue_flags(), matrix});
  cert.bound = Rational(1, 64);
  return cert;
}

}  // namespace flagcert

#endif  // FLAGCERT_CERTIFICATE_HPP_
