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

#ifndef FLAGCERT_CLASSIFY_HPP_
#define FLAGCERT_CLASSIFY_HPP_

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagcert/graph.hpp"

namespace flagcert {

/// Class indices are 1-based, matching the published numbering.
using ClassIndex = int;

struct ClassRecord {
  ClassIndex index = 0;
  ColoredGraph representative;
  long aut_count = 0;
  long multiplicity = 0;  // group order / aut_count = orbit size
};

/// Isomorphism classes of colourings of one template under one group.
class ClassTable {
 public:
  ClassTable(ColoredGraph tmpl, std::vector<Permutation> group, std::vector<ClassRecord> classes)
      : template_(std::move(tmpl)), group_(std::move(group)), classes_(std::move(classes)) {
    for (const auto& c : classes_) lookup_.emplace(canonical_form(c.representative, group_), c.index);
  }

  const ColoredGraph& template_graph() const { return template_; }
  const std::vector<Permutation>& group() const { return group_; }
  long group_order() const { return static_cast<long>(group_.size()); }
  int size() const { return static_cast<int>(classes_.size()); }

  const std::vector<ClassRecord>& classes() const { return classes_; }
  const ClassRecord& at(ClassIndex l) const {
    if (l < 1 || l > size()) throw std::out_of_range("class index " + std::to_string(l) + " out of range");
    return classes_[static_cast<std::size_t>(l - 1)];
  }

  long total_colorings() const {
    long total = 0;
    for (const auto& c : classes_) total += c.multiplicity;
    return total;
  }

  /// Class of a colouring of the template; nullopt if it is not one.
  std::optional<ClassIndex> find(const ColoredGraph& g) const {
    if (g.n() != template_.n()) return std::nullopt;
    auto it = lookup_.find(canonical_form(g, group_));
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }
  ClassIndex index_of(const ColoredGraph& g) const {
    if (auto l = find(g)) return *l;
    throw std::invalid_argument("graph is not a colouring of the template: " + g.to_string());
  }

  /// Class index of the colour-swapped representative, for l = 1..size().
  std::vector<ClassIndex> swap_involution() const {
    std::vector<ClassIndex> out;
    for (const auto& c : classes_) out.push_back(index_of(c.representative.swapped_colors()));
    return out;
  }

 private:
  ColoredGraph template_;
  std::vector<Permutation> group_;
  std::vector<ClassRecord> classes_;
  std::map<CanonicalCode, ClassIndex> lookup_;
};

/// Partition `colorings` into orbits of `group`.
///
/// Without `reference`, classes are numbered by increasing canonical code.
/// With `reference`, class l is the one containing reference[l-1]; the
/// reference must hit every class exactly once.
inline ClassTable classify(const ColoredGraph& tmpl, std::span<const ColoredGraph> colorings,
                           std::span<const Permutation> group,
                           std::optional<std::span<const ColoredGraph>> reference = std::nullopt) {
  const long order = static_cast<long>(group.size());
  std::map<CanonicalCode, std::pair<ColoredGraph, long>> orbits;  // code -> (first member, size)
  for (const auto& g : colorings) {
    auto code = canonical_form(g, group);
    auto [it, inserted] = orbits.try_emplace(std::move(code), g, 0);
    ++it->second.second;
  }

  std::vector<ClassRecord> classes;
  if (reference) {
    if (reference->size() != orbits.size()) {
      throw std::invalid_argument("reference lists " + std::to_string(reference->size()) + " classes, found " +
                                  std::to_string(orbits.size()));
    }
    std::map<CanonicalCode, ClassIndex> seen;
    ClassIndex l = 1;
    for (const auto& rep : *reference) {
      auto code = canonical_form(rep, group);
      auto it = orbits.find(code);
      if (it == orbits.end()) {
        throw std::invalid_argument("reference class " + std::to_string(l) + " is not among the colourings");
      }
      if (!seen.emplace(code, l).second) {
        throw std::invalid_argument("reference classes " + std::to_string(seen[code]) + " and " +
                                    std::to_string(l) + " are isomorphic");
      }
      classes.push_back({l, rep, 0, it->second.second});
      ++l;
    }
  } else {
    ClassIndex l = 1;
    for (const auto& [code, entry] : orbits) classes.push_back({l++, entry.first, 0, entry.second});
  }

  for (auto& c : classes) {
    c.aut_count = automorphism_count(c.representative, group);
    if (c.aut_count == 0 || order % c.aut_count != 0 || c.multiplicity * c.aut_count != order) {
      throw std::logic_error("orbit-stabiliser mismatch for class " + std::to_string(c.index) + ": orbit " +
                             std::to_string(c.multiplicity) + ", aut " + std::to_string(c.aut_count) +
                             ", group " + std::to_string(order));
    }
  }
  return ClassTable(tmpl, std::vector<Permutation>(group.begin(), group.end()), std::move(classes));
}

/// Classify every colouring of `tmpl` under the automorphisms of its
/// underlying graph.
inline ClassTable classify_template(const ColoredGraph& tmpl,
                                    std::optional<std::span<const ColoredGraph>> reference = std::nullopt) {
  const auto group = underlying_automorphisms(tmpl);
  const auto colorings = enumerate_template_colorings(tmpl);
  return classify(tmpl, colorings, group, reference);
}

}  // namespace flagcert

#endif  // FLAGCERT_CLASSIFY_HPP_
