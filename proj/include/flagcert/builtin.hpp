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

// Shipped data for the alternating 6-cycle certificate: the 26 colour
// classes of K_{3,3} in their published order, the two flag families and
// the 8x8 quadratic-form matrix.
//
// K_{3,3} layout: vertices 0,1,2 are the left column B1,B2,B3 (bottom to
// top) and 3,4,5 the right column A1,A2,A3. A class is written as nine
// letters over the edges in sorted order
//   B1A1 B1A2 B1A3 B2A1 B2A2 B2A3 B3A1 B3A2 B3A3.
//
// Flag layout: 0 = B1 (root 1), 1 = A1 (root 2), 2 = B2, 3 = A2; a flag is
// four letters over the edges B1A1 (the root edge), B1A2, A1B2, B2A2.

#ifndef FLAGCERT_BUILTIN_HPP_
#define FLAGCERT_BUILTIN_HPP_

#include <array>
#include <string_view>
#include <vector>

#include "flagcert/classify.hpp"
#include "flagcert/graph.hpp"
#include "flagcert/psd.hpp"

namespace flagcert::builtin {

inline constexpr std::array<std::string_view, 26> kK33Classes{
    "RRRRRRRRR",  // J1
    "BRRRRRRRR",  // J2
    "BRRRBRRRR",  // J3
    "BRRRBRRRB",  // J4
    "BRRBRRRRR",  // J5
    "BRRBRRRBR",  // J6
    "BRRBRRRBB",  // J7
    "BBRBRRRRR",  // J8
    "BBRBRRRRB",  // J9
    "BBRBRRRBR",  // J10
    "BBRBRBRBR",  // J11
    "BBRBRBRBB",  // J12
    "BBRBBRRRR",  // J13
    "BBRBBRRRB",  // J14
    "BRRBRRBRR",  // J15
    "BBRBRRBRR",  // J16
    "BBRBRBBRR",  // J17
    "BBBBRRBRR",  // J18
    "BBRBBRBRR",  // J19
    "BBRBBRBRB",  // J20
    "BBBBBRBRR",  // J21
    "BBBBBRBRB",  // J22
    "BBRBBRBBR",  // J23
    "BBBBBRBBR",  // J24
    "BBBBBBBBR",  // J25
    "BBBBBBBBB",  // J26
};

inline constexpr std::array<std::string_view, 8> kRedFlags{"RRRR", "RRRB", "RBRR", "RBRB",
                                                          "RRBR", "RRBB", "RBBR", "RBBB"};
inline constexpr std::array<std::string_view, 8> kBlueFlags{"BBBB", "BBBR", "BRBB", "BRBR",
                                                           "BBRB", "BBRR", "BRRB", "BRRR"};

inline constexpr int kMatrixDenominator = 128;
inline constexpr std::array<std::array<int, 8>, 8> kMatrixNumerators{{
    {2, -6, -2, -3, 1, -3, 5, 6},
    {-6, 58, -3, 12, -6, 12, -47, -20},
    {-2, -3, 56, -14, -47, 11, 4, -5},
    {-3, 12, -14, 12, 10, 2, -10, -9},
    {1, -6, -47, 10, 56, -14, 2, -2},
    {-3, 12, 11, 2, -14, 12, -10, -10},
    {5, -47, 4, -10, 2, -10, 44, 12},
    {6, -20, -5, -9, -2, -10, 12, 28},
}};

inline ColoredGraph k33_template() { return complete_bipartite(3, 3); }

inline ColoredGraph k33_coloring(std::string_view letters) {
  const auto pairs = k33_template().edges();
  if (letters.size() != pairs.size()) throw std::invalid_argument("K_{3,3} colouring needs nine letters");
  ColoredGraph g(6);
  for (std::size_t i = 0; i < pairs.size(); ++i) g.set_edge(pairs[i].u, pairs[i].v, color_from_letter(letters[i]));
  return g;
}

inline std::vector<ColoredGraph> k33_reference_classes() {
  std::vector<ColoredGraph> out;
  for (auto s : kK33Classes) out.push_back(k33_coloring(s));
  return out;
}

/// The 26-class table numbered as published.
inline ClassTable k33_class_table() {
  const auto reference = k33_reference_classes();
  return classify_template(k33_template(), std::span<const ColoredGraph>(reference));
}

inline Flag two_root_flag(std::string_view letters) {
  if (letters.size() != 4) throw std::invalid_argument("flag needs four letters");
  ColoredGraph g(4);
  g.set_edge(0, 1, color_from_letter(letters[0]));
  g.set_edge(0, 3, color_from_letter(letters[1]));
  g.set_edge(1, 2, color_from_letter(letters[2]));
  g.set_edge(2, 3, color_from_letter(letters[3]));
  return Flag(std::move(g), {0, 1});
}

inline std::vector<Flag> red_flags() {
  std::vector<Flag> out;
  for (auto s : kRedFlags) out.push_back(two_root_flag(s));
  return out;
}

inline std::vector<Flag> blue_flags() {
  std::vector<Flag> out;
  for (auto s : kBlueFlags) out.push_back(two_root_flag(s));
  return out;
}

inline SymMatrix flag_matrix() {
  std::vector<RationalVector> rows;
  for (const auto& r : kMatrixNumerators) {
    RationalVector row;
    for (int v : r) row.emplace_back(Rational(v, kMatrixDenominator));
    rows.push_back(std::move(row));
  }
  return SymMatrix(rows);
}

}  // namespace flagcert::builtin

#endif  // FLAGCERT_BUILTIN_HPP_
