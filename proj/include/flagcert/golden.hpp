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

// Published expansion and coefficient tables, kept as fixtures so the
// engine's output can be compared against them entry by entry.

#ifndef FLAGCERT_GOLDEN_HPP_
#define FLAGCERT_GOLDEN_HPP_

#include <utility>
#include <vector>

#include "flagcert/graph.hpp"

namespace flagcert::golden {

/// Weights are numerators over 72, the number of injective embeddings of
/// the product's shape into K_{3,3}.
inline constexpr int kEmbeddings = 72;

struct Expansion {
  Color family;  // root-edge colour: Red for R_i, Blue for B_i
  int i;         // 1-based flag indices, i <= j
  int j;
  std::vector<std::pair<int, int>> terms;  // (class index, numerator over 72)
};

/// t_inj(F_i . F_j) as a combination of class densities, for i <= j in both
/// families (36 + 36 products).
inline const std::vector<Expansion>& expansions() {
  static const std::vector<Expansion> table{
    {Color::Red, 1, 1, {{1, 72}, {2, 16}, {3, 4}}},
    {Color::Red, 1, 2, {{2, 8}, {5, 8}, {8, 2}}},
    {Color::Red, 1, 3, {{2, 8}, {3, 4}, {5, 4}, {6, 2}}},
    {Color::Red, 1, 4, {{5, 4}, {8, 2}, {15, 12}, {16, 2}}},
    {Color::Red, 1, 5, {{2, 8}, {3, 4}, {5, 4}, {6, 2}}},
    {Color::Red, 1, 6, {{5, 4}, {8, 2}, {15, 12}, {16, 2}}},
    {Color::Red, 1, 7, {{3, 4}, {6, 4}, {7, 8}}},
    {Color::Red, 1, 8, {{8, 2}, {16, 4}, {18, 8}}},
    {Color::Red, 2, 2, {{3, 4}, {8, 4}, {13, 8}}},
    {Color::Red, 2, 3, {{3, 4}, {6, 2}, {8, 2}, {10, 2}}},
    {Color::Red, 2, 4, {{6, 2}, {10, 2}, {16, 2}, {19, 2}}},
    {Color::Red, 2, 5, {{3, 4}, {6, 2}, {8, 2}, {10, 2}}},
    {Color::Red, 2, 6, {{6, 2}, {10, 2}, {16, 2}, {19, 2}}},
    {Color::Red, 2, 7, {{4, 12}, {9, 4}, {11, 2}}},
    {Color::Red, 2, 8, {{9, 2}, {17, 4}, {21, 2}}},
    {Color::Red, 3, 3, {{5, 4}, {8, 4}, {10, 2}}},
    {Color::Red, 3, 4, {{8, 2}, {13, 8}, {16, 2}, {19, 2}}},
    {Color::Red, 3, 5, {{3, 4}, {4, 12}, {8, 2}, {9, 2}}},
    {Color::Red, 3, 6, {{6, 2}, {9, 2}, {16, 2}, {17, 2}}},
    {Color::Red, 3, 7, {{6, 2}, {9, 2}, {10, 2}, {11, 2}}},
    {Color::Red, 3, 8, {{10, 2}, {17, 2}, {19, 2}, {21, 2}}},
    {Color::Red, 4, 4, {{10, 2}, {19, 4}, {23, 12}}},
    {Color::Red, 4, 5, {{6, 2}, {9, 2}, {16, 2}, {17, 2}}},
    {Color::Red, 4, 6, {{7, 8}, {11, 2}, {18, 8}, {21, 2}}},
    {Color::Red, 4, 7, {{9, 2}, {14, 8}, {17, 2}, {20, 2}}},
    {Color::Red, 4, 8, {{11, 2}, {20, 2}, {21, 2}, {24, 4}}},
    {Color::Red, 5, 5, {{5, 4}, {8, 4}, {10, 2}}},
    {Color::Red, 5, 6, {{8, 2}, {13, 8}, {16, 2}, {19, 2}}},
    {Color::Red, 5, 7, {{6, 2}, {9, 2}, {10, 2}, {11, 2}}},
    {Color::Red, 5, 8, {{10, 2}, {17, 2}, {19, 2}, {21, 2}}},
    {Color::Red, 6, 6, {{10, 2}, {19, 4}, {23, 12}}},
    {Color::Red, 6, 7, {{9, 2}, {14, 8}, {17, 2}, {20, 2}}},
    {Color::Red, 6, 8, {{11, 2}, {20, 2}, {21, 2}, {24, 4}}},
    {Color::Red, 7, 7, {{7, 8}, {11, 4}, {12, 12}}},
    {Color::Red, 7, 8, {{11, 2}, {20, 4}, {22, 4}}},
    {Color::Red, 8, 8, {{12, 12}, {22, 8}, {25, 8}}},
    {Color::Blue, 1, 1, {{22, 4}, {25, 16}, {26, 72}}},
    {Color::Blue, 1, 2, {{21, 2}, {24, 8}, {25, 8}}},
    {Color::Blue, 1, 3, {{20, 2}, {22, 4}, {24, 4}, {25, 8}}},
    {Color::Blue, 1, 4, {{19, 2}, {21, 2}, {23, 12}, {24, 4}}},
    {Color::Blue, 1, 5, {{20, 2}, {22, 4}, {24, 4}, {25, 8}}},
    {Color::Blue, 1, 6, {{19, 2}, {21, 2}, {23, 12}, {24, 4}}},
    {Color::Blue, 1, 7, {{14, 8}, {20, 4}, {22, 4}}},
    {Color::Blue, 1, 8, {{13, 8}, {19, 4}, {21, 2}}},
    {Color::Blue, 2, 2, {{18, 8}, {21, 4}, {22, 4}}},
    {Color::Blue, 2, 3, {{17, 2}, {20, 2}, {21, 2}, {22, 4}}},
    {Color::Blue, 2, 4, {{16, 2}, {17, 2}, {19, 2}, {20, 2}}},
    {Color::Blue, 2, 5, {{17, 2}, {20, 2}, {21, 2}, {22, 4}}},
    {Color::Blue, 2, 6, {{16, 2}, {17, 2}, {19, 2}, {20, 2}}},
    {Color::Blue, 2, 7, {{9, 2}, {11, 4}, {12, 12}}},
    {Color::Blue, 2, 8, {{8, 2}, {10, 4}, {11, 2}}},
    {Color::Blue, 3, 3, {{17, 2}, {21, 4}, {24, 4}}},
    {Color::Blue, 3, 4, {{16, 2}, {18, 8}, {19, 2}, {21, 2}}},
    {Color::Blue, 3, 5, {{11, 2}, {12, 12}, {21, 2}, {22, 4}}},
    {Color::Blue, 3, 6, {{10, 2}, {11, 2}, {19, 2}, {20, 2}}},
    {Color::Blue, 3, 7, {{9, 2}, {11, 2}, {17, 2}, {20, 2}}},
    {Color::Blue, 3, 8, {{8, 2}, {10, 2}, {16, 2}, {17, 2}}},
    {Color::Blue, 4, 4, {{15, 12}, {16, 4}, {17, 2}}},
    {Color::Blue, 4, 5, {{10, 2}, {11, 2}, {19, 2}, {20, 2}}},
    {Color::Blue, 4, 6, {{8, 2}, {9, 2}, {13, 8}, {14, 8}}},
    {Color::Blue, 4, 7, {{6, 2}, {7, 8}, {10, 2}, {11, 2}}},
    {Color::Blue, 4, 8, {{5, 4}, {6, 2}, {8, 2}, {9, 2}}},
    {Color::Blue, 5, 5, {{17, 2}, {21, 4}, {24, 4}}},
    {Color::Blue, 5, 6, {{16, 2}, {18, 8}, {19, 2}, {21, 2}}},
    {Color::Blue, 5, 7, {{9, 2}, {11, 2}, {17, 2}, {20, 2}}},
    {Color::Blue, 5, 8, {{8, 2}, {10, 2}, {16, 2}, {17, 2}}},
    {Color::Blue, 6, 6, {{15, 12}, {16, 4}, {17, 2}}},
    {Color::Blue, 6, 7, {{6, 2}, {7, 8}, {10, 2}, {11, 2}}},
    {Color::Blue, 6, 8, {{5, 4}, {6, 2}, {8, 2}, {9, 2}}},
    {Color::Blue, 7, 7, {{4, 12}, {9, 4}, {14, 8}}},
    {Color::Blue, 7, 8, {{3, 4}, {6, 4}, {9, 2}}},
    {Color::Blue, 8, 8, {{2, 8}, {3, 8}, {4, 12}}},
  };
  return table;
}

struct MatrixTerm {
  int i;       // 1-based matrix row
  int j;       // 1-based matrix column
  int weight;  // numerator over 72, summed over both families
};

struct CoefficientListing {
  int cls;
  std::pair<int, int> base;  // linear term as (numerator, denominator)
  std::vector<MatrixTerm> terms;
};

/// The coefficient of each class density written as base + sum of
/// weight/72 * A(i,j), with repeated (i,j) terms merged.
inline const std::vector<CoefficientListing>& coefficient_listings() {
  static const std::vector<CoefficientListing> table{
    {1, {0, 1}, {{1, 1, 72}}},
    {2, {0, 1}, {{1, 1, 16}, {1, 2, 8}, {1, 3, 8}, {1, 5, 8}, {2, 1, 8}, {3, 1, 8}, {5, 1, 8}, {8, 8, 8}}},
    {3, {0, 1}, {{1, 1, 4}, {1, 3, 4}, {1, 5, 4}, {1, 7, 4}, {2, 2, 4}, {2, 3, 4}, {2, 5, 4}, {3, 1, 4}, {3, 2, 4}, {3, 5, 4}, {5, 1, 4}, {5, 2, 4}, {5, 3, 4}, {7, 1, 4}, {7, 8, 4}, {8, 7, 4}, {8, 8, 8}}},
    {4, {1, 6}, {{2, 7, 12}, {3, 5, 12}, {5, 3, 12}, {7, 2, 12}, {7, 7, 12}, {8, 8, 12}}},
    {5, {0, 1}, {{1, 2, 8}, {1, 3, 4}, {1, 4, 4}, {1, 5, 4}, {1, 6, 4}, {2, 1, 8}, {3, 1, 4}, {3, 3, 4}, {4, 1, 4}, {4, 8, 4}, {5, 1, 4}, {5, 5, 4}, {6, 1, 4}, {6, 8, 4}, {8, 4, 4}, {8, 6, 4}}},
    {6, {0, 1}, {{1, 3, 2}, {1, 5, 2}, {1, 7, 4}, {2, 3, 2}, {2, 4, 2}, {2, 5, 2}, {2, 6, 2}, {3, 1, 2}, {3, 2, 2}, {3, 6, 2}, {3, 7, 2}, {4, 2, 2}, {4, 5, 2}, {4, 7, 2}, {4, 8, 2}, {5, 1, 2}, {5, 2, 2}, {5, 4, 2}, {5, 7, 2}, {6, 2, 2}, {6, 3, 2}, {6, 7, 2}, {6, 8, 2}, {7, 1, 4}, {7, 3, 2}, {7, 4, 2}, {7, 5, 2}, {7, 6, 2}, {7, 8, 4}, {8, 4, 2}, {8, 6, 2}, {8, 7, 4}}},
    {7, {0, 1}, {{1, 7, 8}, {4, 6, 8}, {4, 7, 8}, {6, 4, 8}, {6, 7, 8}, {7, 1, 8}, {7, 4, 8}, {7, 6, 8}, {7, 7, 8}}},
    {8, {0, 1}, {{1, 2, 2}, {1, 4, 2}, {1, 6, 2}, {1, 8, 2}, {2, 1, 2}, {2, 2, 4}, {2, 3, 2}, {2, 5, 2}, {2, 8, 2}, {3, 2, 2}, {3, 3, 4}, {3, 4, 2}, {3, 5, 2}, {3, 8, 2}, {4, 1, 2}, {4, 3, 2}, {4, 6, 2}, {4, 8, 2}, {5, 2, 2}, {5, 3, 2}, {5, 5, 4}, {5, 6, 2}, {5, 8, 2}, {6, 1, 2}, {6, 4, 2}, {6, 5, 2}, {6, 8, 2}, {8, 1, 2}, {8, 2, 2}, {8, 3, 2}, {8, 4, 2}, {8, 5, 2}, {8, 6, 2}}},
    {9, {1, 12}, {{2, 7, 6}, {2, 8, 2}, {3, 5, 2}, {3, 6, 2}, {3, 7, 4}, {4, 5, 2}, {4, 6, 2}, {4, 7, 2}, {4, 8, 2}, {5, 3, 2}, {5, 4, 2}, {5, 7, 4}, {6, 3, 2}, {6, 4, 2}, {6, 7, 2}, {6, 8, 2}, {7, 2, 6}, {7, 3, 4}, {7, 4, 2}, {7, 5, 4}, {7, 6, 2}, {7, 7, 4}, {7, 8, 2}, {8, 2, 2}, {8, 4, 2}, {8, 6, 2}, {8, 7, 2}}},
    {10, {0, 1}, {{2, 3, 2}, {2, 4, 2}, {2, 5, 2}, {2, 6, 2}, {2, 8, 4}, {3, 2, 2}, {3, 3, 2}, {3, 6, 2}, {3, 7, 2}, {3, 8, 4}, {4, 2, 2}, {4, 4, 2}, {4, 5, 2}, {4, 7, 2}, {5, 2, 2}, {5, 4, 2}, {5, 5, 2}, {5, 7, 2}, {5, 8, 4}, {6, 2, 2}, {6, 3, 2}, {6, 6, 2}, {6, 7, 2}, {7, 3, 2}, {7, 4, 2}, {7, 5, 2}, {7, 6, 2}, {8, 2, 4}, {8, 3, 4}, {8, 5, 4}}},
    {11, {1, 12}, {{2, 7, 6}, {2, 8, 2}, {3, 5, 2}, {3, 6, 2}, {3, 7, 4}, {4, 5, 2}, {4, 6, 2}, {4, 7, 2}, {4, 8, 2}, {5, 3, 2}, {5, 4, 2}, {5, 7, 4}, {6, 3, 2}, {6, 4, 2}, {6, 7, 2}, {6, 8, 2}, {7, 2, 6}, {7, 3, 4}, {7, 4, 2}, {7, 5, 4}, {7, 6, 2}, {7, 7, 4}, {7, 8, 2}, {8, 2, 2}, {8, 4, 2}, {8, 6, 2}, {8, 7, 2}}},
    {12, {1, 6}, {{2, 7, 12}, {3, 5, 12}, {5, 3, 12}, {7, 2, 12}, {7, 7, 12}, {8, 8, 12}}},
    {13, {0, 1}, {{1, 8, 8}, {2, 2, 8}, {3, 4, 8}, {4, 3, 8}, {4, 6, 8}, {5, 6, 8}, {6, 4, 8}, {6, 5, 8}, {8, 1, 8}}},
    {14, {0, 1}, {{1, 7, 8}, {4, 6, 8}, {4, 7, 8}, {6, 4, 8}, {6, 7, 8}, {7, 1, 8}, {7, 4, 8}, {7, 6, 8}, {7, 7, 8}}},
    {15, {0, 1}, {{1, 4, 12}, {1, 6, 12}, {4, 1, 12}, {4, 4, 12}, {6, 1, 12}, {6, 6, 12}}},
    {16, {0, 1}, {{1, 4, 2}, {1, 6, 2}, {1, 8, 4}, {2, 4, 4}, {2, 6, 4}, {3, 4, 4}, {3, 6, 2}, {3, 8, 2}, {4, 1, 2}, {4, 2, 4}, {4, 3, 4}, {4, 4, 4}, {4, 5, 2}, {5, 4, 2}, {5, 6, 4}, {5, 8, 2}, {6, 1, 2}, {6, 2, 4}, {6, 3, 2}, {6, 5, 4}, {6, 6, 4}, {8, 1, 4}, {8, 3, 2}, {8, 5, 2}}},
    {17, {0, 1}, {{2, 3, 2}, {2, 4, 2}, {2, 5, 2}, {2, 6, 2}, {2, 8, 4}, {3, 2, 2}, {3, 3, 2}, {3, 6, 2}, {3, 7, 2}, {3, 8, 4}, {4, 2, 2}, {4, 4, 2}, {4, 5, 2}, {4, 7, 2}, {5, 2, 2}, {5, 4, 2}, {5, 5, 2}, {5, 7, 2}, {5, 8, 4}, {6, 2, 2}, {6, 3, 2}, {6, 6, 2}, {6, 7, 2}, {7, 3, 2}, {7, 4, 2}, {7, 5, 2}, {7, 6, 2}, {8, 2, 4}, {8, 3, 4}, {8, 5, 4}}},
    {18, {0, 1}, {{1, 8, 8}, {2, 2, 8}, {3, 4, 8}, {4, 3, 8}, {4, 6, 8}, {5, 6, 8}, {6, 4, 8}, {6, 5, 8}, {8, 1, 8}}},
    {19, {0, 1}, {{1, 4, 2}, {1, 6, 2}, {1, 8, 4}, {2, 4, 4}, {2, 6, 4}, {3, 4, 4}, {3, 6, 2}, {3, 8, 2}, {4, 1, 2}, {4, 2, 4}, {4, 3, 4}, {4, 4, 4}, {4, 5, 2}, {5, 4, 2}, {5, 6, 4}, {5, 8, 2}, {6, 1, 2}, {6, 2, 4}, {6, 3, 2}, {6, 5, 4}, {6, 6, 4}, {8, 1, 4}, {8, 3, 2}, {8, 5, 2}}},
    {20, {0, 1}, {{1, 3, 2}, {1, 5, 2}, {1, 7, 4}, {2, 3, 2}, {2, 4, 2}, {2, 5, 2}, {2, 6, 2}, {3, 1, 2}, {3, 2, 2}, {3, 6, 2}, {3, 7, 2}, {4, 2, 2}, {4, 5, 2}, {4, 7, 2}, {4, 8, 2}, {5, 1, 2}, {5, 2, 2}, {5, 4, 2}, {5, 7, 2}, {6, 2, 2}, {6, 3, 2}, {6, 7, 2}, {6, 8, 2}, {7, 1, 4}, {7, 3, 2}, {7, 4, 2}, {7, 5, 2}, {7, 6, 2}, {7, 8, 4}, {8, 4, 2}, {8, 6, 2}, {8, 7, 4}}},
    {21, {0, 1}, {{1, 2, 2}, {1, 4, 2}, {1, 6, 2}, {1, 8, 2}, {2, 1, 2}, {2, 2, 4}, {2, 3, 2}, {2, 5, 2}, {2, 8, 2}, {3, 2, 2}, {3, 3, 4}, {3, 4, 2}, {3, 5, 2}, {3, 8, 2}, {4, 1, 2}, {4, 3, 2}, {4, 6, 2}, {4, 8, 2}, {5, 2, 2}, {5, 3, 2}, {5, 5, 4}, {5, 6, 2}, {5, 8, 2}, {6, 1, 2}, {6, 4, 2}, {6, 5, 2}, {6, 8, 2}, {8, 1, 2}, {8, 2, 2}, {8, 3, 2}, {8, 4, 2}, {8, 5, 2}, {8, 6, 2}}},
    {22, {0, 1}, {{1, 1, 4}, {1, 3, 4}, {1, 5, 4}, {1, 7, 4}, {2, 2, 4}, {2, 3, 4}, {2, 5, 4}, {3, 1, 4}, {3, 2, 4}, {3, 5, 4}, {5, 1, 4}, {5, 2, 4}, {5, 3, 4}, {7, 1, 4}, {7, 8, 4}, {8, 7, 4}, {8, 8, 8}}},
    {23, {0, 1}, {{1, 4, 12}, {1, 6, 12}, {4, 1, 12}, {4, 4, 12}, {6, 1, 12}, {6, 6, 12}}},
    {24, {0, 1}, {{1, 2, 8}, {1, 3, 4}, {1, 4, 4}, {1, 5, 4}, {1, 6, 4}, {2, 1, 8}, {3, 1, 4}, {3, 3, 4}, {4, 1, 4}, {4, 8, 4}, {5, 1, 4}, {5, 5, 4}, {6, 1, 4}, {6, 8, 4}, {8, 4, 4}, {8, 6, 4}}},
    {25, {0, 1}, {{1, 1, 16}, {1, 2, 8}, {1, 3, 8}, {1, 5, 8}, {2, 1, 8}, {3, 1, 8}, {5, 1, 8}, {8, 8, 8}}},
    {26, {0, 1}, {{1, 1, 72}}},
  };
  return table;
}

}  // namespace flagcert::golden

#endif  // FLAGCERT_GOLDEN_HPP_
