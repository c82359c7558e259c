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

#include "flagcert/counting.hpp"

#include <gtest/gtest.h>

#include <array>
#include <stop_token>

#include "flagcert/builtin.hpp"
#include "naive.hpp"

namespace flagcert {
namespace {

TEST(CountingTest, HomCountsMatchNaiveEnumeration) {
  naive::Lcg rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const auto h = naive::random_graph(2 + trial % 4, rng);
    const auto g = naive::random_graph(3 + trial % 5, rng);
    EXPECT_EQ(hom_count(h, g), naive::hom(h, g)) << h.to_string() << " -> " << g.to_string();
    EXPECT_EQ(hom_inj_count(h, g), naive::hom_inj(h, g)) << h.to_string() << " -> " << g.to_string();
  }
}

TEST(CountingTest, SixCyclesInK33) {
  // 6 Hamiltonian cycles in K_{3,3}, each traversed from 6 starts in 2 directions.
  EXPECT_EQ(hom_inj_count(alternating_cycle(6).underlying(), complete_bipartite(3, 3)), 72u);
  EXPECT_EQ(hom_inj_count(alternating_cycle(6), complete_bipartite(3, 3)), 0u);
}

TEST(CountingTest, RootedFlagInRedK4) {
  const auto r1 = builtin::red_flags()[0];
  const auto k4 = monochromatic_clique(4, Color::Red);
  EXPECT_EQ(rooted_hom_inj_count(r1, k4, 0, 1), 2u);
  EXPECT_EQ(rooted_hom_inj_count(r1, monochromatic_clique(4, Color::Blue), 0, 1), 0u);
  EXPECT_THROW(rooted_hom_inj_count(r1, k4, 1, 1), std::invalid_argument);
  EXPECT_THROW(rooted_hom_inj_count(r1, k4, 0, 4), std::out_of_range);
}

TEST(CountingTest, RootedCountsMatchNaive) {
  naive::Lcg rng(23);
  const auto flags = builtin::red_flags();
  for (int trial = 0; trial < 6; ++trial) {
    const auto g = naive::random_clique(6 + trial % 2, rng);
    for (const auto& f : flags) {
      for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v = 0; v < g.n(); ++v) {
          if (u == v) continue;
          EXPECT_EQ(rooted_hom_inj_count(f, g, u, v), naive::rooted_hom_inj(f.graph, g, {0, 1}, {u, v}));
        }
    }
  }
}

TEST(CountingTest, DensitiesAreNormalised) {
  const auto k7 = monochromatic_clique(7, Color::Red);
  EXPECT_EQ(t_inj(alternating_cycle(6), k7), Rational(0));
  EXPECT_EQ(t_inj(alternating_cycle(6).underlying(), k7), Rational(1));
  // Closed 6-walks in K_7: 6^6 + 6.
  EXPECT_EQ(t_hom(alternating_cycle(6).underlying(), k7), Rational(46662, 117649));
  EXPECT_EQ(t_inj(monochromatic_clique(6, Color::Red), monochromatic_clique(5, Color::Red)), Rational(0));
  EXPECT_EQ(t_inj(ColoredGraph(0), k7), Rational(1));
}

TEST(CountingTest, TBipValuesForTheAlternatingSixCycle) {
  const auto table = builtin::k33_class_table();
  const auto c6 = alternating_cycle(6);
  for (const auto& c : table.classes()) {
    Rational expected = 0;
    if (c.index == 4 || c.index == 12) expected = Rational(12, 72);
    if (c.index == 9 || c.index == 11) expected = Rational(6, 72);
    EXPECT_EQ(t_bip(c6, c.representative), expected) << "J" << c.index;
  }
  EXPECT_THROW(t_bip(monochromatic_clique(3, Color::Red), table.at(1).representative), std::invalid_argument);
}

// t_bip against an independent count: colour-respecting bijections of the
// six vertices over shape-respecting ones.
TEST(CountingTest, TBipMatchesNaiveRatio) {
  const auto table = builtin::k33_class_table();
  for (const auto& c : table.classes()) {
    const auto c6 = alternating_cycle(6);
    const auto num = naive::hom_inj(c6, c.representative);
    const auto den = naive::hom_inj(c6.underlying(), c.representative.underlying());
    EXPECT_EQ(t_bip(c6, c.representative), Rational(BigInt(num), BigInt(den)));
  }
}

TEST(CountingTest, ClassDensitiesSumToOneOnCliques) {
  const auto table = builtin::k33_class_table();
  naive::Lcg rng(29);
  for (int n = 6; n <= 9; ++n) {
    const auto g = naive::random_clique(n, rng);
    EXPECT_EQ(density_vector(g, table).sum(), Rational(1)) << n;
  }
  EXPECT_EQ(density_vector(monochromatic_clique(5, Color::Red), table).sum(), Rational(0));
  EXPECT_THROW(density_vector(complete_bipartite(3, 3), table), std::invalid_argument);
  const auto red = density_vector(monochromatic_clique(7, Color::Red), table);
  EXPECT_EQ(red[1], Rational(1));
  EXPECT_EQ(red.support(), std::vector<ClassIndex>{1});
}

TEST(CountingTest, FastSixCycleCounterMatchesSearch) {
  naive::Lcg rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    std::array<Color, 6> pattern;
    for (auto& c : pattern) c = rng.color();
    const int n = 6 + trial % 5;
    const auto g = trial % 3 == 0 ? naive::random_graph(n, rng) : naive::random_clique(n, rng);
    EXPECT_EQ(hom_inj_six_cycle(pattern, g), hom_inj_count(colored_cycle(pattern), g)) << g.to_string();
  }
  EXPECT_EQ(hom_inj_six_cycle(kAlternatingSixCycle, monochromatic_clique(5, Color::Red)), 0u);
  EXPECT_EQ(colored_cycle(kAlternatingSixCycle), alternating_cycle(6));
}

TEST(CountingTest, FastSixCycleCounterAcrossWordBoundary) {
  naive::Lcg rng(37);
  const auto g = naive::random_clique(70, rng);
  // Every injective map is counted once: alternating + all other patterns cover all 6-cycles.
  Count total = 0;
  for (int mask = 0; mask < 64; ++mask) {
    std::array<Color, 6> pattern;
    for (int i = 0; i < 6; ++i) pattern[i] = (mask >> i) & 1 ? Color::Blue : Color::Red;
    total += hom_inj_six_cycle(pattern, g);
  }
  EXPECT_EQ(BigInt(total), falling_factorial(70, 6));
}

TEST(CountingTest, CancellationAborts) {
  std::stop_source source;
  source.request_stop();
  naive::Lcg rng(41);
  const auto g = naive::random_clique(12, rng);
  EXPECT_THROW(hom_inj_six_cycle(kAlternatingSixCycle, g, source.get_token()), Aborted);
  EXPECT_THROW(hom_inj_count(monochromatic_clique(6, Color::Red).underlying(), monochromatic_clique(12, Color::Red),
                             source.get_token()),
               Aborted);
}

// Homomorphism density is blow-up invariant; injective density of the
// blow-up approaches it, and the gap shrinks with every extra copy.
TEST(CountingTest, BlowUpConvergence) {
  auto g = monochromatic_clique(4, Color::Red);
  g.set_edge(0, 1, Color::Blue);
  g.set_edge(2, 3, Color::Blue);
  const auto c4 = colored_cycle(std::array<Color, 4>{Color::Red, Color::Blue, Color::Red, Color::Blue});
  const Rational limit = t_hom(c4, g);
  ASSERT_GT(limit, Rational(0));
  Rational previous_gap = -1;
  for (int copies = 1; copies <= 5; ++copies) {
    const auto b = blow_up(g, copies);
    EXPECT_EQ(t_hom(c4, b), limit);
    Rational gap = limit - t_inj(c4, b);
    if (gap.sign() < 0) gap = -gap;
    if (copies > 1) {
      EXPECT_LT(gap, previous_gap) << copies;
    }
    previous_gap = gap;
  }
  EXPECT_THROW(blow_up(g, 0), std::invalid_argument);
}

TEST(DensityVectorTest, Operations) {
  DensityVector a(3), b(3);
  a[1] = Rational(1, 2);
  a[3] = Rational(1, 3);
  b[3] = 3;
  EXPECT_EQ(a.sum(), Rational(5, 6));
  EXPECT_EQ(a.dot(b), Rational(1));
  EXPECT_EQ(a.support(), (std::vector<ClassIndex>{1, 3}));
  EXPECT_THROW(a.dot(DensityVector(2)), std::invalid_argument);
  EXPECT_THROW(a[4], std::out_of_range);
}

}  // namespace
}  // namespace flagcert
