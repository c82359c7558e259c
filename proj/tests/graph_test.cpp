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

#include "flagcert/graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "naive.hpp"

namespace flagcert {
namespace {

TEST(ColoredGraphTest, EdgesAreSortedAndColoured) {
  ColoredGraph g(4);
  g.set_edge(3, 1, Color::Blue);
  g.set_edge(0, 2, Color::Red);
  const auto edges = g.edges();
  ASSERT_EQ(edges.size(), 2u);
  EXPECT_EQ(edges[0].u, 0);
  EXPECT_EQ(edges[0].v, 2);
  EXPECT_EQ(edges[1].u, 1);
  EXPECT_EQ(edges[1].v, 3);
  EXPECT_EQ(edges[1].color, Color::Blue);
  EXPECT_EQ(g.color(1, 3), Color::Blue);
  EXPECT_FALSE(g.color(0, 1).has_value());
  g.remove_edge(1, 3);
  EXPECT_EQ(g.edge_count(), 1);
}

TEST(ColoredGraphTest, RejectsLoopsAndRange) {
  ColoredGraph g(3);
  EXPECT_THROW(g.set_edge(1, 1, Color::Red), std::exception);
  EXPECT_THROW(g.set_edge(0, 3, Color::Red), std::exception);
}

TEST(ColoredGraphTest, SwapAndUnderlying) {
  const auto c = alternating_cycle(6);
  EXPECT_EQ(c.edge_count(), 6);
  const auto s = c.swapped_colors();
  for (const auto& e : c.edges()) EXPECT_NE(*s.color(e.u, e.v), e.color);
  EXPECT_EQ(s.swapped_colors(), c);
  for (const auto& e : c.underlying().edges()) EXPECT_EQ(e.color, Color::Red);
}

TEST(ColoredGraphTest, AlternatingCycleMeetsEachColourOncePerVertex) {
  const auto c = alternating_cycle(6);
  for (Vertex v = 0; v < 6; ++v) {
    int red = 0, blue = 0;
    for (Vertex w = 0; w < 6; ++w) {
      if (w == v) continue;
      if (auto col = c.color(v, w)) (*col == Color::Red ? red : blue) += 1;
    }
    EXPECT_EQ(red, 1);
    EXPECT_EQ(blue, 1);
  }
  EXPECT_THROW(alternating_cycle(5), std::exception);
}

TEST(ColoredGraphTest, Builders) {
  EXPECT_TRUE(monochromatic_clique(5, Color::Blue).is_clique());
  EXPECT_EQ(monochromatic_clique(5, Color::Blue).edge_count(), 10);
  const auto k = complete_bipartite(3, 3);
  EXPECT_EQ(k.edge_count(), 9);
  EXPECT_FALSE(k.is_clique());
  EXPECT_TRUE(k.has_edge(0, 3));
  EXPECT_FALSE(k.has_edge(0, 1));
  EXPECT_FALSE(k.has_edge(3, 4));
}

TEST(ColoredGraphTest, RelabelIsAnIsomorphism) {
  naive::Lcg rng(3);
  const auto g = naive::random_graph(7, rng);
  const std::vector<Vertex> perm{3, 0, 6, 1, 5, 2, 4};
  const auto h = g.relabel(perm);
  for (Vertex u = 0; u < 7; ++u)
    for (Vertex v = 0; v < 7; ++v)
      if (u != v) {
        EXPECT_EQ(g.color(u, v), h.color(perm[u], perm[v]));
      }
}

TEST(FlagTest, ValidatesRoots) {
  EXPECT_THROW(Flag(ColoredGraph(3), {0, 0}), std::invalid_argument);
  EXPECT_THROW(Flag(ColoredGraph(3), {0, 3}), std::invalid_argument);
  ColoredGraph g(3);
  g.set_edge(0, 1, Color::Blue);
  const Flag f(g, {0, 1});
  EXPECT_EQ(f.root_edge_color(), Color::Blue);
  EXPECT_EQ(f.swapped_colors().root_edge_color(), Color::Red);
}

// |Aut(K_{a,b})| = a! b! (times 2 when a == b).
TEST(AutomorphismTest, CompleteBipartiteGroupOrders) {
  EXPECT_EQ(underlying_automorphisms(complete_bipartite(3, 3)).size(), 72u);
  EXPECT_EQ(underlying_automorphisms(complete_bipartite(2, 3)).size(), 12u);
  EXPECT_EQ(underlying_automorphisms(complete_bipartite(2, 2)).size(), 8u);
  EXPECT_EQ(underlying_automorphisms(complete_bipartite(1, 4)).size(), 24u);
}

TEST(AutomorphismTest, CycleAndCliqueGroups) {
  EXPECT_EQ(underlying_automorphisms(alternating_cycle(6)).size(), 12u);  // dihedral
  EXPECT_EQ(automorphism_count(alternating_cycle(6)), 6);                  // colour-preserving: rotations by 2, reflections
  EXPECT_EQ(automorphism_count(monochromatic_clique(5, Color::Red)), 120);
  EXPECT_THROW(underlying_automorphisms(ColoredGraph(9)), std::invalid_argument);
}

// Colour-preserving automorphisms agree with brute force over all bijections.
TEST(AutomorphismTest, MatchesNaiveCount) {
  naive::Lcg rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = naive::random_graph(5 + trial % 3, rng);
    EXPECT_EQ(static_cast<std::uint64_t>(automorphism_count(g)), naive::hom_inj(g, g)) << g.to_string();
  }
}

TEST(CanonicalFormTest, InvariantUnderRelabelling) {
  naive::Lcg rng(5);
  const auto tmpl = complete_bipartite(3, 3);
  const auto group = underlying_automorphisms(tmpl);
  for (const auto& g : enumerate_template_colorings(tmpl)) {
    if (rng.below(8) != 0) continue;
    const auto& p = group[static_cast<std::size_t>(rng.below(static_cast<int>(group.size())))];
    EXPECT_EQ(canonical_form(g, group), canonical_form(g.relabel(p), group));
  }
}

TEST(CanonicalFormTest, SeparatesDifferentColourCounts) {
  const auto tmpl = complete_bipartite(3, 3);
  const auto group = underlying_automorphisms(tmpl);
  const auto all_red = complete_bipartite(3, 3, Color::Red);
  const auto all_blue = complete_bipartite(3, 3, Color::Blue);
  EXPECT_NE(canonical_form(all_red, group), canonical_form(all_blue, group));
}

TEST(TemplateColoringTest, EnumeratesEveryColouringOnce) {
  const auto tmpl = complete_bipartite(3, 3);
  const auto all = enumerate_template_colorings(tmpl);
  ASSERT_EQ(all.size(), 512u);
  std::set<std::string> seen;
  for (const auto& g : all) {
    EXPECT_EQ(g.underlying(), tmpl);
    seen.insert(g.to_string());
  }
  EXPECT_EQ(seen.size(), 512u);
  EXPECT_EQ(all.front(), complete_bipartite(3, 3, Color::Red));
  EXPECT_EQ(all.back(), complete_bipartite(3, 3, Color::Blue));
}

}  // namespace
}  // namespace flagcert
