// Copyright 2026 The dalpha Authors
//
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

#include "dalpha/families.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <set>

#include "dalpha/error.hpp"

namespace dalpha {
namespace {

using ::testing::ElementsAre;

TEST(CompleteMultipartiteTest, Examples) {
  EXPECT_THAT(degree_sequence(make_complete_multipartite({1, 2, 2})), ElementsAre(4, 3, 3, 3, 3));
  EXPECT_EQ(make_complete_multipartite({1, 2}), graph_from_edges(3, {{0, 1}, {0, 2}}));
  EXPECT_EQ(make_complete_multipartite({1, 1, 1, 1}), make_complete(4));
}

TEST(CompleteMultipartiteTest, RejectsBadParts) {
  EXPECT_THROW(make_complete_multipartite({}), InvalidArgument);
  EXPECT_THROW(make_complete_multipartite({1, 0, 2}), InvalidArgument);
  EXPECT_THROW(make_complete_multipartite({40, 30}), InvalidArgument);
}

TEST(CompleteMultipartiteTest, ApexCocktailComplementSignature) {
  for (int n = 3; n <= 61; n += 2) {
    const Graph g = make_apex_cocktail_party(n);
    const Graph co = complement(g);
    ASSERT_EQ(co.degree(0), 0);
    ASSERT_EQ(regular_degree(delete_vertex(co, 0)), 1);
    ASSERT_EQ(g.degree(0), n - 1);
    for (int v = 1; v < n; ++v) ASSERT_EQ(g.degree(v), n - 2);
  }
  EXPECT_THROW(make_apex_cocktail_party(4), InvalidArgument);
}

TEST(MakeDvdrTest, WheelFromFiveCycle) {
  const Graph w = make_dvdr(make_cycle(5));
  EXPECT_EQ(w.order(), 6);
  EXPECT_THAT(degree_sequence(w), ElementsAre(5, 3, 3, 3, 3, 3));
  EXPECT_TRUE(is_connected(w));
}

TEST(MakeDvdrTest, StarFromEmptyBase) {
  EXPECT_EQ(make_dvdr(Graph(3)), make_star(4));
}

TEST(MakeDvdrTest, PerfectMatchingBase) {
  const Graph g = make_dvdr(graph_from_edges(4, {{0, 1}, {2, 3}}));
  EXPECT_THAT(degree_sequence(g), ElementsAre(4, 2, 2, 2, 2));
}

TEST(MakeDvdrTest, RejectsIrregularBase) {
  EXPECT_THROW(make_dvdr(make_path(3)), InvalidArgument);
  EXPECT_THROW(make_dvdr(make_cycle(62)), InvalidArgument);
}

TEST(MakeDvdrTest, HubIsUniqueAndRemovable) {
  const std::vector<Graph> bases{Graph(5), make_cycle(7), make_cocktail_party(4),
                                 complement(make_cycle_union(std::vector<int>{3, 5}))};
  for (const Graph& base : bases) {
    const Graph g = make_dvdr(base);
    int hubs = 0;
    for (int v = 0; v < g.order(); ++v) hubs += g.degree(v) == g.order() - 1;
    EXPECT_EQ(hubs, 1);
    EXPECT_EQ(delete_vertex(g, 0), base);
  }
}

TEST(PartitionsTest, PartsAtLeastThree) {
  EXPECT_EQ(partitions_min_part(5, 3), (std::vector<std::vector<int>>{{5}}));
  EXPECT_EQ(partitions_min_part(7, 3), (std::vector<std::vector<int>>{{7}, {3, 4}}));
  EXPECT_EQ(partitions_min_part(9, 3),
            (std::vector<std::vector<int>>{{9}, {3, 6}, {4, 5}, {3, 3, 3}}));
  EXPECT_TRUE(partitions_min_part(2, 3).empty());
}

TEST(EnumerateN4DvdrTest, FamilySizes) {
  EXPECT_EQ(enumerate_n4_dvdr(4).size(), 1u);
  EXPECT_EQ(enumerate_n4_dvdr(6).size(), 1u);
  EXPECT_EQ(enumerate_n4_dvdr(8).size(), 2u);
  EXPECT_EQ(enumerate_n4_dvdr(10).size(), 4u);
}

TEST(EnumerateN4DvdrTest, SmallCases) {
  EXPECT_EQ(enumerate_n4_dvdr(4), std::vector<Graph>{make_star(4)});
  // Hub joined to the complement of C5 (itself a 5-cycle under relabelling).
  EXPECT_EQ(enumerate_n4_dvdr(6), std::vector<Graph>{make_dvdr(complement(make_cycle(5)))});
}

TEST(EnumerateN4DvdrTest, RejectsBadOrders) {
  EXPECT_THROW(enumerate_n4_dvdr(5), InvalidArgument);
  EXPECT_THROW(enumerate_n4_dvdr(2), InvalidArgument);
  EXPECT_THROW(enumerate_n4_dvdr(64), InvalidArgument);
}

TEST(EnumerateN4DvdrTest, MembersAreRegularRemainderAndPairwiseDistinct) {
  for (int n = 4; n <= 24; n += 2) {
    std::set<std::vector<int>> signatures;
    for (const Graph& g : enumerate_n4_dvdr(n)) {
      ASSERT_EQ(g.order(), n);
      ASSERT_EQ(g.degree(0), n - 1);
      const Graph rest = delete_vertex(g, 0);
      ASSERT_EQ(regular_degree(rest), n - 4);
      signatures.insert(cycle_lengths(complement(rest)));
    }
    ASSERT_EQ(signatures.size(), enumerate_n4_dvdr(n).size());
  }
}

TEST(ExtremalFamilyTest, DispatchesByParity) {
  EXPECT_EQ(extremal_family(5), std::vector<Graph>{make_complete_multipartite({1, 2, 2})});
  EXPECT_EQ(extremal_family(8).size(), 2u);
  EXPECT_THROW(extremal_family(2), InvalidArgument);
  EXPECT_THROW(extremal_family(1), InvalidArgument);
}

TEST(MakeFamilyTest, VariantDispatch) {
  EXPECT_EQ(make_family(family::Path{4}), make_path(4));
  EXPECT_EQ(make_family(family::Cycle{5}), make_cycle(5));
  EXPECT_EQ(make_family(family::Complete{3}), make_complete(3));
  EXPECT_EQ(make_family(family::Star{5}), make_star(5));
  EXPECT_EQ(make_family(family::CompleteMultipartite{{1, 2}}),
            make_complete_multipartite({1, 2}));
  EXPECT_EQ(make_family(family::DvdrFromRegular{make_cycle(5)}), make_dvdr(make_cycle(5)));
  EXPECT_THROW(make_family(family::Cycle{2}), InvalidArgument);
}

TEST(CocktailPartyTest, IsRegular) {
  for (int k = 1; k <= 10; ++k) {
    EXPECT_EQ(regular_degree(make_cocktail_party(k)), 2 * k - 2);
  }
}

}  // namespace
}  // namespace dalpha
