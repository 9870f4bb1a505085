// Copyright 2026 The tokaut Authors
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


#include "tokaut/token.hpp"

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "tokaut/errors.hpp"

namespace tokaut {
namespace {

std::vector<Graph> small_fixtures() {
  return {complete_graph(2),          complete_graph(4),
          path_graph(3),              path_graph(5),
          cycle_graph(5),             cycle_graph(6),
          star_graph(3),              complete_bipartite({2, 2}),
          complete_bipartite({2, 3}), complete_bipartite({3, 3}),
          hypercube(3),               empty_graph(4)};
}

TEST(RankTest, Examples) {
  EXPECT_EQ(rank({{0, 1}}, 4), 0);
  EXPECT_EQ(rank({{0, 1}}, 9), 0);
  EXPECT_EQ(unrank(binomial(7, 3) - 1, 7, 3).members, (std::vector<int>{4, 5, 6}));
}

TEST(RankTest, MatchesColexEnumeration) {
  for (int n = 1; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto subsets = oracle::colex_subsets(n, k);
      ASSERT_EQ(binomial(n, k), oracle::binomial(n, k));
      ASSERT_EQ(static_cast<std::int64_t>(subsets.size()), binomial(n, k));
      for (std::size_t r = 0; r < subsets.size(); ++r) {
        EXPECT_EQ(rank({subsets[r]}, n), static_cast<std::int64_t>(r));
        EXPECT_EQ(unrank(static_cast<std::int64_t>(r), n, k).members, subsets[r]);
      }
    }
  }
}

TEST(RankTest, FourChooseTwo) {
  const std::vector<std::vector<int>> expected = {{0, 1}, {0, 2}, {1, 2},
                                                  {0, 3}, {1, 3}, {2, 3}};
  EXPECT_EQ(oracle::colex_subsets(4, 2), expected);
  for (int r = 0; r < 6; ++r) EXPECT_EQ(unrank(r, 4, 2).members, expected[r]);
}

TEST(RankTest, RejectsInvalidInput) {
  EXPECT_THROW(unrank(6, 4, 2), InvalidArgument);
  EXPECT_THROW(unrank(-1, 4, 2), InvalidArgument);
  EXPECT_THROW(rank({{1, 0}}, 4), InvalidArgument);
  EXPECT_THROW(rank({{1, 1}}, 4), InvalidArgument);
  EXPECT_THROW(rank({{0, 4}}, 4), InvalidArgument);
}

TEST(BinomialTest, Saturates) {
  EXPECT_EQ(binomial(5, 7), 0);
  EXPECT_EQ(binomial(60, 30), oracle::binomial(60, 30));
  EXPECT_EQ(binomial(200, 100), std::numeric_limits<std::int64_t>::max());
}

TEST(TokenGraphTest, OneTokenIsTheBase) {
  for (const auto& g : small_fixtures()) {
    EXPECT_EQ(token_graph(g, 1).graph, g) << g.label();
  }
}

TEST(TokenGraphTest, Examples) {
  EXPECT_TRUE(oracle::isomorphic(token_graph(complete_bipartite({2, 2}), 2).graph,
                                 complete_bipartite({2, 4})));

  // F_2(P_3): the oracle adjacency is the path {0,1}-{0,2}-{1,2}.
  const auto p3 = oracle::token_adjacency(oracle::adjacency(path_graph(3)), 2);
  EXPECT_EQ(oracle::adjacency(token_graph(path_graph(3), 2).graph), p3);
  EXPECT_TRUE(oracle::isomorphic(oracle::to_graph(p3), path_graph(3)));

  const auto star = oracle::token_adjacency(oracle::adjacency(star_graph(3)), 2);
  EXPECT_TRUE(oracle::isomorphic(oracle::to_graph(star), cycle_graph(6)));
  EXPECT_EQ(oracle::adjacency(token_graph(star_graph(3), 2).graph), star);
}

TEST(TokenGraphTest, AgreesWithPairwiseConstruction) {
  for (const auto& g : small_fixtures()) {
    for (int k = 1; k < g.num_vertices(); ++k) {
      const TokenGraph tg = token_graph(g, k);
      EXPECT_EQ(oracle::adjacency(tg.graph),
                oracle::token_adjacency(oracle::adjacency(g), k))
          << g.label() << " k=" << k;
      for (int i = 0; i < tg.num_vertices(); ++i) {
        EXPECT_EQ(tg.index_of(tg.configs[i]), i);
      }
    }
  }
}

TEST(TokenGraphTest, EdgeCount) {
  for (const auto& g : small_fixtures()) {
    const int n = g.num_vertices();
    for (int k = 1; k < n; ++k) {
      EXPECT_EQ(token_graph(g, k).graph.num_edges(),
                oracle::binomial(n - 2, k - 1) * g.num_edges());
    }
  }
}

TEST(TokenGraphTest, RejectsBadArguments) {
  EXPECT_THROW(token_graph(complete_graph(1), 1), InvalidArgument);
  EXPECT_THROW(token_graph(complete_graph(4), 0), InvalidArgument);
  EXPECT_THROW(token_graph(complete_graph(4), 4), InvalidArgument);
  EXPECT_THROW(token_graph(hypercube(5), 3, 300), ScaleLimitExceeded);
  EXPECT_NO_THROW(token_graph(hypercube(4), 2, 120));
}

TEST(TokenGraphTest, MappingText) {
  const TokenGraph tg = token_graph(path_graph(3), 2);
  EXPECT_EQ(rank_mapping_text(tg), "0: {0,1}\n1: {0,2}\n2: {1,2}\n");
  EXPECT_EQ(tg.graph.label(), "F2(P3)");
}

TEST(ComplementTest, Examples) {
  const auto c = complement_map(4, 2);
  EXPECT_EQ(unrank(c[rank({{0, 1}}, 4)], 4, 2).members, (std::vector<int>{2, 3}));
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k < n; ++k) {
      const auto fwd = complement_map(n, k);
      const auto back = complement_map(n, n - k);
      for (std::size_t r = 0; r < fwd.size(); ++r) {
        EXPECT_EQ(back[fwd[r]], static_cast<int>(r));
      }
    }
  }
}

TEST(ComplementTest, IsAnIsomorphismBetweenComplementaryTokenGraphs) {
  std::mt19937_64 rng(5);
  std::vector<Graph> graphs = small_fixtures();
  for (int n = 2; n <= 8; ++n) graphs.push_back(oracle::random_graph(n, 0.5, rng));
  for (const auto& g : graphs) {
    const int n = g.num_vertices();
    if (n > 8) continue;
    for (int k = 1; k < n; ++k) {
      const auto c = complement_map(n, k);
      EXPECT_TRUE(is_isomorphism(token_graph(g, k).graph,
                                 token_graph(g, n - k).graph, c))
          << g.label() << " k=" << k;
    }
  }
}

TEST(DegreeTest, BipartiteDegreeFormula) {
  for (int m = 1; m <= 8; ++m) {
    for (int n = m; m + n <= 9; ++n) {
      for (int k = 1; k < m + n; ++k) {
        const TokenGraph tg = token_graph(complete_bipartite({m, n}), k);
        for (int v = 0; v < tg.num_vertices(); ++v) {
          int j = 0;
          for (int x : tg.configs[v].members) j += x < m;
          EXPECT_EQ(tg.graph.degree(v), j * (n - k + j) + (k - j) * (m - j));
        }
      }
    }
  }
}

TEST(DegreeTest, CubePairs) {
  for (int r = 3; r <= 4; ++r) {
    const Graph q = hypercube(r);
    const TokenGraph tg = token_graph(q, 2);
    for (int v = 0; v < tg.num_vertices(); ++v) {
      const auto& pair = tg.configs[v].members;
      const int expected = q.adjacent(pair[0], pair[1]) ? 2 * r - 2 : 2 * r;
      EXPECT_EQ(tg.graph.degree(v), expected);
    }
  }
}

}  // namespace
}  // namespace tokaut
