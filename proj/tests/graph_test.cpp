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


#include "tokaut/graph.hpp"

#include <random>
#include <sstream>
#include <utility>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "tokaut/errors.hpp"
#include "tokaut/token.hpp"

namespace tokaut {
namespace {

using Edges = std::vector<std::pair<int, int>>;

TEST(GraphTest, CompleteGraphs) {
  EXPECT_EQ(complete_graph(1).num_vertices(), 1);
  EXPECT_EQ(complete_graph(1).num_edges(), 0);
  EXPECT_EQ(complete_graph(2).edges(), (Edges{{0, 1}}));
  EXPECT_EQ(complete_graph(4).num_edges(), 6);
}

TEST(GraphTest, CompleteBipartite) {
  const Graph star = complete_bipartite({1, 3});
  EXPECT_EQ(star.edges(), (Edges{{0, 1}, {0, 2}, {0, 3}}));

  // 0-2-1-3-0
  EXPECT_EQ(complete_bipartite({2, 2}).edges(),
            (Edges{{0, 2}, {0, 3}, {1, 2}, {1, 3}}));

  const Graph k34 = complete_bipartite({3, 4});
  EXPECT_EQ(k34.num_edges(), 12);
  EXPECT_EQ(k34.degree_sequence(), (std::vector<int>{4, 4, 4, 3, 3, 3, 3}));
}

TEST(GraphTest, PathCycleStar) {
  EXPECT_EQ(path_graph(3).edges(), (Edges{{0, 1}, {1, 2}}));
  EXPECT_TRUE(is_isomorphic(cycle_graph(4), complete_bipartite({2, 2})));
  EXPECT_EQ(star_graph(3), complete_bipartite({1, 3}));
  EXPECT_THROW(cycle_graph(2), InvalidArgument);
  EXPECT_THROW(path_graph(0), InvalidArgument);
}

TEST(GraphTest, BuilderRejectsLoopsAndRange) {
  GraphBuilder b(3);
  EXPECT_THROW(b.add_edge(1, 1), InvalidArgument);
  EXPECT_THROW(b.add_edge(0, 3), InvalidArgument);
  b.add_edge(0, 1).add_edge(1, 0);
  EXPECT_EQ(std::move(b).build().num_edges(), 1);
}

TEST(CartesianProductTest, SmallProducts) {
  const std::vector<Graph> k2k2{complete_graph(2), complete_graph(2)};
  const Graph c4 = cartesian_product(k2k2);
  EXPECT_EQ(c4.num_vertices(), 4);
  EXPECT_EQ(c4.num_edges(), 4);
  EXPECT_TRUE(oracle::isomorphic(c4, cycle_graph(4)));

  const std::vector<Graph> ladder{complete_graph(2), path_graph(3)};
  EXPECT_EQ(cartesian_product(ladder).num_edges(), 7);

  const std::vector<Graph> cube(3, complete_graph(2));
  const Graph q3 = cartesian_product(cube);
  EXPECT_EQ(q3.num_vertices(), 8);
  EXPECT_EQ(q3.num_edges(), 12);
  EXPECT_EQ(q3, hypercube(3));

  EXPECT_THROW(cartesian_product(std::vector<Graph>{}), InvalidArgument);
}

TEST(CartesianProductTest, DegreeLawAndEncoding) {
  const std::vector<std::vector<Graph>> products = {
      {complete_graph(2), path_graph(3)},
      {cycle_graph(5), path_graph(4)},
      {complete_bipartite({1, 3}), complete_graph(3), path_graph(2)},
      {complete_graph(1), cycle_graph(3)},
  };
  for (const auto& factors : products) {
    const Graph g = cartesian_product(factors);
    std::vector<int> sizes;
    for (const auto& f : factors) sizes.push_back(f.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) {
      const ProductVertex pv = decode_product_vertex(sizes, v);
      EXPECT_EQ(encode_product_vertex(sizes, pv), v);
      int expected = 0;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        expected += factors[i].degree(pv.coords[i]);
      }
      EXPECT_EQ(g.degree(v), expected) << g.label() << " vertex " << v;
    }
    // Adjacency: exactly one coordinate differs, along a factor edge.
    for (int u = 0; u < g.num_vertices(); ++u) {
      for (int v = 0; v < g.num_vertices(); ++v) {
        const auto a = decode_product_vertex(sizes, u).coords;
        const auto b = decode_product_vertex(sizes, v).coords;
        int differing = 0;
        bool along_edge = true;
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (a[i] != b[i]) {
            ++differing;
            along_edge = along_edge && factors[i].adjacent(a[i], b[i]);
          }
        }
        EXPECT_EQ(g.adjacent(u, v), differing == 1 && along_edge);
      }
    }
  }
  const std::vector<int> sizes{2, 3};
  // Factor 0 is the most significant digit.
  EXPECT_EQ(decode_product_vertex(sizes, 4).coords, (std::vector<int>{1, 1}));
  EXPECT_THROW(encode_product_vertex(sizes, {{2, 0}}), InvalidArgument);
}

TEST(HypercubeTest, RegularWithExpectedEdgeCount) {
  for (int r = 1; r <= 6; ++r) {
    const Graph q = hypercube(r);
    EXPECT_EQ(q.num_vertices(), 1 << r);
    EXPECT_EQ(q.num_edges(), static_cast<std::int64_t>(r) << (r - 1));
    for (int v = 0; v < q.num_vertices(); ++v) EXPECT_EQ(q.degree(v), r);
  }
  EXPECT_EQ(hypercube(1), complete_graph(2).with_label("Q1"));
}

TEST(DistanceTest, Examples) {
  EXPECT_EQ(distance_matrix(path_graph(3))[0][2], 2);
  const auto d = distance_matrix(empty_graph(2));
  EXPECT_EQ(d[0][1], kUnreachable);
  EXPECT_EQ(d[0][0], 0);
  EXPECT_EQ(distance_matrix(hypercube(3))[0][7], 3);
  EXPECT_FALSE(is_connected(empty_graph(2)));
  EXPECT_TRUE(is_connected(complete_graph(1)));
}

TEST(DistanceTest, SymmetricWithZeroDiagonal) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = oracle::random_graph(9, 0.3, rng);
    const auto d = distance_matrix(g);
    for (int u = 0; u < 9; ++u) {
      EXPECT_EQ(d[u][u], 0);
      for (int v = 0; v < 9; ++v) {
        EXPECT_EQ(d[u][v], d[v][u]);
        EXPECT_EQ(d[u][v] == 1, g.adjacent(u, v));
      }
    }
  }
}

TEST(IsomorphismTest, Examples) {
  const auto f = is_isomorphic(cycle_graph(4), complete_bipartite({2, 2}));
  ASSERT_TRUE(f.has_value());
  EXPECT_TRUE(is_isomorphism(cycle_graph(4), complete_bipartite({2, 2}), *f));

  EXPECT_FALSE(is_isomorphic(path_graph(3), complete_graph(3)).has_value());

  const Graph f2 = token_graph(complete_bipartite({2, 2}), 2).graph;
  const auto g = is_isomorphic(f2, complete_bipartite({2, 4}));
  ASSERT_TRUE(g.has_value());
  EXPECT_TRUE(is_isomorphism(f2, complete_bipartite({2, 4}), *g));
}

TEST(IsomorphismTest, ReflexiveAndSymmetric) {
  const std::vector<Graph> fixtures = {
      cycle_graph(6), hypercube(3), complete_bipartite({2, 3}), path_graph(5),
      token_graph(complete_bipartite({2, 3}), 2).graph, empty_graph(3)};
  std::mt19937_64 rng(11);
  for (const auto& g : fixtures) {
    const auto self = is_isomorphic(g, g);
    ASSERT_TRUE(self.has_value());
    EXPECT_TRUE(is_isomorphism(g, g, *self));

    const auto perm = oracle::random_permutation(g.num_vertices(), rng);
    const Graph h = relabel(g, perm);
    const auto fwd = is_isomorphic(g, h);
    const auto back = is_isomorphic(h, g);
    ASSERT_TRUE(fwd && back);
    std::vector<int> inv(fwd->size());
    for (std::size_t v = 0; v < fwd->size(); ++v) inv[(*fwd)[v]] = static_cast<int>(v);
    EXPECT_TRUE(is_isomorphism(h, g, inv));
    EXPECT_TRUE(is_isomorphism(h, g, *back));
  }
}

TEST(IsomorphismTest, AgreesWithBruteForce) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 5;
    const Graph a = oracle::random_graph(n, 0.5, rng);
    // Half the time compare against a relabeled copy.
    const Graph b = trial % 2 ? relabel(a, oracle::random_permutation(n, rng))
                              : oracle::random_graph(n, 0.5, rng);
    EXPECT_EQ(is_isomorphic(a, b).has_value(), oracle::isomorphic(a, b))
        << to_edge_list(a) << "\n" << to_edge_list(b);
  }
}

TEST(EdgeListTest, RoundTrip) {
  const Graph g = complete_bipartite({2, 3});
  const std::string text = to_edge_list(g);
  EXPECT_EQ(text.substr(0, 4), "n 5\n");
  const Graph back = parse_edge_list(text);
  EXPECT_EQ(back, g);
  EXPECT_EQ(to_edge_list(back.with_label(g.label())), text);
}

TEST(EdgeListTest, AcceptsCommentsAndBlankLines) {
  const Graph g = parse_edge_list("# a path\nn 3\n\n0 1\n# middle\n2 1\n");
  EXPECT_EQ(g, path_graph(3));
}

TEST(EdgeListTest, RejectsMalformedInput) {
  for (const char* bad : {"", "n\n", "n x\n", "m 3\n0 1\n", "n 3\n0 3\n",
                          "n 3\n1 1\n", "n 3\n0\n", "n 3\n0 1 2\n",
                          "n 3\n0 a\n", "n 0\n", "n -2\n"}) {
    EXPECT_THROW(parse_edge_list(bad), InvalidArgument) << bad;
  }
}

}  // namespace
}  // namespace tokaut
