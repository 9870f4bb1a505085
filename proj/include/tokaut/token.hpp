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

#ifndef TOKAUT_TOKEN_HPP_
#define TOKAUT_TOKEN_HPP_

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "tokaut/graph.hpp"

namespace tokaut {

// Binomial coefficient; saturates at INT64_MAX instead of overflowing.
std::int64_t binomial(int n, int k);

// A k-subset of vertex ids, strictly increasing.
struct TokenConfig {
  std::vector<int> members;

  int size() const { return static_cast<int>(members.size()); }
  bool contains(int v) const;
  // "{0,1,4}"
  std::string to_string() const;

  friend bool operator==(const TokenConfig&, const TokenConfig&) = default;
};

// Checks strict ordering and range; throws InvalidArgument otherwise.
void validate_config(const TokenConfig& a, int n);

// Colexicographic combinadic rank: sum over i of C(a_i, i + 1).
std::int64_t rank(const TokenConfig& a, int n);
TokenConfig unrank(std::int64_t r, int n, int k);

// Maps each rank of F_k to the rank of its complement in F_{n-k}.
std::vector<int> complement_map(int n, int k);

// F_k(G): vertices are the k-subsets of V(G), adjacent when their symmetric
// difference is an edge of G. Vertex i of `graph` is unrank(i, n, k).
struct TokenGraph {
  Graph base;
  int k = 0;
  Graph graph;
  std::vector<TokenConfig> configs;

  int n() const { return base.num_vertices(); }
  int num_vertices() const { return graph.num_vertices(); }
  int index_of(const TokenConfig& a) const {
    return static_cast<int>(rank(a, n()));
  }
};

inline constexpr std::int64_t kDefaultMaxTokenVertices = 300;

// Builds F_k(base). Refuses (ScaleLimitExceeded) when C(n,k) exceeds
// max_vertices.
TokenGraph token_graph(const Graph& base, int k,
                       std::int64_t max_vertices =
                           std::numeric_limits<std::int32_t>::max());

// Sidecar mapping text: one "rank: {v_0,...}" line per vertex.
std::string rank_mapping_text(const TokenGraph& tg);

}  // namespace tokaut

#endif  // TOKAUT_TOKEN_HPP_
