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

#ifndef TOKAUT_CONSTRUCTIONS_HPP_
#define TOKAUT_CONSTRUCTIONS_HPP_

#include <set>
#include <string>
#include <vector>

#include "tokaut/autsearch.hpp"
#include "tokaut/graph.hpp"
#include "tokaut/permgroup.hpp"
#include "tokaut/token.hpp"

namespace tokaut {

// Family of subsets used to select which vertices an involution swaps.
//
// Bipartite context (token graphs of K_{2,n}): each member is a
// (k-1)-subset of Y = {2..n+1}, stored sorted.
// Product context (2-token graphs of G_1 x ... x G_r): `factor_indices` is
// a subset of {1..r-1}, 1-based factor indices.
struct BipartiteAlpha {
  std::set<std::vector<int>> members;
};

struct ProductAlpha {
  std::set<int> factor_indices;
};

BipartiteAlpha symmetric_difference(const BipartiteAlpha& a,
                                    const BipartiteAlpha& b);
ProductAlpha symmetric_difference(const ProductAlpha& a, const ProductAlpha& b);

// "[[2,3],[2,4]]"
std::string to_string(const BipartiteAlpha& alpha);
std::string to_string(const ProductAlpha& alpha);

enum class StructureTag {
  kWreathK2n,           // Z_2 wr_{C([n],k-1)} S_n
  kWreathK2nTimesZ2,    // (Z_2 wr S_n) x Z_2, middle k
  kAutKmn,              // Aut(K_{m,n})
  kAutKmnTimesZ2,       // Aut(K_{m,n}) x Z_2, middle k
  kZ2TimesS4,           // F_2(K_{2,2}) = K_{2,4}
  kZ2PowSemidirect,     // Z_2^{r-1} semidirect Aut(G)
  kCube,                // Z_2^{r-1} semidirect Aut(Q_r)
};

std::string to_string(StructureTag tag);

struct PredictedAut {
  BigInt order;
  StructureTag tag = StructureTag::kAutKmn;
  // k = 1 or k = m + n - 1: derived from F_1(G) = G and the complement
  // isomorphism rather than from the stated range of the bipartite result.
  bool extension = false;
  std::string parameters;  // "m=2,n=3,k=2" or "r=3"
};

BigInt factorial(int n);

// Lifts an automorphism of tg.base to F_k: A -> {phi(v) : v in A}.
// Throws InvalidArgument if phi is not an automorphism of the base graph.
Permutation iota_lift(const Permutation& phi, const TokenGraph& tg);

// A -> V \ A on F_{n/2}. Throws unless 2k == n.
Permutation complement_automorphism(const TokenGraph& tg);

// On F_k(K_{2,n}): swaps the X-vertex of every A with |A cap X| = 1 and
// A cap Y in alpha; fixes everything else.
Permutation phi_alpha_bipartite(const TokenGraph& tg, const BipartiteAlpha& alpha);

// Lift of the base automorphism fixing X = {0,1} pointwise and acting as pi
// on Y. pi has degree n + 2 and must fix 0 and 1.
Permutation psi_pi(const TokenGraph& tg, const Permutation& pi);

// Generators of the predicted group on F_k(K_{m,n}); every element is
// checked to be an automorphism of tg.graph. `base_aut` supplies
// generators of Aut(K_{m,n}) where the construction lifts them.
std::vector<Permutation> bipartite_generators(const TokenGraph& tg, int m,
                                              const PermGroup& base_aut);
// Convenience overload computing Aut(K_{m,n}) by search.
std::vector<Permutation> bipartite_generators(const TokenGraph& tg, int m);

struct LabeledGenerator {
  std::string kind;    // "swap", "lift" or "complement"
  std::string detail;  // alpha family, or the base permutation of a lift
  Permutation perm;
};

// Same elements as bipartite_generators, in the same order.
std::vector<LabeledGenerator> labeled_bipartite_generators(
    const TokenGraph& tg, int m, const PermGroup& base_aut);

PredictedAut predicted_order(int m, int n, int k);

// X -> {pi^-1(x) : x in X}, replaced by its complement in [n] when that
// preimage contains n. X is a subset of {1..n-1}; pi has degree n and point
// i stands for i + 1.
std::set<int> action_phi(const Permutation& pi, const std::set<int>& subset,
                         int n);

// On F_2(G_1 x ... x G_r): exchanges the coordinates listed in alpha
// between the two endpoints of every pair.
Permutation phi_alpha_product(std::span<const Graph> factors,
                              const TokenGraph& tg, const ProductAlpha& alpha);

struct ProductSubgroup {
  TokenGraph token;                  // F_2(G)
  AutResult base_aut;                // Aut(G) from the search
  std::vector<Permutation> swaps;    // singleton-alpha coordinate swaps
  std::vector<Permutation> lifts;    // lifts of the Aut(G) generators
  std::vector<Permutation> generators() const;
};

// Factors must be prime and their product connected; r >= 2.
ProductSubgroup product_subgroup_generators(
    std::span<const Graph> factors,
    std::int64_t max_vertices = kDefaultMaxTokenVertices,
    const SearchLimits& limits = {});

PredictedAut predicted_order_cube(int r);

// H_0..H_min(m,k): vertex ranks of F_k(K_{m,n}) grouped by |A cap X|.
std::vector<std::vector<int>> h_partition(const BipartiteSpec& spec, int k);

struct CubeSlices {
  std::vector<int> zeros;      // x_i = y_i = 0
  std::vector<int> ones;       // x_i = y_i = 1
  std::vector<int> differing;  // x_i != y_i
};

// Partition of F_2(Q_r) by coordinate i (1-based) of the two endpoints.
CubeSlices cube_slices(int r, int i);

}  // namespace tokaut

#endif  // TOKAUT_CONSTRUCTIONS_HPP_
