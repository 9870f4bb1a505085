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

#ifndef TOKAUT_FACTORIZATION_HPP_
#define TOKAUT_FACTORIZATION_HPP_

#include <vector>

#include "tokaut/graph.hpp"

namespace tokaut {

// Decomposition of a connected graph into Cartesian-prime factors.
// cartesian_product(factors) relabeled by `witness` is exactly the input:
// vertex v of the input has product coordinates witness[v].
struct Factorization {
  std::vector<Graph> factors;
  std::vector<ProductVertex> witness;
};

// Size limit of the brute-force search.
inline constexpr int kMaxFactorVertices = 64;

// Throws InvalidArgument on disconnected input or fewer than 2 vertices.
bool is_prime(const Graph& g);
Factorization prime_factor_decomposition(const Graph& g);

// True iff relabeling cartesian_product(f.factors) by f.witness gives g.
bool certify(const Factorization& f, const Graph& g);

}  // namespace tokaut

#endif  // TOKAUT_FACTORIZATION_HPP_
