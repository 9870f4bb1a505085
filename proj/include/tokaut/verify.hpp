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

#ifndef TOKAUT_VERIFY_HPP_
#define TOKAUT_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tokaut/autsearch.hpp"
#include "tokaut/graph.hpp"
#include "tokaut/token.hpp"

namespace tokaut {

inline constexpr const char* kVersion = "0.3.0";

struct VerifyLimits {
  std::int64_t max_vertices = kDefaultMaxTokenVertices;
  std::int64_t max_nodes = 10'000'000;
};

// Computed vs. predicted automorphism data for one instance.
struct VerificationReport {
  std::string claim;       // "bipartite", "cube" or "product"
  std::string parameters;  // "m=2,n=3,k=2", "r=3", "factors=K2+P3"
  std::string structure;   // structure tag of the prediction
  bool extension = false;  // prediction outside the stated parameter range

  int token_vertices = 0;
  std::string computed_order;   // |Aut(F_k(G))| from the search
  std::string predicted_order;  // closed form
  std::string generated_order;  // order of the constructed subgroup

  bool generators_certified = false;  // every constructed element is an automorphism
  bool subgroup_certified = false;    // constructed subgroup sifts into computed Aut
  bool lagrange = false;              // generated order divides computed order
  bool equality = false;              // computed == predicted && subgroup_certified

  // Middle k: complement automorphism lies outside the subgroup generated
  // by the swaps and lifts.
  std::optional<bool> complement_outside;
  // Cube: slice subgraphs have the expected isomorphism types.
  std::optional<bool> slices_certified;
  // Product: computed Aut equals the constructed subgroup. Recorded only.
  std::optional<bool> conjecture_flag;

  std::vector<std::string> notes;
  std::int64_t node_count = 0;
  double wall_seconds = 0.0;

  // All asserted checks for this claim passed.
  bool passed = false;
};

VerificationReport verify_bipartite(int m, int n, int k,
                                    const VerifyLimits& limits = {});
VerificationReport verify_cube(int r, const VerifyLimits& limits = {});
VerificationReport verify_product(std::span<const Graph> factors,
                                  const VerifyLimits& limits = {});

// One-line JSON object with the report fields plus tool version.
std::string to_json(const VerificationReport& report);

}  // namespace tokaut

#endif  // TOKAUT_VERIFY_HPP_
