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

#ifndef TOKAUT_AUTSEARCH_HPP_
#define TOKAUT_AUTSEARCH_HPP_

#include <cstdint>
#include <vector>

#include "tokaut/graph.hpp"
#include "tokaut/permgroup.hpp"

namespace tokaut {

// Ordered list of disjoint cells covering the vertex set.
struct OrderedPartition {
  std::vector<std::vector<int>> cells;

  static OrderedPartition unit(int n);
  bool is_discrete() const;
  friend bool operator==(const OrderedPartition&,
                         const OrderedPartition&) = default;
};

// Which vertex invariants seed refinement before the counting rounds.
enum class SeedInvariants {
  kNone,
  // Degree together with the multiset of BFS distances to all vertices.
  kDegreeAndDistances,
};

// Coarsest equitable refinement of `partition`. Cells are split by the
// seed invariants first, then repeatedly by neighbor counts into each cell;
// fragments are ordered by increasing invariant value.
OrderedPartition refine(const Graph& g, const OrderedPartition& partition,
                        SeedInvariants seed = SeedInvariants::kNone);

struct SearchLimits {
  // Refinement calls allowed before the search gives up with
  // ScaleLimitExceeded.
  std::int64_t max_nodes = 10'000'000;
};

struct AutResult {
  PermGroup group;
  std::int64_t node_count = 0;
  double wall_seconds = 0.0;
};

// Generating set and stabilizer chain of Aut(g), found by individualization
// and refinement with backtracking. Every generator is checked against the
// adjacency matrix before it is accepted.
AutResult automorphism_group(const Graph& g, const SearchLimits& limits = {});

}  // namespace tokaut

#endif  // TOKAUT_AUTSEARCH_HPP_
