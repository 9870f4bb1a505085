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


#ifndef TOKAUT_SPECIFIER_HPP_
#define TOKAUT_SPECIFIER_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "tokaut/graph.hpp"

namespace tokaut {

inline constexpr const char* kSpecifierGrammar =
    "kmn:M,N | kn:N | kN | path:N | cycle:N | star:N | cube:R | "
    "prod:<spec>+<spec>+... | file:<path>";

// Builds the graph named by a textual specifier such as "kmn:2,3" or
// "prod:k2+path:3". Throws InvalidArgument naming the grammar on bad input.
Graph parse_graph_specifier(std::string_view spec);

// "k2+path:3" -> [K2, P3]. Factors may not themselves be products.
std::vector<Graph> parse_factor_list(std::string_view list);

}  // namespace tokaut

#endif  // TOKAUT_SPECIFIER_HPP_
