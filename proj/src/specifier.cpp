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


#include "tokaut/specifier.hpp"

#include <charconv>
#include <fstream>

#include "tokaut/errors.hpp"

namespace tokaut {

namespace {

constexpr int kMaxSpecifierSize = 4096;

[[noreturn]] void reject(std::string_view spec, const std::string& why) {
  throw InvalidArgument("bad graph specifier '" + std::string(spec) + "': " +
                        why + " (expected " + kSpecifierGrammar + ")");
}

int parse_int(std::string_view spec, std::string_view text, int min) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    reject(spec, "'" + std::string(text) + "' is not an integer");
  }
  if (value < min || value > kMaxSpecifierSize) {
    reject(spec, "size " + std::string(text) + " out of range [" +
                     std::to_string(min) + "," +
                     std::to_string(kMaxSpecifierSize) + "]");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

Graph parse_simple(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    // Shorthand "kN" for a complete graph.
    if (spec.size() >= 2 && (spec[0] == 'k' || spec[0] == 'K')) {
      return complete_graph(parse_int(spec, spec.substr(1), 1));
    }
    reject(spec, "missing ':'");
  }
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view arg = spec.substr(colon + 1);
  if (kind == "kn") return complete_graph(parse_int(spec, arg, 1));
  if (kind == "path") return path_graph(parse_int(spec, arg, 1));
  if (kind == "cycle") return cycle_graph(parse_int(spec, arg, 3));
  if (kind == "star") return star_graph(parse_int(spec, arg, 1));
  if (kind == "cube") return hypercube(parse_int(spec, arg, 1));
  if (kind == "kmn") {
    const auto parts = split(arg, ',');
    if (parts.size() != 2) reject(spec, "kmn takes two sizes");
    return complete_bipartite(
        {parse_int(spec, parts[0], 1), parse_int(spec, parts[1], 1)});
  }
  if (kind == "file") {
    std::ifstream in{std::string(arg)};
    if (!in) reject(spec, "cannot open '" + std::string(arg) + "'");
    return read_edge_list(in, std::string(arg));
  }
  reject(spec, "unknown kind '" + std::string(kind) + "'");
}

}  // namespace

std::vector<Graph> parse_factor_list(std::string_view list) {
  std::vector<Graph> factors;
  for (const auto part : split(list, '+')) {
    if (part.starts_with("prod:")) reject(part, "nested products");
    if (part.empty()) reject(list, "empty factor");
    factors.push_back(parse_simple(part));
  }
  return factors;
}

Graph parse_graph_specifier(std::string_view spec) {
  if (spec.starts_with("prod:")) {
    const auto factors = parse_factor_list(spec.substr(5));
    return cartesian_product(factors);
  }
  return parse_simple(spec);
}

}  // namespace tokaut
