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

#include <algorithm>
#include <sstream>

namespace tokaut {

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  __int128 result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > kMax) return kMax;
  }
  return static_cast<std::int64_t>(result);
}

bool TokenConfig::contains(int v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

std::string TokenConfig::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(members[i]);
  }
  return out + "}";
}

void validate_config(const TokenConfig& a, int n) {
  for (std::size_t i = 0; i < a.members.size(); ++i) {
    if (a.members[i] < 0 || a.members[i] >= n) {
      throw InvalidArgument("token member out of range: " + a.to_string());
    }
    if (i && a.members[i - 1] >= a.members[i]) {
      throw InvalidArgument("token configuration not strictly increasing: " +
                            a.to_string());
    }
  }
}

std::int64_t rank(const TokenConfig& a, int n) {
  validate_config(a, n);
  std::int64_t r = 0;
  for (int i = 0; i < a.size(); ++i) r += binomial(a.members[i], i + 1);
  return r;
}

TokenConfig unrank(std::int64_t r, int n, int k) {
  if (k < 0 || k > n) throw InvalidArgument("subset size out of range");
  if (r < 0 || r >= binomial(n, k)) {
    throw InvalidArgument("rank " + std::to_string(r) + " out of range for C(" +
                          std::to_string(n) + "," + std::to_string(k) + ")");
  }
  TokenConfig a;
  a.members.resize(k);
  // Greedy from the largest member down.
  int hi = n - 1;
  for (int i = k; i >= 1; --i) {
    while (binomial(hi, i) > r) --hi;
    a.members[i - 1] = hi;
    r -= binomial(hi, i);
    --hi;
  }
  return a;
}

std::vector<int> complement_map(int n, int k) {
  if (k < 1 || k > n - 1) throw InvalidArgument("k out of range");
  const std::int64_t count = binomial(n, k);
  std::vector<int> out(static_cast<std::size_t>(count));
  for (std::int64_t r = 0; r < count; ++r) {
    const TokenConfig a = unrank(r, n, k);
    TokenConfig c;
    for (int v = 0; v < n; ++v) {
      if (!a.contains(v)) c.members.push_back(v);
    }
    out[r] = static_cast<int>(rank(c, n));
  }
  return out;
}

TokenGraph token_graph(const Graph& base, int k, std::int64_t max_vertices) {
  const int n = base.num_vertices();
  if (n < 2) throw InvalidArgument("token graphs need at least 2 vertices");
  if (k < 1 || k > n - 1) {
    throw InvalidArgument("k=" + std::to_string(k) + " outside 1.." +
                          std::to_string(n - 1));
  }
  const std::int64_t count = binomial(n, k);
  if (count > max_vertices) {
    throw ScaleLimitExceeded("F_" + std::to_string(k) + " would have " +
                             std::to_string(count) + " vertices (limit " +
                             std::to_string(max_vertices) + ")");
  }
  TokenGraph tg{base, k, Graph{}, {}};
  tg.configs.reserve(static_cast<std::size_t>(count));
  for (std::int64_t r = 0; r < count; ++r) tg.configs.push_back(unrank(r, n, k));

  std::string label = "F" + std::to_string(k) + "(" +
                      (base.label().empty() ? "G" : base.label()) + ")";
  GraphBuilder b(static_cast<int>(count), std::move(label));
  const auto edges = base.edges();
  for (std::int64_t r = 0; r < count; ++r) {
    const TokenConfig& a = tg.configs[r];
    for (auto [x, y] : edges) {
      const bool has_x = a.contains(x);
      if (has_x == a.contains(y)) continue;
      const int from = has_x ? x : y;
      const int to = has_x ? y : x;
      TokenConfig moved = a;
      *std::find(moved.members.begin(), moved.members.end(), from) = to;
      std::sort(moved.members.begin(), moved.members.end());
      const auto s = rank(moved, n);
      if (s > r) b.add_edge(static_cast<int>(r), static_cast<int>(s));
    }
  }
  tg.graph = std::move(b).build();
  return tg;
}

std::string rank_mapping_text(const TokenGraph& tg) {
  std::ostringstream out;
  for (std::size_t r = 0; r < tg.configs.size(); ++r) {
    out << r << ": " << tg.configs[r].to_string() << '\n';
  }
  return out.str();
}

}  // namespace tokaut
