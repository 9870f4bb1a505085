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


#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace tokaut::oracle {

AdjMatrix adjacency(const Graph& g) {
  const int n = g.num_vertices();
  AdjMatrix adj(n, std::vector<char>(n, 0));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) adj[u][v] = g.adjacent(u, v) ? 1 : 0;
  }
  return adj;
}

Graph to_graph(const AdjMatrix& adj) {
  const int n = static_cast<int>(adj.size());
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (adj[u][v]) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::vector<std::int64_t>> c(n + 1);
  for (int i = 0; i <= n; ++i) {
    c[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  return c[n][k];
}

std::vector<std::vector<int>> colex_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(),
                                        b.rend());
  });
  return out;
}

AdjMatrix token_adjacency(const AdjMatrix& base, int k) {
  const int n = static_cast<int>(base.size());
  const auto subsets = colex_subsets(n, k);
  const int N = static_cast<int>(subsets.size());
  AdjMatrix adj(N, std::vector<char>(N, 0));
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      std::vector<int> diff;
      std::set_symmetric_difference(subsets[i].begin(), subsets[i].end(),
                                    subsets[j].begin(), subsets[j].end(),
                                    std::back_inserter(diff));
      adj[i][j] = diff.size() == 2 && base[diff[0]][diff[1]] ? 1 : 0;
    }
  }
  return adj;
}

namespace {

// Backtracking over maps a -> b; calls `found` for each isomorphism and
// stops when it returns false.
void enumerate_isomorphisms(const AdjMatrix& a, const AdjMatrix& b,
                            const std::function<bool(const std::vector<int>&)>& found) {
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != n) return;
  std::vector<int> deg_a(n, 0), deg_b(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      deg_a[u] += a[u][v];
      deg_b[u] += b[u][v];
    }
  }
  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  bool stop = false;
  std::function<void(int)> rec = [&](int u) {
    if (stop) return;
    if (u == n) {
      stop = !found(image);
      return;
    }
    for (int x = 0; x < n && !stop; ++x) {
      if (used[x] || deg_a[u] != deg_b[x]) continue;
      bool ok = true;
      for (int w = 0; w < u && ok; ++w) ok = a[u][w] == b[x][image[w]];
      if (!ok) continue;
      image[u] = x;
      used[x] = 1;
      rec(u + 1);
      used[x] = 0;
    }
  };
  rec(0);
}

}  // namespace

std::int64_t count_automorphisms(const AdjMatrix& adj, std::int64_t limit) {
  std::int64_t count = 0;
  enumerate_isomorphisms(adj, adj, [&](const std::vector<int>&) {
    return ++count < limit;
  });
  return count;
}

std::optional<std::vector<int>> find_isomorphism(const AdjMatrix& a,
                                                 const AdjMatrix& b) {
  std::optional<std::vector<int>> result;
  enumerate_isomorphisms(a, b, [&](const std::vector<int>& f) {
    result = f;
    return false;
  });
  return result;
}

bool isomorphic(const Graph& a, const Graph& b) {
  return find_isomorphism(adjacency(a), adjacency(b)).has_value();
}

std::int64_t closure_size(const std::vector<std::vector<int>>& gens,
                          std::int64_t limit) {
  if (gens.empty()) return 1;
  const int n = static_cast<int>(gens[0].size());
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier) {
      for (const auto& g : gens) {
        std::vector<int> q(n);
        for (int i = 0; i < n; ++i) q[i] = g[p[i]];
        if (seen.insert(q).second) {
          if (static_cast<std::int64_t>(seen.size()) > limit) return -1;
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  return static_cast<std::int64_t>(seen.size());
}

namespace {

std::vector<AdjMatrix> all_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::vector<AdjMatrix> out;
  for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
    AdjMatrix adj(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1) {
        adj[pairs[i].first][pairs[i].second] = 1;
        adj[pairs[i].second][pairs[i].first] = 1;
      }
    }
    out.push_back(std::move(adj));
  }
  return out;
}

// A x B with vertex (a, b) at index a * |B| + b.
AdjMatrix product(const AdjMatrix& a, const AdjMatrix& b) {
  const int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
  AdjMatrix adj(na * nb, std::vector<char>(na * nb, 0));
  for (int a1 = 0; a1 < na; ++a1) {
    for (int b1 = 0; b1 < nb; ++b1) {
      for (int a2 = 0; a2 < na; ++a2) {
        for (int b2 = 0; b2 < nb; ++b2) {
          const bool edge = (a1 == a2 && b[b1][b2]) || (b1 == b2 && a[a1][a2]);
          adj[a1 * nb + b1][a2 * nb + b2] = edge ? 1 : 0;
        }
      }
    }
  }
  return adj;
}

}  // namespace

bool brute_is_composite(const Graph& g, int max_factor) {
  const int n = g.num_vertices();
  const AdjMatrix target = adjacency(g);
  for (int a = 2; a <= max_factor; ++a) {
    if (n % a != 0 || n / a < 2 || n / a > max_factor) continue;
    const auto left = all_graphs(a);
    const auto right = all_graphs(n / a);
    for (const auto& x : left) {
      for (const auto& y : right) {
        if (find_isomorphism(product(x, y), target)) return true;
      }
    }
  }
  return false;
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

}  // namespace tokaut::oracle
