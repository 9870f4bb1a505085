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

// Brute-force factorization through a fixed vertex v0.
//
// If G = A x B with v0 = (a0, b0), the edges at v0 split into A-edges and
// B-edges, and the A-layer through v0 is exactly the set of vertices v with
// d(v, y) = d(v, v0) + 1 for every B-neighbor y of v0. So every bipartition
// of N(v0) yields one candidate pair of layers, which is then certified
// edge-for-edge by projecting each vertex onto its nearest layer vertex.

#include "tokaut/factorization.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <tuple>

#include "tokaut/errors.hpp"

namespace tokaut {

namespace {

constexpr int kMaxSplitDegree = 20;

struct Split {
  std::vector<int> layer_a;
  std::vector<int> layer_b;
  std::vector<int> proj_a;  // vertex -> index into layer_a
  std::vector<int> proj_b;
};

// Index in `layer` of the unique vertex closest to v, or -1 on a tie.
int nearest(const std::vector<std::vector<int>>& dist,
            const std::vector<int>& layer, int v) {
  int best = -1;
  int best_d = kUnreachable;
  bool tie = false;
  for (std::size_t i = 0; i < layer.size(); ++i) {
    const int d = dist[v][layer[i]];
    if (d < best_d) {
      best_d = d;
      best = static_cast<int>(i);
      tie = false;
    } else if (d == best_d) {
      tie = true;
    }
  }
  return tie ? -1 : best;
}

std::optional<Split> try_split(const Graph& g,
                               const std::vector<std::vector<int>>& dist,
                               int v0, const std::vector<int>& na,
                               const std::vector<int>& nb) {
  const int n = g.num_vertices();
  auto layer_through = [&](const std::vector<int>& other_side) {
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
      const bool in = std::all_of(other_side.begin(), other_side.end(), [&](int y) {
        return dist[v][y] == dist[v][v0] + 1;
      });
      if (in) layer.push_back(v);
    }
    return layer;
  };
  Split s;
  s.layer_a = layer_through(nb);
  s.layer_b = layer_through(na);
  const auto a = s.layer_a.size();
  const auto b = s.layer_b.size();
  if (a < 2 || b < 2 || a * b != static_cast<std::size_t>(n)) return std::nullopt;

  s.proj_a.resize(n);
  s.proj_b.resize(n);
  std::vector<int> seen(a * b, 0);
  for (int v = 0; v < n; ++v) {
    s.proj_a[v] = nearest(dist, s.layer_a, v);
    s.proj_b[v] = nearest(dist, s.layer_b, v);
    if (s.proj_a[v] < 0 || s.proj_b[v] < 0) return std::nullopt;
    if (seen[s.proj_a[v] * b + s.proj_b[v]]++) return std::nullopt;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int ua = s.layer_a[s.proj_a[u]], va = s.layer_a[s.proj_a[v]];
      const int ub = s.layer_b[s.proj_b[u]], vb = s.layer_b[s.proj_b[v]];
      const bool product_edge = (ua == va && g.adjacent(ub, vb)) ||
                                (ub == vb && g.adjacent(ua, va));
      if (product_edge != g.adjacent(u, v)) return std::nullopt;
    }
  }
  return s;
}

void check_input(const Graph& g) {
  if (g.num_vertices() < 2) {
    throw InvalidArgument("factorization needs at least 2 vertices");
  }
  if (g.num_vertices() > kMaxFactorVertices) {
    throw ScaleLimitExceeded("factorization limited to " +
                             std::to_string(kMaxFactorVertices) + " vertices");
  }
  if (!is_connected(g)) {
    throw InvalidArgument("factorization requires a connected graph");
  }
}

std::optional<Split> find_split(const Graph& g) {
  const int n = g.num_vertices();
  int v0 = 0;
  for (int v = 1; v < n; ++v) {
    if (g.degree(v) < g.degree(v0)) v0 = v;
  }
  const auto nbrs = g.neighbors(v0);
  const int d = static_cast<int>(nbrs.size());
  if (d < 2) return std::nullopt;  // a factor pair needs a neighbor in each
  if (d > kMaxSplitDegree) {
    throw ScaleLimitExceeded("minimum degree too large for brute-force split");
  }
  const auto dist = distance_matrix(g);
  // The first neighbor always goes to side A; the mirror split is redundant.
  for (std::uint32_t mask = 1; mask < (1U << d) - 1; mask += 2) {
    std::vector<int> na, nb;
    for (int i = 0; i < d; ++i) ((mask >> i) & 1 ? na : nb).push_back(nbrs[i]);
    if (auto s = try_split(g, dist, v0, na, nb)) return s;
  }
  return std::nullopt;
}

Factorization decompose(const Graph& g) {
  auto split = find_split(g);
  if (!split) {
    Factorization f;
    f.factors.push_back(g);
    for (int v = 0; v < g.num_vertices(); ++v) f.witness.push_back({{v}});
    return f;
  }
  const Factorization fa = decompose(induced_subgraph(g, split->layer_a));
  const Factorization fb = decompose(induced_subgraph(g, split->layer_b));
  Factorization f;
  f.factors = fa.factors;
  f.factors.insert(f.factors.end(), fb.factors.begin(), fb.factors.end());
  for (int v = 0; v < g.num_vertices(); ++v) {
    ProductVertex pv = fa.witness[split->proj_a[v]];
    const auto& tail = fb.witness[split->proj_b[v]].coords;
    pv.coords.insert(pv.coords.end(), tail.begin(), tail.end());
    f.witness.push_back(std::move(pv));
  }
  return f;
}

}  // namespace

bool is_prime(const Graph& g) {
  check_input(g);
  return !find_split(g).has_value();
}

Factorization prime_factor_decomposition(const Graph& g) {
  check_input(g);
  Factorization raw = decompose(g);

  // Deterministic factor order: vertex count, edge count, edge-list text.
  const std::size_t r = raw.factors.size();
  std::vector<std::size_t> order(r);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::string> text(r);
  for (std::size_t i = 0; i < r; ++i) {
    raw.factors[i] = raw.factors[i].with_label("");
    text[i] = to_edge_list(raw.factors[i]);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& fa = raw.factors[a];
    const auto& fb = raw.factors[b];
    return std::tuple(fa.num_vertices(), fa.num_edges(), text[a]) <
           std::tuple(fb.num_vertices(), fb.num_edges(), text[b]);
  });
  Factorization out;
  for (std::size_t i : order) {
    out.factors.push_back(raw.factors[i].with_label(
        "factor" + std::to_string(out.factors.size() + 1)));
  }
  for (const auto& pv : raw.witness) {
    ProductVertex sorted;
    for (std::size_t i : order) sorted.coords.push_back(pv.coords[i]);
    out.witness.push_back(std::move(sorted));
  }
  if (!certify(out, g)) {
    throw std::logic_error("factorization failed its own certificate");
  }
  return out;
}

bool certify(const Factorization& f, const Graph& g) {
  if (f.factors.empty() ||
      static_cast<int>(f.witness.size()) != g.num_vertices()) {
    return false;
  }
  std::vector<int> sizes;
  for (const auto& factor : f.factors) sizes.push_back(factor.num_vertices());
  const Graph product = cartesian_product(f.factors);
  if (product.num_vertices() != g.num_vertices()) return false;
  std::vector<int> to_product(g.num_vertices());
  try {
    for (int v = 0; v < g.num_vertices(); ++v) {
      to_product[v] = static_cast<int>(encode_product_vertex(sizes, f.witness[v]));
    }
  } catch (const InvalidArgument&) {
    return false;
  }
  return is_isomorphism(g, product, to_product);
}

}  // namespace tokaut
