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

#include "tokaut/graph.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <sstream>

namespace tokaut {

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(num_edges_));
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> out(n_);
  for (int u = 0; u < n_; ++u) out[u] = degree(u);
  return out;
}

Graph Graph::with_label(std::string label) const {
  Graph copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

GraphBuilder::GraphBuilder(int n, std::string label) {
  if (n < 1) throw InvalidArgument("graph must have at least one vertex");
  g_.n_ = n;
  g_.words_ = (n + Graph::kWordBits - 1) / Graph::kWordBits;
  g_.bits_.assign(static_cast<std::size_t>(n) * g_.words_, 0);
  g_.label_ = std::move(label);
}

bool GraphBuilder::has_edge(int u, int v) const {
  return g_.adjacent(u, v);
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_) {
    throw InvalidArgument("edge endpoint out of range: " + std::to_string(u) +
                          " " + std::to_string(v));
  }
  if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
  if (g_.adjacent(u, v)) return *this;
  const int w = g_.words_;
  g_.bits_[static_cast<std::size_t>(u) * w + v / Graph::kWordBits] |=
      Graph::Word{1} << (v % Graph::kWordBits);
  g_.bits_[static_cast<std::size_t>(v) * w + u / Graph::kWordBits] |=
      Graph::Word{1} << (u % Graph::kWordBits);
  ++g_.num_edges_;
  return *this;
}

Graph GraphBuilder::build() && {
  g_.neighbors_.assign(g_.n_, {});
  for (int u = 0; u < g_.n_; ++u) {
    for (int v = 0; v < g_.n_; ++v) {
      if (g_.adjacent(u, v)) g_.neighbors_[u].push_back(v);
    }
  }
#ifndef NDEBUG
  for (int u = 0; u < g_.n_; ++u) {
    assert(!g_.adjacent(u, u));
    for (int v : g_.neighbors_[u]) assert(g_.adjacent(v, u));
  }
#endif
  return std::move(g_);
}

Graph complete_graph(int n) {
  GraphBuilder b(n, "K" + std::to_string(n));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph complete_bipartite(const BipartiteSpec& spec) {
  if (spec.m < 1 || spec.n < 1) {
    throw InvalidArgument("complete bipartite sides must be positive");
  }
  GraphBuilder b(spec.m + spec.n, "K" + std::to_string(spec.m) + "," +
                                       std::to_string(spec.n));
  for (int x = 0; x < spec.m; ++x)
    for (int y = spec.m; y < spec.m + spec.n; ++y) b.add_edge(x, y);
  return std::move(b).build();
}

Graph path_graph(int n) {
  GraphBuilder b(n, "P" + std::to_string(n));
  for (int u = 0; u + 1 < n; ++u) b.add_edge(u, u + 1);
  return std::move(b).build();
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  GraphBuilder b(n, "C" + std::to_string(n));
  for (int u = 0; u < n; ++u) b.add_edge(u, (u + 1) % n);
  return std::move(b).build();
}

Graph star_graph(int n) {
  return complete_bipartite({1, n}).with_label("S" + std::to_string(n));
}

Graph empty_graph(int n) {
  return GraphBuilder(n, "E" + std::to_string(n)).build();
}

ProductVertex decode_product_vertex(std::span<const int> factor_sizes,
                                    std::int64_t index) {
  ProductVertex v;
  v.coords.resize(factor_sizes.size());
  for (std::size_t i = factor_sizes.size(); i-- > 0;) {
    v.coords[i] = static_cast<int>(index % factor_sizes[i]);
    index /= factor_sizes[i];
  }
  return v;
}

std::int64_t encode_product_vertex(std::span<const int> factor_sizes,
                                   const ProductVertex& v) {
  if (v.coords.size() != factor_sizes.size()) {
    throw InvalidArgument("product vertex has wrong arity");
  }
  std::int64_t index = 0;
  for (std::size_t i = 0; i < factor_sizes.size(); ++i) {
    if (v.coords[i] < 0 || v.coords[i] >= factor_sizes[i]) {
      throw InvalidArgument("product coordinate out of range");
    }
    index = index * factor_sizes[i] + v.coords[i];
  }
  return index;
}

Graph cartesian_product(std::span<const Graph> factors) {
  if (factors.empty()) throw InvalidArgument("empty factor list");
  std::vector<int> sizes;
  std::int64_t total = 1;
  std::string label;
  for (const Graph& f : factors) {
    sizes.push_back(f.num_vertices());
    total *= f.num_vertices();
    if (total > std::numeric_limits<int>::max() / 2) {
      throw ScaleLimitExceeded("Cartesian product too large");
    }
    if (!label.empty()) label += "+";
    label += f.label().empty() ? "?" : f.label();
  }
  // Stride of factor i in the mixed-radix encoding.
  std::vector<std::int64_t> stride(factors.size(), 1);
  for (std::size_t i = factors.size() - 1; i-- > 0;) {
    stride[i] = stride[i + 1] * sizes[i + 1];
  }
  GraphBuilder b(static_cast<int>(total), label);
  for (std::int64_t idx = 0; idx < total; ++idx) {
    const ProductVertex pv = decode_product_vertex(sizes, idx);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const int c = pv.coords[i];
      for (int d : factors[i].neighbors(c)) {
        if (d > c) {
          b.add_edge(static_cast<int>(idx),
                     static_cast<int>(idx + (d - c) * stride[i]));
        }
      }
    }
  }
  return std::move(b).build();
}

Graph hypercube(int r) {
  if (r < 1) throw InvalidArgument("hypercube dimension must be positive");
  std::vector<Graph> factors(r, complete_graph(2));
  return cartesian_product(factors).with_label("Q" + std::to_string(r));
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  GraphBuilder b(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.adjacent(vertices[i], vertices[j])) {
        b.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return std::move(b).build();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int na = a.num_vertices();
  GraphBuilder out(na + b.num_vertices());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(na + u, na + v);
  return std::move(out).build();
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.num_vertices()) {
    throw InvalidArgument("relabeling has wrong size");
  }
  GraphBuilder b(g.num_vertices(), g.label());
  for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
  return std::move(b).build();
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.num_vertices(), kUnreachable);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : g.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
  std::vector<std::vector<int>> out;
  out.reserve(g.num_vertices());
  for (int u = 0; u < g.num_vertices(); ++u) out.push_back(bfs_distances(g, u));
  return out;
}

bool is_connected(const Graph& g) {
  const auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(),
                      [](int x) { return x == kUnreachable; });
}

bool is_isomorphism(const Graph& g, const Graph& h, std::span<const int> perm) {
  const int n = g.num_vertices();
  if (h.num_vertices() != n || static_cast<int>(perm.size()) != n ||
      g.num_edges() != h.num_edges()) {
    return false;
  }
  std::vector<char> seen(n, 0);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  // Same edge count plus a bijection: preserving edges suffices.
  for (auto [u, v] : g.edges()) {
    if (!h.adjacent(perm[u], perm[v])) return false;
  }
  return true;
}

bool is_automorphism(const Graph& g, std::span<const int> perm) {
  return is_isomorphism(g, g, perm);
}

Graph read_edge_list(std::istream& in, std::string label) {
  std::string line;
  int line_no = 0;
  std::optional<GraphBuilder> builder;
  auto fail = [&](const std::string& what) {
    throw InvalidArgument("edge list line " + std::to_string(line_no) + ": " +
                          what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (!builder) {
      std::string tag;
      long long n = 0;
      if (!(fields >> tag >> n) || tag != "n") fail("expected header 'n <N>'");
      if (n < 1 || n > (1 << 20)) fail("vertex count out of range");
      std::string rest;
      if (fields >> rest) fail("trailing text after header");
      builder.emplace(static_cast<int>(n), label);
      continue;
    }
    long long u = 0;
    long long v = 0;
    if (!(fields >> u >> v)) fail("expected 'u v'");
    std::string rest;
    if (fields >> rest) fail("trailing text after edge");
    try {
      builder->add_edge(static_cast<int>(u), static_cast<int>(v));
    } catch (const InvalidArgument& e) {
      fail(e.what());
    }
  }
  if (!builder) throw InvalidArgument("edge list has no 'n <N>' header");
  return std::move(*builder).build();
}

Graph parse_edge_list(const std::string& text, std::string label) {
  std::istringstream in(text);
  return read_edge_list(in, std::move(label));
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.num_vertices() << '\n';
  if (!g.label().empty()) out << "# " << g.label() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace tokaut
