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

#ifndef TOKAUT_GRAPH_HPP_
#define TOKAUT_GRAPH_HPP_

#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tokaut/errors.hpp"

namespace tokaut {

// Simple undirected graph on vertices 0..n-1 stored as dense adjacency rows
// (one bit per vertex pair). Immutable once built; use GraphBuilder to
// construct one.
class Graph {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  Graph() = default;

  int num_vertices() const { return n_; }
  std::int64_t num_edges() const { return num_edges_; }
  const std::string& label() const { return label_; }

  bool adjacent(int u, int v) const {
    return (row(u)[v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  int degree(int u) const { return static_cast<int>(neighbors_[u].size()); }

  // Bit row of u; words_per_row() words, bits past n are zero.
  std::span<const Word> row(int u) const {
    return {bits_.data() + static_cast<std::size_t>(u) * words_,
            static_cast<std::size_t>(words_)};
  }
  int words_per_row() const { return words_; }

  // Neighbors of u in increasing order.
  std::span<const int> neighbors(int u) const { return neighbors_[u]; }

  // All edges {u, v} with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  std::vector<int> degree_sequence() const;

  // Copy with a new provenance label.
  Graph with_label(std::string label) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  friend class GraphBuilder;

  int n_ = 0;
  int words_ = 0;
  std::int64_t num_edges_ = 0;
  std::vector<Word> bits_;
  std::vector<std::vector<int>> neighbors_;
  std::string label_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n, std::string label = {});

  // Adds the undirected edge {u, v}. Loops and out-of-range ids throw
  // InvalidArgument; repeated edges are ignored.
  GraphBuilder& add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  Graph build() &&;

 private:
  Graph g_;
};

// Vertex coordinates inside a Cartesian product, one entry per factor.
struct ProductVertex {
  std::vector<int> coords;
  friend bool operator==(const ProductVertex&, const ProductVertex&) = default;
};

// Complete bipartite K_{m,n} with X = {0..m-1} and Y = {m..m+n-1}.
struct BipartiteSpec {
  int m = 0;
  int n = 0;
  int num_vertices() const { return m + n; }
  bool in_x(int v) const { return v < m; }
};

Graph complete_graph(int n);
Graph complete_bipartite(const BipartiteSpec& spec);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);  // K_{1,n}: center 0, leaves 1..n
Graph empty_graph(int n);

// Mixed-radix encoding: factor 0 is the most significant digit.
Graph cartesian_product(std::span<const Graph> factors);
ProductVertex decode_product_vertex(std::span<const int> factor_sizes,
                                    std::int64_t index);
std::int64_t encode_product_vertex(std::span<const int> factor_sizes,
                                   const ProductVertex& v);

// Q_r = K_2 x ... x K_2; vertex index bit (r-1-i) is coordinate i.
Graph hypercube(int r);

Graph induced_subgraph(const Graph& g, std::span<const int> vertices);
Graph disjoint_union(const Graph& a, const Graph& b);
// Relabels g so that vertex v of g becomes vertex perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// Hop distances by BFS; kUnreachable for pairs in different components.
std::vector<std::vector<int>> distance_matrix(const Graph& g);
std::vector<int> bfs_distances(const Graph& g, int source);
bool is_connected(const Graph& g);

// True iff perm is a bijection of V(g) preserving adjacency and
// non-adjacency.
bool is_automorphism(const Graph& g, std::span<const int> perm);
// True iff perm maps g onto h (perm[v] is the image in h of v in g).
bool is_isomorphism(const Graph& g, const Graph& h, std::span<const int> perm);

// Certified isomorphism test. Returns a bijection f with u~v in g iff
// f(u)~f(v) in h, or nullopt when the graphs are not isomorphic.
std::optional<std::vector<int>> is_isomorphic(const Graph& g, const Graph& h);

// Edge-list text format: "n <N>" followed by one "u v" line per edge;
// '#' starts a comment line.
Graph read_edge_list(std::istream& in, std::string label = {});
Graph parse_edge_list(const std::string& text, std::string label = {});
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

}  // namespace tokaut

#endif  // TOKAUT_GRAPH_HPP_
