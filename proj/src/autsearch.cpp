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

// Individualization-refinement search in the style of McKay's first-path
// algorithm. The partition lives in one array; a cell is a contiguous range
// named by its start position. All decisions (cell order, target cell,
// fragment order) depend only on positions and invariant values, never on
// vertex labels, so refinement commutes with relabeling. That is what lets
// leaves of two search nodes be compared position by position.

#include "tokaut/autsearch.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <map>
#include <numeric>
#include <optional>

#include "tokaut/errors.hpp"

namespace tokaut {

OrderedPartition OrderedPartition::unit(int n) {
  OrderedPartition p;
  p.cells.emplace_back(n);
  std::iota(p.cells[0].begin(), p.cells[0].end(), 0);
  return p;
}

bool OrderedPartition::is_discrete() const {
  return std::all_of(cells.begin(), cells.end(),
                     [](const auto& c) { return c.size() == 1; });
}

namespace {

void mix(std::uint64_t& h, std::uint64_t x) {
  // splitmix64 finalizer folded into a running hash.
  x += 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  h ^= x ^ (x >> 31);
}

struct Partition {
  std::vector<int> elems;     // position -> vertex
  std::vector<int> cell_of;   // vertex -> start of its cell
  std::vector<int> cell_end;  // start -> one past the cell's last position
  int num_cells = 0;

  int size_of(int start) const { return cell_end[start] - start; }
  bool discrete() const {
    return num_cells == static_cast<int>(elems.size());
  }
  // First smallest non-singleton cell, by position.
  int target_cell() const {
    int best = -1;
    int best_size = 0;
    for (int s = 0; s < static_cast<int>(elems.size()); s = cell_end[s]) {
      const int size = size_of(s);
      if (size > 1 && (best < 0 || size < best_size)) {
        best = s;
        best_size = size;
      }
    }
    return best;
  }
  std::vector<int> sorted_cell(int start) const {
    std::vector<int> out(elems.begin() + start, elems.begin() + cell_end[start]);
    std::sort(out.begin(), out.end());
    return out;
  }
};

struct Node {
  Partition part;
  std::uint64_t trace = 0;
};

bool same_shape(const Node& a, const Node& b) {
  return a.trace == b.trace && a.part.num_cells == b.part.num_cells;
}

class Refiner {
 public:
  explicit Refiner(const Graph& g)
      : g_(g),
        count_(g.num_vertices(), 0),
        cell_mark_(g.num_vertices(), 0),
        in_queue_(g.num_vertices(), 0) {}

  const Graph& graph() const { return g_; }

  // Builds the root partition from `cells`, split by seed invariants.
  Node root(const OrderedPartition& input, SeedInvariants seed) {
    const int n = g_.num_vertices();
    std::vector<std::vector<int>> keys(n);
    if (seed == SeedInvariants::kDegreeAndDistances) {
      for (int v = 0; v < n; ++v) {
        const auto dist = bfs_distances(g_, v);
        std::map<int, int> histogram;
        for (int d : dist) ++histogram[d];
        keys[v].push_back(g_.degree(v));
        for (auto [d, c] : histogram) {
          keys[v].push_back(d);
          keys[v].push_back(c);
        }
      }
    }
    Node node;
    Partition& p = node.part;
    p.cell_of.assign(n, -1);
    p.cell_end.assign(n, 0);
    std::vector<int> starts;
    for (const auto& cell : input.cells) {
      if (cell.empty()) throw InvalidArgument("partition has an empty cell");
      std::vector<int> sorted = cell;
      std::stable_sort(sorted.begin(), sorted.end(),
                       [&](int a, int b) { return keys[a] < keys[b]; });
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        const int v = sorted[i];
        if (v < 0 || v >= n || p.cell_of[v] != -1) {
          throw InvalidArgument("cells do not partition the vertex set");
        }
        p.cell_of[v] = 0;
        if (i == 0 || keys[sorted[i - 1]] != keys[v]) {
          starts.push_back(static_cast<int>(p.elems.size()));
          mix(node.trace, p.elems.size());
          for (int x : keys[v]) mix(node.trace, static_cast<std::uint64_t>(x));
        }
        p.elems.push_back(v);
      }
    }
    if (static_cast<int>(p.elems.size()) != n) {
      throw InvalidArgument("cells do not cover the vertex set");
    }
    for (std::size_t c = 0; c < starts.size(); ++c) {
      const int s = starts[c];
      const int e = c + 1 < starts.size() ? starts[c + 1] : n;
      p.cell_end[s] = e;
      for (int pos = s; pos < e; ++pos) p.cell_of[p.elems[pos]] = s;
    }
    p.num_cells = static_cast<int>(starts.size());
    mix(node.trace, refine(p, starts));
    return node;
  }

  // Child of `parent` with vertex v individualized and refined.
  Node individualize(const Node& parent, int v) {
    Node child{parent.part, 0};
    Partition& p = child.part;
    const int start = p.cell_of[v];
    const int end = p.cell_end[start];
    auto it = std::find(p.elems.begin() + start, p.elems.begin() + end, v);
    std::iter_swap(p.elems.begin() + start, it);
    p.cell_end[start] = start + 1;
    p.cell_end[start + 1] = end;
    for (int pos = start + 1; pos < end; ++pos) p.cell_of[p.elems[pos]] = start + 1;
    ++p.num_cells;
    mix(child.trace, static_cast<std::uint64_t>(start));
    mix(child.trace, refine(p, {start}));
    return child;
  }

 private:
  std::uint64_t refine(Partition& p, const std::vector<int>& splitters) {
    std::uint64_t h = 0;
    std::deque<int> queue;
    for (int s : splitters) {
      queue.push_back(s);
      in_queue_[s] = 1;
    }
    std::vector<int> touched;
    std::vector<int> touched_cells;
    while (!queue.empty()) {
      const int s = queue.front();
      queue.pop_front();
      in_queue_[s] = 0;
      const int e = p.cell_end[s];
      for (int q = s; q < e; ++q) {
        for (int v : g_.neighbors(p.elems[q])) {
          if (count_[v]++ == 0) touched.push_back(v);
        }
      }
      for (int v : touched) {
        const int c = p.cell_of[v];
        if (!cell_mark_[c]) {
          cell_mark_[c] = 1;
          touched_cells.push_back(c);
        }
      }
      std::sort(touched_cells.begin(), touched_cells.end());
      for (int c : touched_cells) {
        const int ce = p.cell_end[c];
        mix(h, static_cast<std::uint64_t>(s) << 32 | static_cast<std::uint32_t>(c));
        if (ce - c == 1) {
          mix(h, static_cast<std::uint64_t>(count_[p.elems[c]]));
          continue;
        }
        std::sort(p.elems.begin() + c, p.elems.begin() + ce, [&](int a, int b) {
          return count_[a] != count_[b] ? count_[a] < count_[b] : a < b;
        });
        // Fragment starts.
        std::vector<int> frags{c};
        for (int q = c + 1; q < ce; ++q) {
          if (count_[p.elems[q]] != count_[p.elems[q - 1]]) frags.push_back(q);
        }
        for (std::size_t f = 0; f < frags.size(); ++f) {
          const int fs = frags[f];
          const int fe = f + 1 < frags.size() ? frags[f + 1] : ce;
          mix(h, static_cast<std::uint64_t>(count_[p.elems[fs]]));
          mix(h, static_cast<std::uint64_t>(fe - fs));
        }
        if (frags.size() == 1) continue;
        int largest = c;
        for (std::size_t f = 0; f < frags.size(); ++f) {
          const int fs = frags[f];
          const int fe = f + 1 < frags.size() ? frags[f + 1] : ce;
          p.cell_end[fs] = fe;
          for (int q = fs; q < fe; ++q) p.cell_of[p.elems[q]] = fs;
          if (fe - fs > p.cell_end[largest] - largest) largest = fs;
        }
        p.num_cells += static_cast<int>(frags.size()) - 1;
        const bool was_queued = in_queue_[c];
        for (int fs : frags) {
          if (fs == c && was_queued) continue;
          if (!was_queued && fs == largest) continue;
          queue.push_back(fs);
          in_queue_[fs] = 1;
        }
      }
      for (int v : touched) count_[v] = 0;
      for (int c : touched_cells) cell_mark_[c] = 0;
      touched.clear();
      touched_cells.clear();
    }
    return h;
  }

  const Graph& g_;
  std::vector<int> count_;
  std::vector<char> cell_mark_;
  std::vector<char> in_queue_;
};

// Walks the first path of the reference graph, then answers "is there a
// leaf below this target-graph node that matches the first leaf?".
class LeafMatcher {
 public:
  LeafMatcher(Refiner& ref, Refiner& target, std::int64_t max_nodes,
              std::int64_t& nodes)
      : ref_(ref), target_(target), max_nodes_(max_nodes), nodes_(nodes) {}

  void build_first_path(Node root) {
    path_.clear();
    chosen_.clear();
    path_.push_back(std::move(root));
    while (!path_.back().part.discrete()) {
      const Partition& p = path_.back().part;
      const int v = p.sorted_cell(p.target_cell()).front();
      chosen_.push_back(v);
      Node child = ref_.individualize(path_.back(), v);
      count_node();
      path_.push_back(std::move(child));
    }
  }

  const std::vector<Node>& path() const { return path_; }
  const std::vector<int>& chosen() const { return chosen_; }

  Node child(const Node& parent, int v) {
    count_node();
    return target_.individualize(parent, v);
  }

  // `node` is a target-graph node at depth `depth` whose invariants equal
  // those of path()[depth].
  std::optional<std::vector<int>> match(const Node& node, std::size_t depth) {
    if (node.part.discrete()) {
      const Partition& leaf = path_.back().part;
      const int n = static_cast<int>(leaf.elems.size());
      std::vector<int> perm(n);
      for (int q = 0; q < n; ++q) perm[leaf.elems[q]] = node.part.elems[q];
      if (is_isomorphism(ref_.graph(), target_.graph(), perm)) return perm;
      return std::nullopt;
    }
    const int cell = path_[depth].part.target_cell();
    for (int u : node.part.sorted_cell(cell)) {
      Node next = child(node, u);
      if (!same_shape(next, path_[depth + 1])) continue;
      if (auto found = match(next, depth + 1)) return found;
    }
    return std::nullopt;
  }

 private:
  void count_node() {
    if (++nodes_ > max_nodes_) {
      throw ScaleLimitExceeded("automorphism search exceeded " +
                               std::to_string(max_nodes_) + " nodes");
    }
  }

  Refiner& ref_;
  Refiner& target_;
  std::int64_t max_nodes_;
  std::int64_t& nodes_;
  std::vector<Node> path_;
  std::vector<int> chosen_;
};

class Orbits {
 public:
  explicit Orbits(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  void merge(std::span<const int> perm) {
    for (int v = 0; v < static_cast<int>(perm.size()); ++v) {
      const int a = find(v);
      const int b = find(perm[v]);
      if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

OrderedPartition refine(const Graph& g, const OrderedPartition& partition,
                        SeedInvariants seed) {
  Refiner refiner(g);
  const Node node = refiner.root(partition, seed);
  OrderedPartition out;
  const Partition& p = node.part;
  for (int s = 0; s < g.num_vertices(); s = p.cell_end[s]) {
    out.cells.push_back(p.sorted_cell(s));
  }
  return out;
}

AutResult automorphism_group(const Graph& g, const SearchLimits& limits) {
  const auto started = std::chrono::steady_clock::now();
  const int n = g.num_vertices();
  Refiner refiner(g);
  std::int64_t nodes = 1;
  LeafMatcher matcher(refiner, refiner, limits.max_nodes, nodes);
  matcher.build_first_path(refiner.root(OrderedPartition::unit(n),
                                        SeedInvariants::kDegreeAndDistances));
  const auto& path = matcher.path();
  const auto& chosen = matcher.chosen();

  std::vector<Permutation> gens;
  // Deepest level first: generators found so far fix the current prefix,
  // so their orbits are orbits of the prefix stabilizer.
  for (std::size_t depth = chosen.size(); depth-- > 0;) {
    Orbits orbits(n);
    for (const auto& p : gens) orbits.merge(p.images());
    const int v = chosen[depth];
    std::vector<int> failed;
    for (int w : path[depth].part.sorted_cell(path[depth].part.target_cell())) {
      if (w == v || orbits.find(w) == orbits.find(v)) continue;
      if (std::any_of(failed.begin(), failed.end(), [&](int f) {
            return orbits.find(f) == orbits.find(w);
          })) {
        continue;
      }
      Node next = matcher.child(path[depth], w);
      std::optional<std::vector<int>> found;
      if (same_shape(next, path[depth + 1])) found = matcher.match(next, depth + 1);
      if (!found) {
        failed.push_back(w);
        continue;
      }
      orbits.merge(*found);
      gens.emplace_back(std::move(*found));
    }
  }
  for (const auto& p : gens) {
    if (!is_automorphism(g, p.images())) {
      throw std::logic_error("search produced a non-automorphism");
    }
  }
  AutResult result{PermGroup(std::move(gens), n), nodes, 0.0};
  result.wall_seconds = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - started)
                            .count();
  return result;
}

std::optional<std::vector<int>> is_isomorphic(const Graph& g, const Graph& h) {
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) {
    return std::nullopt;
  }
  auto dg = g.degree_sequence();
  auto dh = h.degree_sequence();
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return std::nullopt;

  const int n = g.num_vertices();
  Refiner ref(g);
  Refiner target(h);
  std::int64_t nodes = 1;
  LeafMatcher matcher(ref, target, SearchLimits{}.max_nodes, nodes);
  const auto unit = OrderedPartition::unit(n);
  matcher.build_first_path(ref.root(unit, SeedInvariants::kDegreeAndDistances));
  const Node root = target.root(unit, SeedInvariants::kDegreeAndDistances);
  if (!same_shape(root, matcher.path().front())) return std::nullopt;
  return matcher.match(root, 0);
}

}  // namespace tokaut
