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

#include "tokaut/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "tokaut/errors.hpp"
#include "tokaut/factorization.hpp"

namespace tokaut {

namespace {

template <typename T>
std::set<T> set_xor(const std::set<T>& a, const std::set<T>& b) {
  std::set<T> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::inserter(out, out.end()));
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

void certify_all(const Graph& g, const std::vector<Permutation>& perms,
                 const char* what) {
  for (const auto& p : perms) {
    if (!is_automorphism(g, p.images())) {
      throw std::logic_error(std::string(what) +
                             " produced a non-automorphism: " + p.to_string());
    }
  }
}

void require_base(const TokenGraph& tg, const Graph& expected,
                  const std::string& what) {
  if (!(tg.base == expected)) {
    throw InvalidArgument("token graph base is not " + what);
  }
}

// All (size)-subsets of [lo, hi), each sorted, in colex order.
std::vector<std::vector<int>> subsets_of_range(int lo, int hi, int size) {
  std::vector<std::vector<int>> out;
  const int n = hi - lo;
  for (std::int64_t r = 0; r < binomial(n, size); ++r) {
    auto members = unrank(r, n, size).members;
    for (int& v : members) v += lo;
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace

BipartiteAlpha symmetric_difference(const BipartiteAlpha& a,
                                    const BipartiteAlpha& b) {
  return {set_xor(a.members, b.members)};
}

ProductAlpha symmetric_difference(const ProductAlpha& a, const ProductAlpha& b) {
  return {set_xor(a.factor_indices, b.factor_indices)};
}

std::string to_string(const BipartiteAlpha& alpha) {
  std::string out = "[";
  bool first = true;
  for (const auto& m : alpha.members) {
    if (!first) out += ",";
    first = false;
    out += join(m);
  }
  return out + "]";
}

std::string to_string(const ProductAlpha& alpha) {
  return join({alpha.factor_indices.begin(), alpha.factor_indices.end()});
}

std::string to_string(StructureTag tag) {
  switch (tag) {
    case StructureTag::kWreathK2n: return "WREATH_K2N";
    case StructureTag::kWreathK2nTimesZ2: return "WREATH_K2N_TIMES_Z2";
    case StructureTag::kAutKmn: return "AUT_KMN";
    case StructureTag::kAutKmnTimesZ2: return "AUT_KMN_TIMES_Z2";
    case StructureTag::kZ2TimesS4: return "Z2_TIMES_S4";
    case StructureTag::kZ2PowSemidirect: return "Z2POW_SEMIDIRECT";
    case StructureTag::kCube: return "CUBE";
  }
  return "UNKNOWN";
}

BigInt factorial(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

Permutation iota_lift(const Permutation& phi, const TokenGraph& tg) {
  if (phi.degree() != tg.n() || !is_automorphism(tg.base, phi.images())) {
    throw InvalidArgument("not an automorphism of the base graph: " +
                          phi.to_string());
  }
  std::vector<int> images(tg.num_vertices());
  for (int r = 0; r < tg.num_vertices(); ++r) {
    TokenConfig image;
    for (int v : tg.configs[r].members) image.members.push_back(phi[v]);
    std::sort(image.members.begin(), image.members.end());
    images[r] = tg.index_of(image);
  }
  return Permutation(std::move(images));
}

Permutation complement_automorphism(const TokenGraph& tg) {
  if (2 * tg.k != tg.n()) {
    throw InvalidArgument("complement is an automorphism only when 2k = n");
  }
  return Permutation(complement_map(tg.n(), tg.k));
}

Permutation phi_alpha_bipartite(const TokenGraph& tg,
                                const BipartiteAlpha& alpha) {
  const int n = tg.n() - 2;
  if (n < 1) throw InvalidArgument("base graph is not K_{2,n}");
  require_base(tg, complete_bipartite({2, n}), "K_{2,n}");
  for (const auto& member : alpha.members) {
    if (static_cast<int>(member.size()) != tg.k - 1 ||
        !std::is_sorted(member.begin(), member.end()) ||
        std::adjacent_find(member.begin(), member.end()) != member.end() ||
        std::any_of(member.begin(), member.end(),
                    [&](int v) { return v < 2 || v >= n + 2; })) {
      throw InvalidArgument("alpha member " + join(member) +
                            " is not a sorted " + std::to_string(tg.k - 1) +
                            "-subset of Y");
    }
  }
  std::vector<int> images(tg.num_vertices());
  for (int r = 0; r < tg.num_vertices(); ++r) {
    const auto& members = tg.configs[r].members;
    const auto y_begin = std::find_if(members.begin(), members.end(),
                                      [](int v) { return v >= 2; });
    const auto x_count = y_begin - members.begin();
    const std::vector<int> y_part(y_begin, members.end());
    if (x_count == 1 && alpha.members.count(y_part)) {
      TokenConfig swapped{{1 - members.front()}};
      swapped.members.insert(swapped.members.end(), y_part.begin(), y_part.end());
      images[r] = tg.index_of(swapped);
    } else {
      images[r] = r;
    }
  }
  return Permutation(std::move(images));
}

Permutation psi_pi(const TokenGraph& tg, const Permutation& pi) {
  if (pi.degree() != tg.n()) {
    throw InvalidArgument("pi must act on the base vertex set");
  }
  if (pi[0] != 0 || pi[1] != 1) throw InvalidArgument("pi moves X");
  return iota_lift(pi, tg);
}

std::vector<LabeledGenerator> labeled_bipartite_generators(
    const TokenGraph& tg, int m, const PermGroup& base_aut) {
  const int n = tg.n() - m;
  const int k = tg.k;
  if (m < 1 || n < m) throw InvalidArgument("need 1 <= m <= n");
  require_base(tg, complete_bipartite({m, n}), "K_{m,n}");
  if (base_aut.degree() != m + n) {
    throw InvalidArgument("base automorphism group has the wrong degree");
  }
  const bool endpoint = k == 1 || k == m + n - 1;
  const bool middle = 2 * k == m + n;
  std::vector<LabeledGenerator> gens;
  auto add_lifts = [&] {
    for (const auto& g : base_aut.generators()) {
      gens.push_back({"lift", g.to_string(), iota_lift(g, tg)});
    }
  };
  auto add_singleton_swaps = [&] {
    for (auto& s : subsets_of_range(2, n + 2, k - 1)) {
      BipartiteAlpha alpha;
      alpha.members.insert(std::move(s));
      gens.push_back({"swap", to_string(alpha), phi_alpha_bipartite(tg, alpha)});
    }
  };
  auto add_psi = [&](const Permutation& pi) {
    gens.push_back({"lift", pi.to_string(), psi_pi(tg, pi)});
  };
  if (endpoint) {
    add_lifts();
  } else if (m == 2 && n == 2) {
    add_singleton_swaps();
    add_lifts();
  } else if (m == 2) {
    add_singleton_swaps();
    std::vector<int> cycle(n);
    std::iota(cycle.begin(), cycle.end(), 2);
    add_psi(from_cycles(m + n, {{2, 3}}));
    add_psi(from_cycles(m + n, {cycle}));
  } else {
    add_lifts();
  }
  if (middle) gens.push_back({"complement", "", complement_automorphism(tg)});
  std::vector<Permutation> perms;
  for (const auto& g : gens) perms.push_back(g.perm);
  certify_all(tg.graph, perms, "bipartite_generators");
  return gens;
}

std::vector<Permutation> bipartite_generators(const TokenGraph& tg, int m,
                                              const PermGroup& base_aut) {
  std::vector<Permutation> perms;
  for (auto& g : labeled_bipartite_generators(tg, m, base_aut)) {
    perms.push_back(std::move(g.perm));
  }
  return perms;
}

std::vector<Permutation> bipartite_generators(const TokenGraph& tg, int m) {
  const int n = tg.n() - m;
  if (m < 1 || n < m) throw InvalidArgument("need 1 <= m <= n");
  const auto aut = automorphism_group(complete_bipartite({m, n}));
  return bipartite_generators(tg, m, aut.group);
}

PredictedAut predicted_order(int m, int n, int k) {
  if (m < 1 || n < m) throw InvalidArgument("need 1 <= m <= n");
  if (k < 1 || k > m + n - 1) {
    throw InvalidArgument("k=" + std::to_string(k) + " outside 1.." +
                          std::to_string(m + n - 1));
  }
  PredictedAut out;
  out.parameters = "m=" + std::to_string(m) + ",n=" + std::to_string(n) +
                   ",k=" + std::to_string(k);
  const BigInt aut_kmn = factorial(m) * factorial(n) * (m == n ? 2 : 1);
  const bool middle = 2 * k == m + n;
  if (k == 1 || k == m + n - 1) {
    out.order = aut_kmn;
    out.tag = StructureTag::kAutKmn;
    out.extension = true;
  } else if (m == 2 && n == 2) {
    out.order = 48;
    out.tag = StructureTag::kZ2TimesS4;
  } else if (m == 2) {
    const auto exponent = binomial(n, k - 1);
    out.order = (BigInt(1) << static_cast<unsigned>(exponent)) * factorial(n) *
                (middle ? 2 : 1);
    out.tag = middle ? StructureTag::kWreathK2nTimesZ2 : StructureTag::kWreathK2n;
  } else {
    out.order = aut_kmn * (middle ? 2 : 1);
    out.tag = middle ? StructureTag::kAutKmnTimesZ2 : StructureTag::kAutKmn;
  }
  return out;
}

std::set<int> action_phi(const Permutation& pi, const std::set<int>& subset,
                         int n) {
  if (pi.degree() != n) throw InvalidArgument("pi must have degree n");
  const Permutation inv = inverse(pi);
  std::set<int> preimage;
  for (int x : subset) {
    if (x < 1 || x > n - 1) {
      throw InvalidArgument("subset element " + std::to_string(x) +
                            " outside 1.." + std::to_string(n - 1));
    }
    preimage.insert(inv[x - 1] + 1);
  }
  if (!preimage.count(n)) return preimage;
  std::set<int> complement;
  for (int i = 1; i <= n; ++i) {
    if (!preimage.count(i)) complement.insert(i);
  }
  return complement;
}

Permutation phi_alpha_product(std::span<const Graph> factors,
                              const TokenGraph& tg, const ProductAlpha& alpha) {
  const int r = static_cast<int>(factors.size());
  if (r < 2) throw InvalidArgument("need at least two factors");
  if (tg.k != 2) throw InvalidArgument("coordinate swaps act on F_2 only");
  for (int i : alpha.factor_indices) {
    if (i < 1 || i > r - 1) {
      throw InvalidArgument("alpha index " + std::to_string(i) +
                            " outside 1.." + std::to_string(r - 1));
    }
  }
  std::vector<int> sizes;
  for (const auto& f : factors) sizes.push_back(f.num_vertices());
  require_base(tg, cartesian_product(factors), "the product of the factors");
  std::vector<int> images(tg.num_vertices());
  for (int v = 0; v < tg.num_vertices(); ++v) {
    ProductVertex x = decode_product_vertex(sizes, tg.configs[v].members[0]);
    ProductVertex y = decode_product_vertex(sizes, tg.configs[v].members[1]);
    for (int i : alpha.factor_indices) std::swap(x.coords[i - 1], y.coords[i - 1]);
    const auto a = static_cast<int>(encode_product_vertex(sizes, x));
    const auto b = static_cast<int>(encode_product_vertex(sizes, y));
    images[v] = tg.index_of(TokenConfig{{std::min(a, b), std::max(a, b)}});
  }
  return Permutation(std::move(images));
}

std::vector<Permutation> ProductSubgroup::generators() const {
  std::vector<Permutation> out = swaps;
  out.insert(out.end(), lifts.begin(), lifts.end());
  return out;
}

ProductSubgroup product_subgroup_generators(std::span<const Graph> factors,
                                            std::int64_t max_vertices,
                                            const SearchLimits& limits) {
  const int r = static_cast<int>(factors.size());
  if (r < 2) throw InvalidArgument("need at least two factors");
  for (const auto& f : factors) {
    if (f.num_vertices() < 2 || !is_connected(f) || !is_prime(f)) {
      throw InvalidArgument("factor " + f.label() +
                            " is not a connected prime graph");
    }
  }
  const Graph g = cartesian_product(factors);
  ProductSubgroup out{token_graph(g, 2, max_vertices),
                      automorphism_group(g, limits), {}, {}};
  for (int i = 1; i < r; ++i) {
    out.swaps.push_back(phi_alpha_product(factors, out.token, ProductAlpha{{i}}));
  }
  for (const auto& p : out.base_aut.group.generators()) {
    out.lifts.push_back(iota_lift(p, out.token));
  }
  certify_all(out.token.graph, out.generators(), "product_subgroup_generators");
  return out;
}

PredictedAut predicted_order_cube(int r) {
  if (r < 3) throw InvalidArgument("cube prediction needs r >= 3");
  PredictedAut out;
  out.order = (BigInt(1) << (2 * r - 1)) * factorial(r);
  out.tag = StructureTag::kCube;
  out.parameters = "r=" + std::to_string(r);
  return out;
}

std::vector<std::vector<int>> h_partition(const BipartiteSpec& spec, int k) {
  if (spec.m < 1 || spec.n < 1) throw InvalidArgument("bad bipartite sides");
  const int total = spec.m + spec.n;
  if (k < 1 || k > total - 1) throw InvalidArgument("k out of range");
  std::vector<std::vector<int>> out(std::min(spec.m, k) + 1);
  for (std::int64_t r = 0; r < binomial(total, k); ++r) {
    const auto a = unrank(r, total, k);
    const auto in_x = std::count_if(a.members.begin(), a.members.end(),
                                    [&](int v) { return spec.in_x(v); });
    out[in_x].push_back(static_cast<int>(r));
  }
  return out;
}

CubeSlices cube_slices(int r, int i) {
  if (r < 1 || i < 1 || i > r) throw InvalidArgument("slice index out of range");
  const int n = 1 << r;
  const int bit = r - i;
  CubeSlices out;
  for (std::int64_t v = 0; v < binomial(n, 2); ++v) {
    const auto a = unrank(v, n, 2);
    const int xi = (a.members[0] >> bit) & 1;
    const int yi = (a.members[1] >> bit) & 1;
    auto& slice = xi != yi ? out.differing : (xi ? out.ones : out.zeros);
    slice.push_back(static_cast<int>(v));
  }
  return out;
}

}  // namespace tokaut
