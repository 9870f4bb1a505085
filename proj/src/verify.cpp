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

#include "tokaut/verify.hpp"

#include <algorithm>
#include <chrono>

#include "json.hpp"
#include "tokaut/constructions.hpp"
#include "tokaut/errors.hpp"

namespace tokaut {

namespace {

using Clock = std::chrono::steady_clock;

bool all_automorphisms(const Graph& g, const std::vector<Permutation>& perms) {
  return std::all_of(perms.begin(), perms.end(), [&](const Permutation& p) {
    return is_automorphism(g, p.images());
  });
}

void check_scale(std::int64_t vertices, const VerifyLimits& limits) {
  if (vertices > limits.max_vertices) {
    throw ScaleLimitExceeded("instance has " + std::to_string(vertices) +
                             " token-graph vertices; limit is " +
                             std::to_string(limits.max_vertices));
  }
}

// Fills the order/containment fields shared by all claims.
void compare_groups(VerificationReport& rep, const AutResult& computed,
                    const PermGroup& generated, const BigInt& predicted) {
  const BigInt computed_order = computed.group.order();
  const BigInt generated_order = generated.order();
  rep.computed_order = computed_order.str();
  rep.generated_order = generated_order.str();
  rep.predicted_order = predicted.str();
  rep.subgroup_certified = is_subgroup(generated, computed.group);
  rep.lagrange = generated_order != 0 && computed_order % generated_order == 0;
  rep.equality = computed_order == predicted && rep.subgroup_certified;
  rep.node_count += computed.node_count;
}

}  // namespace

VerificationReport verify_bipartite(int m, int n, int k,
                                    const VerifyLimits& limits) {
  const auto started = Clock::now();
  const PredictedAut predicted = predicted_order(m, n, k);
  check_scale(binomial(m + n, k), limits);

  VerificationReport rep;
  rep.claim = "bipartite";
  rep.parameters = predicted.parameters;
  rep.structure = to_string(predicted.tag);
  rep.extension = predicted.extension;
  if (predicted.extension) {
    rep.notes.push_back(
        "k at the end of the token range: prediction is |Aut(K_{m,n})| via "
        "F_1(G) = G and the complement isomorphism (extension)");
  }

  const TokenGraph tg = token_graph(complete_bipartite({m, n}), k,
                                    limits.max_vertices);
  rep.token_vertices = tg.num_vertices();
  const SearchLimits search{limits.max_nodes};
  const AutResult computed = automorphism_group(tg.graph, search);
  const AutResult base = automorphism_group(tg.base, search);
  const auto gens = bipartite_generators(tg, m, base.group);
  rep.generators_certified = all_automorphisms(tg.graph, gens);
  const PermGroup generated(gens, tg.num_vertices());
  compare_groups(rep, computed, generated, predicted.order);

  const bool middle = 2 * k == m + n;
  if (middle && !predicted.extension) {
    const Permutation c = complement_automorphism(tg);
    if (m == 2 && n == 2) {
      std::vector<Permutation> lifts;
      for (const auto& g : base.group.generators()) lifts.push_back(iota_lift(g, tg));
      lifts.push_back(c);
      rep.notes.push_back(
          "lifts of Aut(K_{2,2}) with the complement alone generate order " +
          PermGroup(lifts, tg.num_vertices()).order().str());
    } else {
      std::vector<Permutation> rest;
      std::copy_if(gens.begin(), gens.end(), std::back_inserter(rest),
                   [&](const Permutation& p) { return !(p == c); });
      rep.complement_outside =
          !PermGroup(rest, tg.num_vertices()).contains(c);
    }
  }

  rep.passed = rep.generators_certified && rep.subgroup_certified &&
               rep.equality && rep.lagrange &&
               rep.generated_order == rep.predicted_order &&
               rep.complement_outside.value_or(true);
  rep.wall_seconds =
      std::chrono::duration<double>(Clock::now() - started).count();
  return rep;
}

VerificationReport verify_cube(int r, const VerifyLimits& limits) {
  const auto started = Clock::now();
  const PredictedAut predicted = predicted_order_cube(r);
  check_scale(binomial(1 << r, 2), limits);

  VerificationReport rep;
  rep.claim = "cube";
  rep.parameters = predicted.parameters;
  rep.structure = to_string(predicted.tag);

  const std::vector<Graph> factors(r, complete_graph(2));
  const SearchLimits search{limits.max_nodes};
  const ProductSubgroup sub =
      product_subgroup_generators(factors, limits.max_vertices, search);
  rep.token_vertices = sub.token.num_vertices();
  const AutResult computed = automorphism_group(sub.token.graph, search);
  const auto gens = sub.generators();
  rep.generators_certified = all_automorphisms(sub.token.graph, gens);
  const PermGroup generated(gens, sub.token.num_vertices());
  compare_groups(rep, computed, generated, predicted.order);

  const Graph smaller = token_graph(hypercube(r - 1), 2).graph;
  const Graph doubled = hypercube(2 * (r - 1));
  bool slices_ok = true;
  for (int i = 1; i <= r && slices_ok; ++i) {
    const CubeSlices s = cube_slices(r, i);
    slices_ok = is_isomorphic(induced_subgraph(sub.token.graph, s.zeros), smaller) &&
                is_isomorphic(induced_subgraph(sub.token.graph, s.ones), smaller) &&
                is_isomorphic(induced_subgraph(sub.token.graph, s.differing), doubled);
  }
  rep.slices_certified = slices_ok;

  rep.passed = rep.generators_certified && rep.subgroup_certified &&
               rep.equality && rep.lagrange &&
               rep.generated_order == rep.predicted_order && slices_ok;
  rep.wall_seconds =
      std::chrono::duration<double>(Clock::now() - started).count();
  return rep;
}

VerificationReport verify_product(std::span<const Graph> factors,
                                  const VerifyLimits& limits) {
  const auto started = Clock::now();
  const int r = static_cast<int>(factors.size());
  if (r < 2) throw InvalidArgument("product verification needs >= 2 factors");
  std::int64_t n = 1;
  std::string names;
  for (const auto& f : factors) {
    n *= f.num_vertices();
    if (n > (1 << 16)) throw ScaleLimitExceeded("product too large");
    names += (names.empty() ? "" : "+") + (f.label().empty() ? "?" : f.label());
  }
  check_scale(binomial(static_cast<int>(n), 2), limits);

  VerificationReport rep;
  rep.claim = "product";
  rep.parameters = "factors=" + names;
  rep.structure = to_string(StructureTag::kZ2PowSemidirect);

  const SearchLimits search{limits.max_nodes};
  const ProductSubgroup sub =
      product_subgroup_generators(factors, limits.max_vertices, search);
  rep.token_vertices = sub.token.num_vertices();
  const BigInt predicted =
      (BigInt(1) << (r - 1)) * sub.base_aut.group.order();
  const AutResult computed = automorphism_group(sub.token.graph, search);
  const auto gens = sub.generators();
  rep.generators_certified = all_automorphisms(sub.token.graph, gens);
  const PermGroup generated(gens, sub.token.num_vertices());
  compare_groups(rep, computed, generated, predicted);
  rep.conjecture_flag = rep.computed_order == rep.generated_order;
  rep.notes.push_back("|Aut(G)| = " + sub.base_aut.group.order().str() +
                      " from the search on the base graph");

  rep.passed = rep.generators_certified && rep.subgroup_certified &&
               rep.lagrange && rep.generated_order == rep.predicted_order;
  rep.wall_seconds =
      std::chrono::duration<double>(Clock::now() - started).count();
  return rep;
}

std::string to_json(const VerificationReport& rep) {
  nlohmann::ordered_json j;
  j["tool"] = "tokaut";
  j["version"] = kVersion;
  j["claim"] = rep.claim;
  j["parameters"] = rep.parameters;
  j["structure"] = rep.structure;
  j["extension"] = rep.extension;
  j["token_vertices"] = rep.token_vertices;
  j["computed_order"] = rep.computed_order;
  j["predicted_order"] = rep.predicted_order;
  j["generated_order"] = rep.generated_order;
  j["generators_certified"] = rep.generators_certified;
  j["subgroup_certified"] = rep.subgroup_certified;
  j["lagrange"] = rep.lagrange;
  j["equality"] = rep.equality;
  if (rep.complement_outside) j["complement_outside"] = *rep.complement_outside;
  if (rep.slices_certified) j["slices_certified"] = *rep.slices_certified;
  j["conjecture_flag"] = rep.conjecture_flag
                             ? nlohmann::ordered_json(*rep.conjecture_flag)
                             : nlohmann::ordered_json(nullptr);
  j["notes"] = rep.notes;
  j["node_count"] = rep.node_count;
  j["wall_time_s"] = rep.wall_seconds;
  j["passed"] = rep.passed;
  return j.dump();
}

}  // namespace tokaut
