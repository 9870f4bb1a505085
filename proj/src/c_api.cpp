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


#include "tokaut/tokaut.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <string>

#include "json.hpp"
#include "tokaut/autsearch.hpp"
#include "tokaut/constructions.hpp"
#include "tokaut/errors.hpp"
#include "tokaut/factorization.hpp"
#include "tokaut/specifier.hpp"
#include "tokaut/token.hpp"
#include "tokaut/verify.hpp"

struct tka_graph {
  tokaut::Graph graph;
};

struct tka_factorization {
  tokaut::Factorization value;
  std::vector<tka_graph> factors;
};

namespace {

using nlohmann::ordered_json;

thread_local std::string last_error;

tka_status fail(tka_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
tka_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const tokaut::ScaleLimitExceeded& e) {
    return fail(TKA_ERR_SCALE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(TKA_ERR_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(TKA_ERR_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(TKA_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TKA_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

tokaut::VerifyLimits to_limits(const tka_limits* limits) {
  tokaut::VerifyLimits out;
  if (limits != nullptr) {
    if (limits->max_vertices < 1 || limits->max_nodes < 1) {
      throw tokaut::InvalidArgument("limits must be positive");
    }
    out.max_vertices = limits->max_vertices;
    out.max_nodes = limits->max_nodes;
  }
  return out;
}

ordered_json permutation_list(const std::vector<tokaut::Permutation>& perms) {
  ordered_json list = ordered_json::array();
  for (const auto& p : perms) list.push_back(p.images());
  return list;
}

ordered_json report_header() {
  ordered_json j;
  j["tool"] = "tokaut";
  j["version"] = tokaut::kVersion;
  return j;
}

tka_status emit_verification(const tokaut::VerificationReport& report,
                             char** json) {
  *json = copy_string(tokaut::to_json(report));
  if (!report.passed) {
    return fail(TKA_ERR_VERIFY, "verification failed for " + report.claim +
                                    " " + report.parameters);
  }
  return TKA_OK;
}

bool null_arg(const void* p, const char* name) {
  if (p == nullptr) {
    last_error = std::string(name) + " must not be NULL";
    return true;
  }
  return false;
}

}  // namespace

extern "C" {

const char* tka_version(void) { return tokaut::kVersion; }

const char* tka_last_error(void) { return last_error.c_str(); }

void tka_string_free(char* s) { std::free(s); }

tka_limits tka_default_limits(void) {
  const tokaut::VerifyLimits d;
  return {d.max_vertices, d.max_nodes};
}

tka_status tka_graph_from_specifier(const char* spec, tka_graph** out) {
  if (null_arg(spec, "spec") || null_arg(out, "out")) return TKA_ERR_ARGUMENT;
  return guarded([&] {
    *out = new tka_graph{tokaut::parse_graph_specifier(spec)};
    return TKA_OK;
  });
}

tka_status tka_graph_from_edge_list(const char* text, tka_graph** out) {
  if (null_arg(text, "text") || null_arg(out, "out")) return TKA_ERR_ARGUMENT;
  return guarded([&] {
    *out = new tka_graph{tokaut::parse_edge_list(text)};
    return TKA_OK;
  });
}

tka_status tka_graph_read_file(const char* path, tka_graph** out) {
  if (null_arg(path, "path") || null_arg(out, "out")) return TKA_ERR_ARGUMENT;
  return guarded([&] {
    std::ifstream in(path);
    if (!in) return fail(TKA_ERR_IO, std::string("cannot open ") + path);
    *out = new tka_graph{tokaut::read_edge_list(in, path)};
    return TKA_OK;
  });
}

void tka_graph_free(tka_graph* g) { delete g; }

int tka_graph_num_vertices(const tka_graph* g) {
  return g == nullptr ? 0 : g->graph.num_vertices();
}

int64_t tka_graph_num_edges(const tka_graph* g) {
  return g == nullptr ? 0 : g->graph.num_edges();
}

tka_status tka_graph_to_edge_list(const tka_graph* g, char** out) {
  if (null_arg(g, "graph") || null_arg(out, "out")) return TKA_ERR_ARGUMENT;
  return guarded([&] {
    *out = copy_string(tokaut::to_edge_list(g->graph));
    return TKA_OK;
  });
}

tka_status tka_graph_is_isomorphic(const tka_graph* g, const tka_graph* h,
                                   int* isomorphic) {
  if (null_arg(g, "g") || null_arg(h, "h") || null_arg(isomorphic, "out")) {
    return TKA_ERR_ARGUMENT;
  }
  return guarded([&] {
    *isomorphic = tokaut::is_isomorphic(g->graph, h->graph).has_value() ? 1 : 0;
    return TKA_OK;
  });
}

tka_status tka_token_graph(const tka_graph* base, int k,
                           const tka_limits* limits, tka_graph** out,
                           char** mapping) {
  if (null_arg(base, "base") || null_arg(out, "out")) return TKA_ERR_ARGUMENT;
  return guarded([&] {
    const auto lim = to_limits(limits);
    const auto tg = tokaut::token_graph(base->graph, k, lim.max_vertices);
    auto graph = std::make_unique<tka_graph>(tka_graph{tg.graph});
    if (mapping != nullptr) *mapping = copy_string(tokaut::rank_mapping_text(tg));
    *out = graph.release();
    return TKA_OK;
  });
}

tka_status tka_automorphism_report(const tka_graph* g, const tka_limits* limits,
                                   char** json) {
  if (null_arg(g, "graph") || null_arg(json, "json")) return TKA_ERR_ARGUMENT;
  return guarded([&] {
    const auto lim = to_limits(limits);
    const auto result = tokaut::automorphism_group(g->graph, {lim.max_nodes});
    ordered_json j = report_header();
    j["graph"] = g->graph.label();
    j["vertices"] = g->graph.num_vertices();
    j["edges"] = g->graph.num_edges();
    j["order"] = result.group.order().str();
    j["base"] = result.group.base();
    j["generators"] = permutation_list(result.group.generators());
    j["node_count"] = result.node_count;
    j["wall_time_s"] = result.wall_seconds;
    *json = copy_string(j.dump());
    return TKA_OK;
  });
}

tka_status tka_bipartite_generators_report(int m, int n, int k,
                                           const tka_limits* limits,
                                           char** json) {
  if (null_arg(json, "json")) return TKA_ERR_ARGUMENT;
  return guarded([&] {
    const auto lim = to_limits(limits);
    const auto predicted = tokaut::predicted_order(m, n, k);
    const auto tg = tokaut::token_graph(tokaut::complete_bipartite({m, n}), k,
                                        lim.max_vertices);
    const auto base = tokaut::automorphism_group(tg.base, {lim.max_nodes});
    const auto gens = tokaut::labeled_bipartite_generators(tg, m, base.group);
    std::vector<tokaut::Permutation> perms;
    ordered_json list = ordered_json::array();
    for (const auto& g : gens) {
      perms.push_back(g.perm);
      list.push_back({{"kind", g.kind}, {"detail", g.detail},
                      {"images", g.perm.images()}});
    }
    ordered_json j = report_header();
    j["parameters"] = predicted.parameters;
    j["structure"] = tokaut::to_string(predicted.tag);
    j["extension"] = predicted.extension;
    j["token_vertices"] = tg.num_vertices();
    j["predicted_order"] = predicted.order.str();
    j["generated_order"] =
        tokaut::PermGroup(perms, tg.num_vertices()).order().str();
    j["generators"] = std::move(list);
    *json = copy_string(j.dump());
    return TKA_OK;
  });
}

tka_status tka_product_generators_report(const char* factors,
                                         const tka_limits* limits,
                                         char** json) {
  if (null_arg(factors, "factors") || null_arg(json, "json")) {
    return TKA_ERR_ARGUMENT;
  }
  return guarded([&] {
    const auto lim = to_limits(limits);
    const auto list = tokaut::parse_factor_list(factors);
    const auto sub = tokaut::product_subgroup_generators(
        list, lim.max_vertices, {lim.max_nodes});
    const int r = static_cast<int>(list.size());
    ordered_json gens = ordered_json::array();
    for (std::size_t i = 0; i < sub.swaps.size(); ++i) {
      tokaut::ProductAlpha alpha;
      alpha.factor_indices.insert(static_cast<int>(i) + 1);
      gens.push_back({{"kind", "swap"}, {"detail", tokaut::to_string(alpha)},
                      {"images", sub.swaps[i].images()}});
    }
    const auto& base_gens = sub.base_aut.group.generators();
    for (std::size_t i = 0; i < sub.lifts.size(); ++i) {
      gens.push_back({{"kind", "lift"}, {"detail", base_gens[i].to_string()},
                      {"images", sub.lifts[i].images()}});
    }
    ordered_json j = report_header();
    j["parameters"] = std::string("factors=") + factors;
    j["structure"] = tokaut::to_string(tokaut::StructureTag::kZ2PowSemidirect);
    j["token_vertices"] = sub.token.num_vertices();
    j["predicted_order"] =
        ((tokaut::BigInt(1) << (r - 1)) * sub.base_aut.group.order()).str();
    j["generated_order"] =
        tokaut::PermGroup(sub.generators(), sub.token.num_vertices())
            .order()
            .str();
    j["generators"] = std::move(gens);
    *json = copy_string(j.dump());
    return TKA_OK;
  });
}

tka_status tka_verify_bipartite(int m, int n, int k, const tka_limits* limits,
                                char** json) {
  if (null_arg(json, "json")) return TKA_ERR_ARGUMENT;
  return guarded([&] {
    return emit_verification(tokaut::verify_bipartite(m, n, k, to_limits(limits)),
                             json);
  });
}

tka_status tka_verify_cube(int r, const tka_limits* limits, char** json) {
  if (null_arg(json, "json")) return TKA_ERR_ARGUMENT;
  return guarded([&] {
    return emit_verification(tokaut::verify_cube(r, to_limits(limits)), json);
  });
}

tka_status tka_verify_product(const char* factors, const tka_limits* limits,
                              char** json) {
  if (null_arg(factors, "factors") || null_arg(json, "json")) {
    return TKA_ERR_ARGUMENT;
  }
  return guarded([&] {
    const auto list = tokaut::parse_factor_list(factors);
    return emit_verification(tokaut::verify_product(list, to_limits(limits)),
                             json);
  });
}

tka_status tka_factor(const tka_graph* g, tka_factorization** out) {
  if (null_arg(g, "graph") || null_arg(out, "out")) return TKA_ERR_ARGUMENT;
  return guarded([&] {
    auto f = std::make_unique<tka_factorization>();
    f->value = tokaut::prime_factor_decomposition(g->graph);
    for (const auto& factor : f->value.factors) f->factors.push_back({factor});
    *out = f.release();
    return TKA_OK;
  });
}

void tka_factorization_free(tka_factorization* f) { delete f; }

size_t tka_factorization_size(const tka_factorization* f) {
  return f == nullptr ? 0 : f->factors.size();
}

const tka_graph* tka_factorization_factor(const tka_factorization* f,
                                          size_t i) {
  if (f == nullptr || i >= f->factors.size()) return nullptr;
  return &f->factors[i];
}

tka_status tka_factorization_report(const tka_factorization* f, char** json) {
  if (null_arg(f, "factorization") || null_arg(json, "json")) {
    return TKA_ERR_ARGUMENT;
  }
  return guarded([&] {
    ordered_json j = report_header();
    ordered_json factors = ordered_json::array();
    for (const auto& g : f->value.factors) {
      factors.push_back({{"label", g.label()},
                         {"vertices", g.num_vertices()},
                         {"edges", g.num_edges()}});
    }
    ordered_json witness = ordered_json::array();
    for (const auto& pv : f->value.witness) witness.push_back(pv.coords);
    j["factors"] = std::move(factors);
    j["witness"] = std::move(witness);
    *json = copy_string(j.dump());
    return TKA_OK;
  });
}

}  // extern "C"
