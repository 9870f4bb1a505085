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

#include <memory>
#include <string>

#include "gtest/gtest.h"
#include "json.hpp"

namespace tokaut {
namespace {

struct GraphDeleter {
  void operator()(tka_graph* g) const { tka_graph_free(g); }
};
using GraphPtr = std::unique_ptr<tka_graph, GraphDeleter>;

std::string take(char* s) {
  std::string out = s == nullptr ? "" : s;
  tka_string_free(s);
  return out;
}

GraphPtr make(const char* spec) {
  tka_graph* g = nullptr;
  EXPECT_EQ(tka_graph_from_specifier(spec, &g), TKA_OK) << tka_last_error();
  return GraphPtr(g);
}

TEST(CApiTest, VersionAndLimits) {
  EXPECT_STREQ(tka_version(), "0.3.0");
  const tka_limits l = tka_default_limits();
  EXPECT_EQ(l.max_vertices, 300);
  EXPECT_GT(l.max_nodes, 0);
}

TEST(CApiTest, GraphsAndTokenGraphs) {
  GraphPtr k22 = make("kmn:2,2");
  EXPECT_EQ(tka_graph_num_vertices(k22.get()), 4);
  EXPECT_EQ(tka_graph_num_edges(k22.get()), 4);

  tka_graph* raw = nullptr;
  char* mapping = nullptr;
  ASSERT_EQ(tka_token_graph(k22.get(), 2, nullptr, &raw, &mapping), TKA_OK);
  GraphPtr f2(raw);
  EXPECT_EQ(tka_graph_num_vertices(f2.get()), 6);
  EXPECT_EQ(tka_graph_num_edges(f2.get()), 8);
  EXPECT_NE(take(mapping).find("0: {0,1}"), std::string::npos);

  GraphPtr k24 = make("kmn:2,4");
  int iso = -1;
  ASSERT_EQ(tka_graph_is_isomorphic(f2.get(), k24.get(), &iso), TKA_OK);
  EXPECT_EQ(iso, 1);

  char* text = nullptr;
  ASSERT_EQ(tka_graph_to_edge_list(f2.get(), &text), TKA_OK);
  tka_graph* back = nullptr;
  ASSERT_EQ(tka_graph_from_edge_list(text, &back), TKA_OK);
  tka_string_free(text);
  GraphPtr same(back);
  EXPECT_EQ(tka_graph_num_edges(same.get()), 8);
}

TEST(CApiTest, ErrorStatuses) {
  tka_graph* g = nullptr;
  EXPECT_EQ(tka_graph_from_specifier("wheel:5", &g), TKA_ERR_ARGUMENT);
  EXPECT_EQ(g, nullptr);
  EXPECT_NE(std::string(tka_last_error()).find("kmn:M,N"), std::string::npos);
  EXPECT_EQ(tka_graph_from_specifier(nullptr, &g), TKA_ERR_ARGUMENT);
  EXPECT_EQ(tka_graph_from_specifier("k2", nullptr), TKA_ERR_ARGUMENT);
  EXPECT_EQ(tka_graph_read_file("/nonexistent/graph.el", &g), TKA_ERR_IO);
  EXPECT_EQ(tka_graph_from_edge_list("n 2\n0 5\n", &g), TKA_ERR_ARGUMENT);

  GraphPtr k2 = make("k2");
  EXPECT_EQ(tka_token_graph(k2.get(), 3, nullptr, &g, nullptr), TKA_ERR_ARGUMENT);
  char* json = nullptr;
  EXPECT_EQ(tka_verify_bipartite(2, 9, 5, nullptr, &json), TKA_ERR_SCALE);
  EXPECT_EQ(json, nullptr);
  const tka_limits tiny{300, 1};
  EXPECT_EQ(tka_verify_bipartite(3, 4, 2, &tiny, &json), TKA_ERR_SCALE);
  EXPECT_EQ(tka_verify_product("k2+cycle:4", nullptr, &json), TKA_ERR_ARGUMENT);
  EXPECT_EQ(tka_verify_cube(3, nullptr, nullptr), TKA_ERR_ARGUMENT);
  tka_graph_free(nullptr);
  tka_factorization_free(nullptr);
}

TEST(CApiTest, VerifyReports) {
  char* json = nullptr;
  ASSERT_EQ(tka_verify_bipartite(2, 3, 2, nullptr, &json), TKA_OK);
  auto j = nlohmann::json::parse(take(json));
  EXPECT_EQ(j["computed_order"], "48");
  EXPECT_TRUE(j["passed"].get<bool>());

  ASSERT_EQ(tka_verify_cube(3, nullptr, &json), TKA_OK);
  EXPECT_EQ(nlohmann::json::parse(take(json))["generated_order"], "192");

  ASSERT_EQ(tka_verify_product("k2+path:3", nullptr, &json), TKA_OK);
  EXPECT_EQ(nlohmann::json::parse(take(json))["predicted_order"], "8");

  ASSERT_EQ(tka_bipartite_generators_report(2, 3, 2, nullptr, &json), TKA_OK);
  j = nlohmann::json::parse(take(json));
  EXPECT_EQ(j["predicted_order"], "48");
  ASSERT_EQ(tka_product_generators_report("k2+k2+k2", nullptr, &json), TKA_OK);
  EXPECT_FALSE(take(json).empty());
}

TEST(CApiTest, AutomorphismReport) {
  GraphPtr c5 = make("cycle:5");
  char* json = nullptr;
  ASSERT_EQ(tka_automorphism_report(c5.get(), nullptr, &json), TKA_OK);
  const auto j = nlohmann::json::parse(take(json));
  EXPECT_EQ(j["order"], "10");
  EXPECT_TRUE(j.contains("generators"));
}

TEST(CApiTest, Factorization) {
  GraphPtr q3 = make("cube:3");
  tka_factorization* f = nullptr;
  ASSERT_EQ(tka_factor(q3.get(), &f), TKA_OK);
  ASSERT_EQ(tka_factorization_size(f), 3U);
  const tka_graph* first = tka_factorization_factor(f, 0);
  ASSERT_NE(first, nullptr);
  EXPECT_EQ(tka_graph_num_vertices(first), 2);
  EXPECT_EQ(tka_factorization_factor(f, 3), nullptr);
  char* json = nullptr;
  ASSERT_EQ(tka_factorization_report(f, &json), TKA_OK);
  const auto j = nlohmann::json::parse(take(json));
  EXPECT_EQ(j["witness"].size(), 8U);
  tka_factorization_free(f);

  tka_graph* raw = nullptr;
  ASSERT_EQ(tka_graph_from_edge_list("n 3\n0 1\n", &raw), TKA_OK);
  GraphPtr disconnected(raw);
  EXPECT_EQ(tka_factor(disconnected.get(), &f), TKA_ERR_ARGUMENT);
}

}  // namespace
}  // namespace tokaut
