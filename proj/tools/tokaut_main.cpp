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


// tokaut: token graphs, automorphism groups and order verification.
//
// Exit codes: 0 success, 2 usage or parse error, 3 scale-guard refusal,
// 4 verification failure.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <regex>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "tokaut/tokaut.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitScale = 3;
constexpr int kExitVerify = 4;

struct GraphDeleter {
  void operator()(tka_graph* g) const { tka_graph_free(g); }
};
using GraphPtr = std::unique_ptr<tka_graph, GraphDeleter>;

struct StringDeleter {
  void operator()(char* s) const { tka_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct FactorizationDeleter {
  void operator()(tka_factorization* f) const { tka_factorization_free(f); }
};

// Thrown after a library call fails; carries the exit code.
struct CliFailure {
  int code;
  std::string message;
};

int exit_code_for(tka_status status) {
  switch (status) {
    case TKA_OK:
      return kExitOk;
    case TKA_ERR_SCALE:
      return kExitScale;
    case TKA_ERR_VERIFY:
      return kExitVerify;
    case TKA_ERR_ARGUMENT:
    case TKA_ERR_IO:
      return kExitUsage;
    case TKA_ERR_INTERNAL:
      break;
  }
  return 1;
}

void check(tka_status status) {
  if (status != TKA_OK) throw CliFailure{exit_code_for(status), tka_last_error()};
}

std::string take(char* s) {
  OwnedString owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

// Writes through a temporary file in the same directory, then renames.
void write_atomically(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CliFailure{kExitUsage, "cannot write " + tmp.string()};
    out << contents;
    out.flush();
    if (!out) throw CliFailure{kExitUsage, "write failed for " + tmp.string()};
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw CliFailure{kExitUsage, "cannot rename into " + path};
  }
}

bool looks_like_specifier(const std::string& text) {
  static const std::regex pattern(
      R"(^(kmn|kn|path|cycle|star|cube|prod|file):.*$|^[kK][0-9]+$)");
  return std::regex_match(text, pattern);
}

// --graph/--in accept either a graph specifier or an edge-list path.
GraphPtr load_graph(const std::string& source) {
  tka_graph* g = nullptr;
  if (looks_like_specifier(source)) {
    check(tka_graph_from_specifier(source.c_str(), &g));
  } else {
    check(tka_graph_read_file(source.c_str(), &g));
  }
  return GraphPtr(g);
}

struct Limits {
  int64_t max_vertices;
  int64_t max_nodes;
  tka_limits get() const { return {max_vertices, max_nodes}; }
};

void emit_report(const std::optional<std::string>& path,
                 const std::string& json) {
  if (path) {
    write_atomically(*path, json + "\n");
  } else {
    std::cout << json << "\n";
  }
}

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
  std::vector<int> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, end - start);
    try {
      std::size_t used = 0;
      values.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CliFailure{kExitUsage, std::string("bad value '") + item +
                                       "' for " + flag};
    }
    start = end + 1;
  }
  return values;
}

int single_int(const std::string& text, const char* flag) {
  const auto values = parse_int_list(text, flag);
  if (values.size() != 1) {
    throw CliFailure{kExitUsage, std::string(flag) + " takes one value here"};
  }
  return values[0];
}

// One verification instance; `run` returns a status and fills `json`.
struct Instance {
  std::string name;
  std::function<tka_status(const tka_limits*, char**)> run;
};

struct Outcome {
  tka_status status = TKA_OK;
  std::string json;
  std::string error;
};

int severity(int code) {
  switch (code) {
    case kExitOk:
      return 0;
    case kExitVerify:
      return 1;
    case kExitScale:
      return 2;
    case kExitUsage:
      return 3;
    default:
      return 4;
  }
}

int run_instances(const std::vector<Instance>& instances, const Limits& limits,
                  int jobs, const std::optional<std::string>& report) {
  std::vector<Outcome> outcomes(instances.size());
  std::atomic<std::size_t> next{0};
  const tka_limits lim = limits.get();
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      char* json = nullptr;
      outcomes[i].status = instances[i].run(&lim, &json);
      outcomes[i].json = take(json);
      if (outcomes[i].status != TKA_OK) outcomes[i].error = tka_last_error();
    }
  };
  const int threads =
      std::max(1, std::min<int>(jobs, static_cast<int>(instances.size())));
  std::vector<std::jthread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  int worst = kExitOk;
  std::string lines;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const Outcome& o = outcomes[i];
    const int code = exit_code_for(o.status);
    if (severity(code) > severity(worst)) worst = code;
    if (!o.json.empty()) lines += o.json + "\n";
    if (o.status == TKA_OK) {
      std::cerr << instances[i].name << ": passed\n";
    } else {
      std::cerr << instances[i].name << ": " << o.error << "\n";
    }
  }
  if (report) {
    write_atomically(*report, lines);
  } else {
    std::cout << lines;
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Token graphs, their automorphism groups, and order checks"};
  app.set_version_flag("--version", std::string(tka_version()));
  app.require_subcommand(1);

  const tka_limits defaults = tka_default_limits();
  Limits limits{defaults.max_vertices, defaults.max_nodes};
  auto add_limits = [&](CLI::App* cmd) {
    cmd->add_option("--max-vertices", limits.max_vertices,
                    "Token-graph vertex ceiling")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-nodes", limits.max_nodes,
                    "Search-tree node ceiling")
        ->check(CLI::PositiveNumber);
  };

  std::string graph_source;
  int k = 0;
  std::string out_path;
  std::optional<std::string> report;

  auto* build = app.add_subcommand("build", "Write F_k(G) and its rank mapping");
  build->add_option("--graph,--in", graph_source, "Graph specifier or edge-list file")
      ->required();
  build->add_option("--k", k, "Number of tokens")->required();
  build->add_option("--out", out_path,
                    "Edge-list output; the mapping goes to <out>.map");
  add_limits(build);

  auto* aut = app.add_subcommand("aut", "Compute Aut(G)");
  aut->add_option("--graph,--in", graph_source, "Graph specifier or edge-list file")
      ->required();
  aut->add_option("--report", report, "JSON report path");
  add_limits(aut);

  std::string m_text, n_text, k_text, r_text;
  std::vector<std::string> factor_lists;
  int jobs = 1;

  auto* gens = app.add_subcommand("generators",
                                  "Constructed generators and predicted order");
  gens->add_option("--m", m_text);
  gens->add_option("--n", n_text);
  gens->add_option("--k", k_text);
  gens->add_option("--factors", factor_lists, "Factor list such as k2+path:3");
  gens->add_option("--report", report, "JSON report path");
  add_limits(gens);

  auto* verify = app.add_subcommand("verify", "Compare computed and predicted groups");
  verify->require_subcommand(1);
  auto* vb = verify->add_subcommand("bipartite", "F_k(K_{m,n})");
  vb->add_option("--m", m_text, "Comma list allowed")->required();
  vb->add_option("--n", n_text, "Comma list allowed")->required();
  vb->add_option("--k", k_text, "Comma list allowed")->required();
  auto* vc = verify->add_subcommand("cube", "F_2(Q_r)");
  vc->add_option("--r", r_text, "Comma list allowed")->required();
  auto* vp = verify->add_subcommand("product", "F_2 of a Cartesian product");
  vp->add_option("--factors", factor_lists, "Factor list; repeat for more instances")
      ->required();
  for (auto* cmd : {vb, vc, vp}) {
    cmd->add_option("--report", report, "JSON-lines report path");
    cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    add_limits(cmd);
  }

  auto* factor = app.add_subcommand("factor", "Prime factor decomposition");
  factor->add_option("--graph,--in", graph_source, "Graph specifier or edge-list file")
      ->required();
  factor->add_option("--out", out_path,
                     "Prefix for factor files; writes <prefix>1.el, ...");
  factor->add_option("--report", report, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (build->parsed()) {
      const GraphPtr base = load_graph(graph_source);
      tka_graph* token = nullptr;
      char* mapping = nullptr;
      const tka_limits lim = limits.get();
      check(tka_token_graph(base.get(), k, &lim, &token, &mapping));
      const GraphPtr tg(token);
      const std::string map_text = take(mapping);
      char* text = nullptr;
      check(tka_graph_to_edge_list(tg.get(), &text));
      const std::string edges = take(text);
      if (out_path.empty()) {
        std::cout << edges;
      } else {
        write_atomically(out_path, edges);
        write_atomically(out_path + ".map", map_text);
        std::cerr << "wrote " << out_path << " (" << tka_graph_num_vertices(tg.get())
                  << " vertices, " << tka_graph_num_edges(tg.get())
                  << " edges) and " << out_path << ".map\n";
      }
      return kExitOk;
    }

    if (aut->parsed()) {
      const GraphPtr g = load_graph(graph_source);
      const tka_limits lim = limits.get();
      char* json = nullptr;
      check(tka_automorphism_report(g.get(), &lim, &json));
      const std::string text = take(json);
      if (report) {
        write_atomically(*report, text + "\n");
        std::cerr << "wrote " << *report << "\n";
      } else {
        std::cout << text << "\n";
      }
      return kExitOk;
    }

    if (gens->parsed()) {
      const tka_limits lim = limits.get();
      char* json = nullptr;
      if (!factor_lists.empty()) {
        if (factor_lists.size() != 1 || !m_text.empty()) {
          throw CliFailure{kExitUsage, "give either one --factors or --m/--n/--k"};
        }
        check(tka_product_generators_report(factor_lists[0].c_str(), &lim, &json));
      } else {
        if (m_text.empty() || n_text.empty() || k_text.empty()) {
          throw CliFailure{kExitUsage, "generators needs --m, --n and --k, or --factors"};
        }
        const int m = single_int(m_text, "--m");
        const int n = single_int(n_text, "--n");
        const int kk = single_int(k_text, "--k");
        check(tka_bipartite_generators_report(m, n, kk, &lim, &json));
      }
      emit_report(report, take(json));
      return kExitOk;
    }

    if (verify->parsed()) {
      std::vector<Instance> instances;
      if (vb->parsed()) {
        for (int m : parse_int_list(m_text, "--m")) {
          for (int n : parse_int_list(n_text, "--n")) {
            for (int kk : parse_int_list(k_text, "--k")) {
              instances.push_back(
                  {"bipartite m=" + std::to_string(m) + ",n=" + std::to_string(n) +
                       ",k=" + std::to_string(kk),
                   [=](const tka_limits* lim, char** json) {
                     return tka_verify_bipartite(m, n, kk, lim, json);
                   }});
            }
          }
        }
      } else if (vc->parsed()) {
        for (int r : parse_int_list(r_text, "--r")) {
          instances.push_back({"cube r=" + std::to_string(r),
                               [=](const tka_limits* lim, char** json) {
                                 return tka_verify_cube(r, lim, json);
                               }});
        }
      } else {
        for (const auto& list : factor_lists) {
          instances.push_back({"product " + list,
                               [=](const tka_limits* lim, char** json) {
                                 return tka_verify_product(list.c_str(), lim, json);
                               }});
        }
      }
      return run_instances(instances, limits, jobs, report);
    }

    if (factor->parsed()) {
      const GraphPtr g = load_graph(graph_source);
      tka_factorization* raw = nullptr;
      check(tka_factor(g.get(), &raw));
      const std::unique_ptr<tka_factorization, FactorizationDeleter> f(raw);
      std::string prefix = out_path;
      if (prefix.empty()) {
        prefix = looks_like_specifier(graph_source) ? "factor" : graph_source + ".factor";
      }
      const std::size_t count = tka_factorization_size(f.get());
      std::cout << count << (count == 1 ? " factor (prime)\n" : " factors\n");
      for (std::size_t i = 0; i < count; ++i) {
        const tka_graph* factor_graph = tka_factorization_factor(f.get(), i);
        char* text = nullptr;
        check(tka_graph_to_edge_list(factor_graph, &text));
        const std::string path = prefix + std::to_string(i + 1) + ".el";
        write_atomically(path, take(text));
        std::cout << "factor" << i + 1 << ": "
                  << tka_graph_num_vertices(factor_graph) << " vertices, "
                  << tka_graph_num_edges(factor_graph) << " edges -> " << path
                  << "\n";
      }
      if (report) {
        char* json = nullptr;
        check(tka_factorization_report(f.get(), &json));
        write_atomically(*report, take(json) + "\n");
      }
      return kExitOk;
    }
  } catch (const CliFailure& e) {
    std::cerr << "tokaut: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "tokaut: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
