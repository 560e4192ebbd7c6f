// Command-line front end for structural-hole-spanner identification and
// tracking. Exit codes: 0 on success, 2 on any usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "shs/bench.hpp"
#include "shs/dynamic_spanner.hpp"
#include "shs/graph_io.hpp"
#include "shs/oracle.hpp"
#include "shs/static_spanner.hpp"

namespace {

struct GraphArgs {
  std::string path;
  std::string format = "auto";
};

shs::LoadedGraph load(const GraphArgs& args) {
  if (args.format == "edgelist")
    return shs::load_graph_file(args.path, shs::GraphFormat::kEdgeList);
  if (args.format == "gml") return shs::load_graph_file(args.path, shs::GraphFormat::kGml);
  return shs::load_graph_file(args.path);
}

void add_graph_options(CLI::App* cmd, GraphArgs& args) {
  cmd->add_option("--graph", args.path, "graph file")->required();
  cmd->add_option("--format", args.format, "graph file format")
      ->check(CLI::IsMember({"auto", "edgelist", "gml"}));
}

void print_spanners(const shs::SpannerSet& set, const shs::LoadedGraph& loaded,
                    shs::Score residual, bool as_json) {
  if (as_json) {
    nlohmann::json doc;
    doc["spanners"] = nlohmann::json::array();
    for (const auto& e : set)
      doc["spanners"].push_back({{"node", loaded.labels[e.node]}, {"score", e.score}});
    doc["residual_connectivity"] = residual;
    std::cout << doc.dump() << '\n';
    return;
  }
  for (const auto& e : set) std::cout << loaded.labels[e.node] << ' ' << e.score << '\n';
  std::cout << "residual " << residual << '\n';
}

shs::Score residual_of(const shs::UndirectedGraph& g, const shs::SpannerSet& set) {
  std::vector<shs::NodeId> nodes;
  for (const auto& e : set) nodes.push_back(e.node);
  return shs::oracle::residual_connectivity(g, nodes);
}

int run_static(const GraphArgs& graph_args, std::size_t k, bool as_json) {
  const auto loaded = load(graph_args);
  const auto result = shs::top_k_greedy(loaded.graph, k);
  print_spanners(result.spanners, loaded, residual_of(loaded.graph, result.spanners), as_json);
  return 0;
}

int run_track(const GraphArgs& graph_args, std::size_t k, const std::string& updates_path,
              bool emit_each, bool as_json) {
  const auto loaded = load(graph_args);
  shs::SpannerState state(loaded.graph, k);

  std::ifstream updates(updates_path);
  if (!updates) throw std::invalid_argument("cannot open updates file '" + updates_path + "'");

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(updates, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string op, u, v, extra;
    if (!(fields >> op)) continue;
    if (op != "d" || !(fields >> u >> v) || (fields >> extra))
      throw std::invalid_argument("updates line " + std::to_string(line_no) +
                                  ": expected 'd <u> <v>', got '" + line + "'");
    shs::UpdateEvent event{loaded.id_of(u), loaded.id_of(v)};
    const auto set = state.handle_update(event);
    if (emit_each) {
      std::cout << "update d " << u << ' ' << v << '\n';
      print_spanners(set, loaded, residual_of(state.graph(), set), as_json);
    }
  }
  print_spanners(state.spanners(), loaded, residual_of(state.graph(), state.spanners()), as_json);
  return 0;
}

int run_bench(const GraphArgs& graph_args, const shs::BenchConfig& config,
              const std::string& out_path) {
  const auto loaded = load(graph_args);
  const auto results = shs::run_deletion_stream(loaded.graph, config);
  shs::emit_csv(results, out_path, loaded.labels);
  if (!results.empty()) {
    const auto summary = shs::aggregate(results);
    std::cout << "gmean " << shs::format_ratio(summary.gmean) << '\n'
              << "min " << shs::format_ratio(summary.min) << '\n'
              << "max " << shs::format_ratio(summary.max) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"top-k structural hole spanners by pairwise-connectivity minimization"};
  app.require_subcommand(1);

  GraphArgs graph_args;
  std::size_t k = 1;
  bool as_json = false;

  auto* cmd_static = app.add_subcommand("static", "greedy identification on a static graph");
  add_graph_options(cmd_static, graph_args);
  cmd_static->add_option("--k", k, "spanner budget")->required();
  cmd_static->add_flag("--json", as_json, "JSON output");

  std::string updates_path;
  bool emit_each = false;
  auto* cmd_track = app.add_subcommand("track", "maintain spanners over a deletion stream");
  add_graph_options(cmd_track, graph_args);
  cmd_track->add_option("--k", k, "spanner budget")->required();
  cmd_track->add_option("--updates", updates_path, "update file, one 'd <u> <v>' per line")
      ->required();
  cmd_track->add_flag("--emit-each", emit_each, "print the set after every update");
  cmd_track->add_flag("--json", as_json, "JSON output");

  shs::BenchConfig config;
  std::string out_path;
  auto* cmd_bench = app.add_subcommand("bench", "timed deletion stream vs static recomputation");
  add_graph_options(cmd_bench, graph_args);
  cmd_bench->add_option("--k", config.k, "spanner budget")->required();
  cmd_bench->add_option("--deletions", config.deletions, "number of random deletions");
  cmd_bench->add_option("--seed", config.seed, "random seed");
  cmd_bench->add_option("--out", out_path, "CSV output path")->required();

  try {
    app.parse(argc, argv);
    if (cmd_static->parsed()) return run_static(graph_args, k, as_json);
    if (cmd_track->parsed()) return run_track(graph_args, k, updates_path, emit_each, as_json);
    return run_bench(graph_args, config, out_path);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
