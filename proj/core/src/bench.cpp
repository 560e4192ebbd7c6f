#include "shs/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <stdexcept>

#include "shs/oracle.hpp"
#include "shs/synthetic.hpp"

namespace shs {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// Repeats `call` until `min_ms` of runtime has accumulated and returns the
/// mean per-call milliseconds. `prepare` runs outside the timer before every
/// call (state clones and similar).
template <typename Prepare, typename Call>
double timed_mean_ms(double min_ms, Prepare&& prepare, Call&& call) {
  double total = 0.0;
  std::size_t reps = 0;
  do {
    auto&& ctx = prepare();
    const auto start = Clock::now();
    call(ctx);
    total += ms_since(start);
    ++reps;
  } while (total < min_ms);
  return total / static_cast<double>(reps);
}

std::vector<NodeId> spanner_nodes(const SpannerSet& set) {
  std::vector<NodeId> nodes;
  nodes.reserve(set.size());
  for (const auto& e : set) nodes.push_back(e.node);
  return nodes;
}

}  // namespace

std::vector<TrialResult> run_deletion_stream(const UndirectedGraph& g,
                                             const BenchConfig& config) {
  if (config.k < 1) throw std::invalid_argument("bench: k must be >= 1");
  if (config.deletions > g.edge_count())
    throw std::invalid_argument("bench: deletions (" + std::to_string(config.deletions) +
                                ") exceed edge count (" + std::to_string(g.edge_count()) + ")");

  std::mt19937_64 rng(config.seed);
  SpannerState state(g, config.k);
  std::vector<TrialResult> results;
  results.reserve(config.deletions);

  for (std::size_t trial = 0; trial < config.deletions; ++trial) {
    const auto edges = state.graph().edges();
    const Edge target = edges[bounded_draw(rng, edges.size())];
    const UpdateEvent event{target.first, target.second};

    TrialResult row;
    row.trial = trial;
    row.deleted = target;

    // Tracked update: timed on clones of the live state, then applied once
    // for real. Clone cost stays outside the timer.
    row.dynamic_ms = timed_mean_ms(
        config.min_timing_ms, [&] { return state; },
        [&](SpannerState& clone) { clone.handle_update(event); });
    const SpannerSet dynamic_set = state.handle_update(event);

    // Static baseline: full greedy rerun on the same post-deletion graph.
    const UndirectedGraph& after = state.graph();
    row.static_ms = timed_mean_ms(
        config.min_timing_ms, [&]() -> const UndirectedGraph& { return after; },
        [&](const UndirectedGraph& graph) { top_k_greedy(graph, config.k); });
    const SpannerSet static_set = oracle::static_recompute(after, config.k);

    row.speedup = row.static_ms / row.dynamic_ms;
    row.dynamic_objective = oracle::residual_connectivity(after, spanner_nodes(dynamic_set));
    row.static_objective = oracle::residual_connectivity(after, spanner_nodes(static_set));
    results.push_back(row);
  }
  return results;
}

SpeedupSummary aggregate(const std::vector<TrialResult>& results) {
  if (results.empty()) throw std::invalid_argument("aggregate: no trials");
  SpeedupSummary summary;
  summary.min = summary.max = results.front().speedup;
  double log_sum = 0.0;
  for (const auto& row : results) {
    if (row.speedup <= 0.0) throw std::logic_error("aggregate: non-positive speedup");
    log_sum += std::log(row.speedup);
    summary.min = std::min(summary.min, row.speedup);
    summary.max = std::max(summary.max, row.speedup);
  }
  summary.gmean = std::exp(log_sum / static_cast<double>(results.size()));
  return summary;
}

std::string format_ratio(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", value);
  std::string s(buf);
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
      s.find("inf") == std::string::npos && s.find("nan") == std::string::npos)
    s += ".0";
  return s;
}

std::string summary_path_for(const std::string& csv_path) {
  std::string base = csv_path;
  if (base.size() >= 4 && base.compare(base.size() - 4, 4, ".csv") == 0)
    base.erase(base.size() - 4);
  return base + ".summary.csv";
}

void emit_csv(const std::vector<TrialResult>& results, const std::string& path,
              const std::vector<std::string>& labels) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  auto label = [&](NodeId v) -> std::string {
    return v < labels.size() ? labels[v] : std::to_string(v);
  };

  out << "trial,edge_u,edge_v,static_ms,dynamic_ms,speedup,static_objective,dynamic_objective\n";
  char buf[128];
  for (const auto& row : results) {
    std::snprintf(buf, sizeof(buf), "%.6f,%.6f,%.6f", row.static_ms, row.dynamic_ms, row.speedup);
    out << row.trial << ',' << label(row.deleted.first) << ',' << label(row.deleted.second) << ','
        << buf << ',' << row.static_objective << ',' << row.dynamic_objective << '\n';
  }
  if (!out) throw std::runtime_error("write failure on '" + path + "'");

  std::ofstream sum(summary_path_for(path));
  if (!sum) throw std::runtime_error("cannot write '" + summary_path_for(path) + "'");
  if (!results.empty()) {
    const auto summary = aggregate(results);
    sum << "gmean," << format_ratio(summary.gmean) << '\n';
    sum << "min," << format_ratio(summary.min) << '\n';
    sum << "max," << format_ratio(summary.max) << '\n';

    // Quality ledger: how far the tracked set's objective drifts from the
    // static baseline's. Ratios above 1.0 are regressions and get counted.
    double max_ratio = 0.0;
    std::size_t regressions = 0;
    for (const auto& row : results) {
      const double ratio = row.static_objective == 0
                               ? (row.dynamic_objective == 0 ? 1.0 : 2.0)
                               : static_cast<double>(row.dynamic_objective) /
                                     static_cast<double>(row.static_objective);
      max_ratio = std::max(max_ratio, ratio);
      if (ratio > 1.0) ++regressions;
    }
    sum << "max_quality_ratio," << format_ratio(max_ratio) << '\n';
    sum << "quality_regressions," << regressions << '\n';
  }
}

}  // namespace shs
