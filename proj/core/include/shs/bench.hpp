#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shs/dynamic_spanner.hpp"
#include "shs/graph.hpp"

namespace shs {

/// Deletion-stream benchmark configuration: starting from the full graph,
/// remove `deletions` random existing edges one at a time, timing the tracked
/// update against a static recomputation after each.
struct BenchConfig {
  std::size_t k = 1;
  std::size_t deletions = 50;
  std::uint64_t seed = 1;
  /// Repeat each timed call until this much time has accumulated, then
  /// divide; keeps sub-millisecond trials out of timer noise.
  double min_timing_ms = 10.0;
};

struct TrialResult {
  std::size_t trial = 0;
  Edge deleted;
  double static_ms = 0.0;
  double dynamic_ms = 0.0;
  double speedup = 0.0;
  Score static_objective = 0;   // P(G' \ static set)
  Score dynamic_objective = 0;  // P(G' \ tracked set)
};

struct SpeedupSummary {
  double gmean = 0.0;
  double min = 0.0;
  double max = 0.0;
};

/// Runs the deletion stream on a copy of g. Edge picks are uniform over the
/// edges present at each step, pinned by the seed; timings exclude I/O,
/// graph copies, and the other method's work.
std::vector<TrialResult> run_deletion_stream(const UndirectedGraph& g, const BenchConfig& config);

/// Geometric mean, minimum and maximum of the per-trial speedups.
SpeedupSummary aggregate(const std::vector<TrialResult>& results);

/// Writes one CSV row per trial to `path` and a gmean/min/max summary (plus
/// the quality-ratio ledger) to the sibling `<path minus .csv>.summary.csv`.
void emit_csv(const std::vector<TrialResult>& results, const std::string& path,
              const std::vector<std::string>& labels);

std::string summary_path_for(const std::string& csv_path);

/// `%.10g` with a guaranteed decimal point ("4" -> "4.0").
std::string format_ratio(double value);

}  // namespace shs
