#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "shs/bench.hpp"
#include "shs/synthetic.hpp"

using namespace shs;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

BenchConfig quick_config(std::size_t k, std::size_t deletions, std::uint64_t seed) {
  BenchConfig c;
  c.k = k;
  c.deletions = deletions;
  c.seed = seed;
  c.min_timing_ms = 0.05;  // keep unit tests quick; acceptance uses real budgets
  return c;
}

}  // namespace

TEST_CASE("zero deletions yield an empty trial list") {
  const auto g = gnm_graph(20, 40, 1);
  CHECK(run_deletion_stream(g, quick_config(2, 0, 9)).empty());
}

TEST_CASE("deletions beyond the edge count are rejected") {
  const auto g = gnm_graph(10, 12, 1);
  CHECK_THROWS_AS(run_deletion_stream(g, quick_config(1, 13, 9)), std::invalid_argument);
}

TEST_CASE("a fixed seed pins the deleted edges and the objectives") {
  const auto g = gnm_graph(30, 70, 4);
  const auto a = run_deletion_stream(g, quick_config(2, 12, 77));
  const auto b = run_deletion_stream(g, quick_config(2, 12, 77));
  REQUIRE(a.size() == 12);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].deleted == b[i].deleted);
    CHECK(a[i].static_objective == b[i].static_objective);
    CHECK(a[i].dynamic_objective == b[i].dynamic_objective);
    CHECK(a[i].speedup > 0.0);
  }
}

TEST_CASE("aggregate: gmean, min, max") {
  std::vector<TrialResult> rows(2);
  rows[0].speedup = 2.0;
  rows[1].speedup = 8.0;
  auto s = aggregate(rows);
  CHECK(s.gmean == doctest::Approx(4.0));
  CHECK(s.min == 2.0);
  CHECK(s.max == 8.0);

  std::vector<TrialResult> constant(3);
  for (auto& r : constant) r.speedup = 3.0;
  s = aggregate(constant);
  CHECK(s.gmean == doctest::Approx(3.0));
  CHECK(s.min == 3.0);
  CHECK(s.max == 3.0);

  CHECK_THROWS_AS(aggregate({}), std::invalid_argument);
}

TEST_CASE("csv emission: header, rows, and the sibling summary") {
  const std::string path = "bench_test_out.csv";
  const std::vector<std::string> labels{"n0", "n1", "n2"};

  SUBCASE("empty results produce a header-only file") {
    emit_csv({}, path, labels);
    CHECK(slurp(path) ==
          "trial,edge_u,edge_v,static_ms,dynamic_ms,speedup,static_objective,dynamic_objective\n");
  }

  SUBCASE("two trials give three lines and a gmean summary row") {
    std::vector<TrialResult> rows(2);
    rows[0] = {0, {0, 1}, 4.0, 2.0, 2.0, 10, 10};
    rows[1] = {1, {1, 2}, 8.0, 1.0, 8.0, 9, 11};
    emit_csv(rows, path, labels);

    const auto text = slurp(path);
    CHECK(std::count(text.begin(), text.end(), '\n') == 3);
    CHECK(text.find("0,n0,n1,") != std::string::npos);

    const auto summary = slurp(summary_path_for(path));
    CHECK(summary.find("gmean,4.0\n") != std::string::npos);
    CHECK(summary.find("min,2.0\n") != std::string::npos);
    CHECK(summary.find("max,8.0\n") != std::string::npos);
    // One trial regressed (11 > 9): the ledger surfaces it.
    CHECK(summary.find("quality_regressions,1\n") != std::string::npos);
  }

  std::remove(path.c_str());
  std::remove(summary_path_for(path).c_str());
}

TEST_CASE("ratio formatting always carries a decimal point") {
  CHECK(format_ratio(4.0) == "4.0");
  CHECK(format_ratio(2.5) == "2.5");
  CHECK(format_ratio(0.125) == "0.125");
}
