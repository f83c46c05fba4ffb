#include <doctest.h>

#include <cmath>

#include "dsel/error.hpp"
#include "dsel/montecarlo.hpp"

using namespace dsel;

namespace {

ExperimentPlan small_plan(std::size_t replicates, std::uint64_t seed = 0) {
  ExperimentPlan plan;
  plan.sample_sizes = {10, 50};
  plan.replicates = replicates;
  plan.master_seed = seed;
  plan.selection.estimator.n_sub = 20;
  return plan;
}

}  // namespace

TEST_CASE("quantiles and moments") {
  const auto s = compute_spread({4, 1, 3, 2});
  CHECK(s.count == 4);
  CHECK(s.min == 1);
  CHECK(s.q1 == 1.75);
  CHECK(s.median == 2.5);
  CHECK(s.q3 == 3.25);
  CHECK(s.max == 4);
  CHECK(s.mean == 2.5);
  CHECK(s.sd == doctest::Approx(std::sqrt(5.0 / 3.0)));

  const auto capped = compute_spread({kScoreCap, 1.0, -kScoreCap});
  CHECK(capped.count == 1);
  CHECK(capped.capped == 2);
  CHECK(capped.median == 1.0);

  const auto empty = compute_spread({});
  CHECK(empty.count == 0);
  CHECK(compute_moments({}).count == 0);
  const auto one = compute_moments({3.0});
  CHECK(one.mean == 3.0);
  CHECK(one.sd == 0.0);
}

TEST_CASE("plan validation") {
  auto plan = small_plan(1);
  plan.sample_sizes = {};
  CHECK_THROWS_AS(run_experiment(plan), InputError);
  plan = small_plan(1);
  plan.sample_sizes = {1};
  CHECK_THROWS_AS(run_experiment(plan), InputError);
  plan = small_plan(0);
  CHECK_THROWS_AS(run_experiment(plan), InputError);
}

TEST_CASE("replicate seeds differ across sizes and replicates") {
  CHECK(replicate_seed(0, 10, 0) != replicate_seed(0, 10, 1));
  CHECK(replicate_seed(0, 10, 0) != replicate_seed(0, 20, 0));
  CHECK(replicate_seed(0, 10, 0) != replicate_seed(1, 10, 0));
  CHECK(replicate_seed(7, 50, 3) == replicate_seed(7, 50, 3));
}

TEST_CASE("single replicate") {
  const auto report = run_experiment(small_plan(1));
  REQUIRE(report.sizes.size() == 2);
  CHECK(report.replicates == 1);
  CHECK(report.iterations == 5);
  for (std::size_t s = 0; s < 2; ++s) {
    std::uint64_t total_terminations = 0;
    for (auto t : report.sizes[s].terminations) total_terminations += t;
    CHECK(total_terminations == 1);
  }
  CHECK_THROWS_AS(report.size_index(20), std::out_of_range);
}

TEST_CASE("aggregate invariants") {
  const auto report = run_experiment(small_plan(200));
  for (std::size_t s = 0; s < report.sizes.size(); ++s) {
    double prev_stop = 0.0;
    for (std::size_t it = 1; it <= report.iterations; ++it) {
      double total = report.not_reached_rate(s, it);
      double surviving = 0.0;
      for (std::uint32_t v = 0; v < 5; ++v) {
        total += report.selection_frequency(s, it, VariableId{v});
        surviving += report.surviving_frequency(s, it, VariableId{v});
      }
      CHECK(std::abs(total - 100.0) < 0.01);
      if (report.not_reached_rate(s, it) < 100.0) CHECK(std::abs(surviving - 100.0) < 0.01);
      const double stop = report.stop_rate(s, it);
      CHECK(stop >= prev_stop);
      prev_stop = stop;
      if (it > 1) CHECK(report.not_reached_rate(s, it) == report.stop_rate(s, it - 1));
    }
    CHECK(report.stop_rate(s, report.iterations) == 100.0);
  }
}

TEST_CASE("results do not depend on the thread count") {
  const auto plan = small_plan(60, 5);
  const auto one = run_experiment(plan, {}, 1);
  const auto three = run_experiment(plan, {}, 3);
  CHECK(to_json(one).dump() == to_json(three).dump());
  CHECK(selection_table(one) == selection_table(three));
  CHECK(candidate_table(one) == candidate_table(three));
  const auto diff = compare_reports(one, three);
  CHECK(diff.max_overall == 0.0);
}

TEST_CASE("progress is reported for every replicate") {
  std::size_t calls = 0, last_total = 0;
  run_experiment(small_plan(7), [&](std::size_t, std::size_t total) {
    ++calls;
    last_total = total;
  });
  CHECK(calls == 14);
  CHECK(last_total == 14);
}

TEST_CASE("report comparison") {
  const auto a = run_experiment(small_plan(20, 1));
  const auto b = run_experiment(small_plan(20, 2));
  const auto diff = compare_reports(a, b);
  CHECK(diff.max_overall > 0.0);
  CHECK(diff.max_overall >= diff.max_frequency);
  CHECK(diff.max_overall >= diff.max_stop_rate);
  CHECK_FALSE(diff.cells.empty());

  auto other = small_plan(20);
  other.sample_sizes = {10, 20};
  CHECK_THROWS_AS(compare_reports(a, run_experiment(other)), InputError);
}

TEST_CASE("serialized report and tables") {
  const auto report = run_experiment(small_plan(10, 9));
  const auto j = to_json(report);
  CHECK(j.at("kind") == "simulation_report");
  CHECK(j.at("metadata").at("replicates") == 10);
  CHECK(j.at("metadata").at("master_seed") == 9);
  CHECK(j.at("metadata").at("generator") == "xoshiro256starstar+splitmix64/v1");
  CHECK(j.dump().find("wall") == std::string::npos);
  CHECK(j.at("sizes").size() == 2);
  CHECK(selection_table(report).find("sample_size") != std::string::npos);
  CHECK(stop_table(report, '\t').find('\t') != std::string::npos);
  CHECK_FALSE(moments_table(report).empty());
}

TEST_CASE("two master seeds agree to within Monte Carlo noise") {
  ExperimentPlan a;
  a.sample_sizes = {50};
  a.replicates = 10000;
  a.selection.estimator.n_sub = 30;
  a.selection.max_iterations = 2;
  auto b = a;
  b.master_seed = 1;
  const auto diff = compare_reports(run_experiment(a), run_experiment(b));
  CHECK(diff.max_frequency < 2.0);
  CHECK(diff.max_stop_rate < 2.0);
}
