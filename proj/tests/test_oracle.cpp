#include <doctest.h>

#include <cmath>
#include <random>

#include "dsel/distribution.hpp"
#include "dsel/error.hpp"
#include "dsel/oracle.hpp"
#include "dsel/selection.hpp"
#include "oracles.hpp"

using namespace dsel;

namespace {

const VariableId X1{0}, X2{1};

void check_sorted(const std::vector<SubsetEvaluation>& ranked) {
  for (std::size_t i = 1; i < ranked.size(); ++i) {
    const auto& a = ranked[i - 1];
    const auto& b = ranked[i];
    CHECK(a.entropy <= b.entropy + 1e-12);
    if (std::abs(a.entropy - b.entropy) < 1e-13) {
      CHECK(a.subset.size() <= b.subset.size());
    }
  }
}

}  // namespace

TEST_CASE("case study: {X1, X2} is the smallest minimizer") {
  const auto ranked = exhaustive_exact(case_study_distribution());
  REQUIRE(ranked.size() == 32);
  check_sorted(ranked);
  const auto best = minimal_minimizer(ranked);
  CHECK(ranked[best].subset == VariableSet{X1, X2});
  CHECK(std::abs(ranked[best].entropy - 0.4635846793516261) < 1e-12);
  CHECK(best == 0);
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(ranked[i].subset.size() >= 2);
    CHECK(std::abs(ranked[i].entropy - ranked[0].entropy) < 1e-12);
  }
  CHECK(ranked.back().entropy == doctest::Approx(0.954434002924965));
  CHECK(ranked.back().source == EvaluationSource::exact_distribution);
}

TEST_CASE("deterministic class: X1 alone reaches zero") {
  // C = X1 with X2 uniform and independent.
  std::vector<double> table(8, 0.0);
  for (std::uint32_t x1 = 0; x1 < 2; ++x1) {
    for (std::uint32_t x2 = 0; x2 < 2; ++x2) {
      table[(x1 * 2 + x2) * 2 + x1] = 0.25;
    }
  }
  const auto ranked = exhaustive_exact(JointDistribution({2, 2}, table));
  const auto best = minimal_minimizer(ranked);
  CHECK(ranked[best].subset == VariableSet{X1});
  CHECK(ranked[best].entropy == 0.0);
}

TEST_CASE("roster guard") {
  std::vector<std::uint32_t> arity(21, 1);
  std::vector<double> table(2, 0.5);
  const JointDistribution wide(arity, table);
  CHECK_THROWS_AS(exhaustive_exact(wide), InputError);
  std::vector<std::vector<std::uint32_t>> cols(21, std::vector<std::uint32_t>{0, 0});
  std::vector<std::string> names;
  for (int i = 0; i < 21; ++i) names.push_back("v" + std::to_string(i));
  const Dataset d({0, 1}, cols, names, std::vector<std::uint32_t>(21, 1));
  CHECK_THROWS_AS(exhaustive_empirical(d), InputError);
}

TEST_CASE("minimal minimizer") {
  CHECK_THROWS(minimal_minimizer({}));
  std::vector<SubsetEvaluation> ranked{
      {{X1, X2}, 0.1, EvaluationSource::empirical_sample},
      {{X1}, 0.1 + 1e-9, EvaluationSource::empirical_sample},
      {{}, 0.5, EvaluationSource::empirical_sample},
  };
  CHECK(minimal_minimizer(ranked) == 0);
  CHECK(minimal_minimizer(ranked, 1e-6) == 1);
}

TEST_CASE("property: empirical ranking equals plug-in entropies and the empirical table") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = test::random_dataset(rng, 2 + rng() % 50, 1 + rng() % 4, 3);
    const auto ranked = exhaustive_empirical(d);
    REQUIRE(ranked.size() == (std::size_t{1} << d.num_variables()));
    check_sorted(ranked);
    for (const auto& e : ranked) {
      CHECK(e.source == EvaluationSource::empirical_sample);
      CHECK(std::abs(e.entropy - test::ref_plugin_entropy(d, e.subset)) < 1e-12);
    }
    const auto exact = exhaustive_exact(empirical_distribution(d));
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      CHECK(std::abs(exact[i].entropy - ranked[i].entropy) < 1e-12);
    }
  }
}

TEST_CASE("greedy selection on a large sample matches the oracle's minimizer") {
  const auto j = case_study_distribution();
  const auto ranked = exhaustive_exact(j);
  const auto target = ranked[minimal_minimizer(ranked)].subset;
  int agree = 0;
  for (int seed = 0; seed < 10; ++seed) {
    const auto d = sample_dataset(j, 5000, 500 + seed);
    SelectionConfig cfg;
    cfg.max_iterations = 2;
    cfg.estimator.n_sub = 30;
    cfg.estimator.seed = static_cast<std::uint64_t>(seed);
    agree += select_differential_set(d, cfg).selected() == target;
  }
  CHECK(agree == 10);
}
