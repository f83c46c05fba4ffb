#include <doctest.h>

#include <cmath>
#include <random>

#include "dsel/distribution.hpp"
#include "dsel/error.hpp"
#include "dsel/estimator.hpp"
#include "oracles.hpp"

using namespace dsel;

namespace {

Dataset labels_only(std::vector<std::uint8_t> labels) {
  return Dataset(std::move(labels), {}, {}, {});
}

}  // namespace

TEST_CASE("Miller-Madow cell entropy") {
  CHECK(std::abs(binary_entropy_mm(3, 3) - 1.120224586740747) < 1e-12);
  CHECK(std::abs(binary_entropy_mm(23, 1) - 0.2799384395183721) < 1e-12);
  CHECK(binary_entropy_mm(5, 0) == 0.0);
  CHECK(binary_entropy_mm(0, 7) == 0.0);
  CHECK_THROWS(binary_entropy_mm(0, 0));
  CHECK(binary_entropy_mm(1, 1) > 1.0);  // not clamped
  CHECK(cell_entropy(3, 3, Correction::none) == 1.0);
  CHECK(cell_entropy(3, 3, Correction::miller_madow) == binary_entropy_mm(3, 3));
}

TEST_CASE("property: correction term equals 1/(2 N ln 2) on mixed cells") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const std::size_t a = 1 + rng() % 200;
    const std::size_t b = 1 + rng() % 200;
    const double n = static_cast<double>(a + b);
    const double plug = test::ref_binary_entropy(static_cast<double>(a) / n);
    CHECK(std::abs(cell_entropy(a, b, Correction::none) - plug) < 1e-12);
    CHECK(std::abs(binary_entropy_mm(a, b) - plug - 1.0 / (2.0 * n * std::log(2.0))) < 1e-12);
  }
}

TEST_CASE("weighted cell entropy") {
  const std::vector<CellCount> cells{{{3, 0}}, {{1, 2}}, {{0, 0}}};
  CHECK(std::abs(weighted_cell_entropy(cells, 6, Correction::none) - 0.4591479170272448) < 1e-12);
}

TEST_CASE("single pass over a small table") {
  const auto d = parse_dataset("x,class\na,0\na,0\na,0\nb,0\nb,1\nb,1\n");
  const auto view = project(d, all_variables(1));
  CHECK(std::abs(conditional_entropy_once(view, Correction::none) - 0.4591479170272448) < 1e-12);
  const double mm = 0.5 * binary_entropy_mm(1, 2);
  CHECK(std::abs(conditional_entropy_once(view, Correction::miller_madow) - mm) < 1e-12);
}

TEST_CASE("cell index numbers patterns in sorted order") {
  const auto d = parse_dataset("x,y,class\nb,q,0\na,p,1\nb,p,0\na,p,0\n");
  // codes: x b=0 a=1, y q=0 p=1 -> patterns (0,0) (1,1) (0,1) (1,1)
  const auto idx = CellIndex::build(project(d, all_variables(2)));
  CHECK(idx.cell_count == 3);
  CHECK(idx.row_cell == std::vector<std::uint32_t>{0, 2, 1, 2});
  const auto empty = CellIndex::build(project(d, {}));
  CHECK(empty.cell_count == 1);
  CHECK(empty.row_cell == std::vector<std::uint32_t>(4, 0));
}

TEST_CASE("property: uncorrected single pass equals the group-by plug-in") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = test::random_dataset(rng, 2 + rng() % 80, 1 + rng() % 4, 3);
    std::vector<VariableId> picked;
    for (std::uint32_t v = 0; v < d.num_variables(); ++v) {
      if (rng() % 2) picked.push_back(VariableId{v});
    }
    const auto vars = make_variable_set(picked);
    CHECK(std::abs(conditional_entropy_once(project(d, vars), Correction::none) -
                   test::ref_plugin_entropy(d, vars)) < 1e-12);
  }
}

TEST_CASE("constant class gives exactly zero") {
  const auto d = labels_only({1, 1, 1, 1, 1, 1, 1});
  const auto est = estimate(d, {}, EstimatorConfig{});
  CHECK(est.h_est == 0.0);
  CHECK(est.sigma_est == 0.0);
  CHECK(est.n_sub_used == 100);
}

TEST_CASE("identical subsample values give sigma exactly zero") {
  // Every half-sample of (0,0,1,1) with one cell per class is pure.
  const auto d = parse_dataset("x,class\na,0\na,0\nb,1\nb,1\n");
  const auto est = estimate(d, all_variables(1), EstimatorConfig{});
  CHECK(est.h_est == 0.0);
  CHECK(est.sigma_est == 0.0);
}

TEST_CASE("estimator config validation") {
  EstimatorConfig cfg;
  cfg.n_sub = 1;
  CHECK_THROWS_AS(cfg.validate(), InputError);
  const auto d = labels_only({0, 1, 0, 1});
  CHECK_THROWS_AS(estimate(d, {}, cfg), InputError);
  CHECK_THROWS_AS(estimate(d, {VariableId{0}}, EstimatorConfig{}), InputError);
  cfg.n_sub = 2;
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("reproducible for a given seed") {
  const auto d = sample_dataset(case_study_distribution(), 50, 12);
  EstimatorConfig cfg;
  cfg.seed = 77;
  const auto a = estimate(d, {VariableId{0}}, cfg);
  const auto b = estimate(d, {VariableId{0}}, cfg);
  CHECK(a.h_est == b.h_est);
  CHECK(a.sigma_est == b.sigma_est);
  cfg.seed = 78;
  const auto c = estimate(d, {VariableId{0}}, cfg);
  CHECK((c.h_est != a.h_est || c.sigma_est != a.sigma_est));
}

TEST_CASE("subsamples are drawn without replacement") {
  // m = 4 with labels (0,1,1,1): every 2-row subset without replacement is
  // either {0,1} (h = 1 + MM) with probability 1/2 or {1,1} (h = 0).
  // Drawing with replacement would also produce {0,0} and lower the mean.
  const auto d = labels_only({0, 1, 1, 1});
  EstimatorConfig cfg;
  cfg.n_sub = 20000;
  cfg.seed = 3;
  const auto est = estimate(d, {}, cfg);
  const double mixed = binary_entropy_mm(1, 1);
  const double expected = 0.5 * mixed;
  const double se = 0.5 * mixed / std::sqrt(static_cast<double>(cfg.n_sub));
  CHECK(std::abs(est.h_est - expected) < 4 * se);
  CHECK(std::abs(est.sigma_est - 0.5 * mixed) < 0.01);
}

TEST_CASE("subsample estimate tracks the truth on a large sample") {
  const auto j = case_study_distribution();
  const auto d = sample_dataset(j, 20000, 5);
  EstimatorConfig cfg;
  cfg.n_sub = 20;
  for (auto vars : {VariableSet{}, VariableSet{VariableId{0}}, VariableSet{VariableId{0}, VariableId{1}}}) {
    const auto est = estimate(d, vars, cfg);
    CHECK(std::abs(est.h_est - exact_conditional_entropy(j, vars)) < 0.02);
    CHECK(est.sigma_est > 0.0);
    CHECK(est.sigma_est < 0.02);
    CHECK(est.subset == vars);
  }
}

TEST_CASE("correction names") {
  CHECK(to_string(Correction::none) == "none");
  CHECK(to_string(Correction::miller_madow) == "miller_madow");
}
