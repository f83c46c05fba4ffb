#ifndef DSEL_MONTECARLO_HPP
#define DSEL_MONTECARLO_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dsel/distribution.hpp"
#include "dsel/selection.hpp"

namespace dsel {

struct ExperimentPlan {
  JointDistribution distribution = case_study_distribution();
  std::string distribution_name = std::string(kCaseStudyName);
  std::vector<std::size_t> sample_sizes{10, 20, 50};
  std::size_t replicates = 2000;
  SelectionConfig selection;
  std::uint64_t master_seed = 0;

  /// Throws InputError on an empty size list, sizes < 2 or zero replicates.
  void validate() const;
};

/// Seed for replicate r at sample size m. The dataset is drawn with this
/// seed; selection uses derive_seed({seed, 1}).
std::uint64_t replicate_seed(std::uint64_t master_seed, std::size_t m, std::size_t r) noexcept;

struct Moments {
  std::size_t count = 0;
  double mean = 0.0;
  double sd = 0.0;  // sample standard deviation, 0 when count < 2
};

/// Five-number summary plus moments, for redrawing box plots.
struct Spread {
  std::size_t count = 0;
  /// Values at +/- kScoreCap, left out of every other field.
  std::size_t capped = 0;
  double mean = 0.0;
  double sd = 0.0;
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};

Moments compute_moments(const std::vector<double>& values);
Spread compute_spread(std::vector<double> values);

inline constexpr std::size_t kTerminationKinds = 4;

struct SizeReport {
  std::size_t sample_size = 0;
  /// [iteration - 1][variable]: replicates choosing that variable there.
  std::vector<std::vector<std::uint64_t>> selection_counts;
  /// [iteration - 1]: replicates whose final set holds at most `iteration`
  /// variables, i.e. that stopped once iteration `iteration` was done.
  std::vector<std::uint64_t> stop_counts;
  /// [iteration - 1]: replicates that never recorded step `iteration`. At
  /// iteration 1 these are zero-step runs; later it equals the previous
  /// iteration's stop count.
  std::vector<std::uint64_t> not_reached_counts;
  /// [iteration - 1]: chosen-step h_est and k* over replicates reaching it.
  /// Capped k* values are counted in capped_k and excluded from chosen_k.
  std::vector<Moments> chosen_h;
  std::vector<Moments> chosen_k;
  std::vector<std::uint64_t> capped_k;
  /// [iteration - 1][variable]: every candidate evaluation, stopping
  /// iterations included.
  std::vector<std::vector<Spread>> candidate_h;
  std::vector<std::vector<Spread>> candidate_k;
  /// Indexed by Termination.
  std::array<std::uint64_t, kTerminationKinds> terminations{};
};

struct SimulationReport {
  std::string distribution_name;
  std::vector<std::string> variable_names;
  std::size_t replicates = 0;
  std::size_t iterations = 0;
  std::uint64_t master_seed = 0;
  SelectionConfig selection;
  std::string generator;
  std::vector<SizeReport> sizes;
  /// Not serialized; machine output must be reproducible byte for byte.
  double wall_seconds = 0.0;

  std::size_t size_index(std::size_t sample_size) const;
  /// Percent of all replicates choosing `v` at `iteration` (1-based).
  double selection_frequency(std::size_t size_idx, std::size_t iteration, VariableId v) const;
  /// Percent of replicates still running at `iteration` that chose `v`.
  double surviving_frequency(std::size_t size_idx, std::size_t iteration, VariableId v) const;
  /// Percent of replicates stopped at or before `iteration`: no variable
  /// was added after it.
  double stop_rate(std::size_t size_idx, std::size_t iteration) const;
  /// Percent of replicates that never recorded step `iteration`. Per
  /// iteration, the selection frequencies plus this add up to 100.
  double not_reached_rate(std::size_t size_idx, std::size_t iteration) const;
};

/// Called after each finished replicate with (completed, total).
using ProgressSink = std::function<void(std::size_t, std::size_t)>;

/// Runs every (size, replicate) pair and aggregates. The result depends only
/// on the plan, never on `threads` or scheduling.
SimulationReport run_experiment(const ExperimentPlan& plan, const ProgressSink& progress = {},
                                std::size_t threads = 1);

struct DivergenceCell {
  std::string quantity;
  std::size_t sample_size = 0;
  std::size_t iteration = 0;
  std::string variable;  // empty for per-iteration quantities
  double a = 0.0;
  double b = 0.0;
  double abs_diff = 0.0;
};

struct DivergenceSummary {
  std::vector<DivergenceCell> cells;
  double max_frequency = 0.0;
  double max_stop_rate = 0.0;
  double max_moment = 0.0;
  double max_overall = 0.0;
};

/// Cell-by-cell absolute differences. Throws InputError when the reports
/// differ in sample sizes, iteration count or roster.
DivergenceSummary compare_reports(const SimulationReport& a, const SimulationReport& b);

nlohmann::json to_json(const SimulationReport& report);
nlohmann::json to_json(const SelectionConfig& cfg);

/// Long-format delimited tables. Numbers carry full precision.
std::string selection_table(const SimulationReport& report, char delimiter = ',');
std::string stop_table(const SimulationReport& report, char delimiter = ',');
std::string moments_table(const SimulationReport& report, char delimiter = ',');
std::string candidate_table(const SimulationReport& report, char delimiter = ',');

}  // namespace dsel

#endif  // DSEL_MONTECARLO_HPP
