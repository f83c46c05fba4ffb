#ifndef DSEL_SELECTION_HPP
#define DSEL_SELECTION_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "dsel/dataset.hpp"
#include "dsel/estimator.hpp"

namespace dsel {

/// Stand-in for +/- infinity when a score's denominator is zero. Keeps
/// argmax semantics without producing inf/nan in reports.
inline constexpr double kScoreCap = 1e9;

struct SelectionConfig {
  double k_min = 0.01;
  double f_min = 0.0;
  std::optional<std::size_t> max_iterations;
  EstimatorConfig estimator;

  /// Throws InputError unless k_min >= 0, 0 <= f_min < 1, and the estimator
  /// config is valid.
  void validate() const;
};

struct CandidateScore {
  VariableId variable;
  /// Estimate for the accumulated set plus `variable`.
  EntropyEstimate estimate;
  double k = 0.0;
  double f = 0.0;
};

struct SelectionStep {
  std::size_t iteration = 0;
  VariableId chosen;
  EntropyEstimate chosen_estimate;
  double k_star = 0.0;
  double f_star = 0.0;
  std::vector<CandidateScore> candidates;
  /// Lower bound on the entropy removed by this step:
  /// k* sigma for the first step, k* (sigma_prev + sigma) afterwards.
  double entropy_reduction_lower_bound = 0.0;
};

enum class Termination { exhausted_variables, below_f_min, no_positive_k, max_iterations };

std::string_view to_string(Termination t) noexcept;

struct DatasetFingerprint {
  std::size_t rows = 0;
  std::size_t variables = 0;
  std::uint64_t content_hash = 0;
};

struct SelectionTrace {
  std::vector<SelectionStep> steps;
  Termination termination = Termination::exhausted_variables;
  /// Candidate scores of the iteration that stopped the run, if any were
  /// computed. Kept for reporting; not a recorded step.
  std::vector<CandidateScore> rejected_candidates;
  SelectionConfig config;
  DatasetFingerprint fingerprint;

  VariableSet selected() const;
};

/// Cantelli one-sided confidence k^2 / (1 + k^2); zero for k <= 0.
double cantelli_confidence(double k) noexcept;

/// (1 - h) / sigma: how many sigmas the estimate sits below an uninformative
/// entropy of one bit.
double score_first(const EntropyEstimate& est) noexcept;

/// (h_prev - h_cand) / (sigma_prev + sigma_cand): the k at which the previous
/// set's lower bound meets the candidate's upper bound.
double score_extension(const EntropyEstimate& prev, const EntropyEstimate& cand) noexcept;

/// Greedy forward selection ranked by Cantelli confidence. Each candidate's
/// estimate uses a seed derived from (cfg.estimator.seed, iteration,
/// variable index). Ties go to the lowest variable index.
SelectionTrace select_differential_set(const Dataset& sample, const SelectionConfig& cfg);

}  // namespace dsel

#endif  // DSEL_SELECTION_HPP
