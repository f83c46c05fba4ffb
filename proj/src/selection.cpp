#include "dsel/selection.hpp"

#include <cmath>

#include "dsel/error.hpp"
#include "dsel/rng.hpp"

namespace dsel {

namespace {

double capped_ratio(double numerator, double denominator) noexcept {
  if (denominator > 0.0) {
    return numerator / denominator;
  }
  if (numerator > 0.0) {
    return kScoreCap;
  }
  if (numerator < 0.0) {
    return -kScoreCap;
  }
  return 0.0;
}

}  // namespace

void SelectionConfig::validate() const {
  if (!(k_min >= 0.0) || !std::isfinite(k_min)) {
    throw InputError("k_min must be a finite value >= 0");
  }
  if (!(f_min >= 0.0 && f_min < 1.0)) {
    throw InputError("f_min must lie in [0, 1)");
  }
  estimator.validate();
}

std::string_view to_string(Termination t) noexcept {
  switch (t) {
    case Termination::exhausted_variables:
      return "exhausted_variables";
    case Termination::below_f_min:
      return "below_f_min";
    case Termination::no_positive_k:
      return "no_positive_k";
    case Termination::max_iterations:
      return "max_iterations";
  }
  return "unknown";
}

VariableSet SelectionTrace::selected() const {
  VariableSet out;
  for (const auto& step : steps) {
    out.push_back(step.chosen);
  }
  return make_variable_set(std::move(out));
}

double cantelli_confidence(double k) noexcept {
  if (!(k > 0.0)) {
    return 0.0;
  }
  const double k2 = k * k;
  return k2 / (1.0 + k2);
}

double score_first(const EntropyEstimate& est) noexcept {
  return capped_ratio(1.0 - est.h_est, est.sigma_est);
}

double score_extension(const EntropyEstimate& prev, const EntropyEstimate& cand) noexcept {
  return capped_ratio(prev.h_est - cand.h_est, prev.sigma_est + cand.sigma_est);
}

SelectionTrace select_differential_set(const Dataset& sample, const SelectionConfig& cfg) {
  cfg.validate();
  SelectionTrace trace;
  trace.config = cfg;
  trace.fingerprint = {sample.rows(), sample.num_variables(), sample.content_hash()};

  const std::size_t n_vars = sample.num_variables();
  std::vector<bool> taken(n_vars, false);
  VariableSet accumulated;

  for (std::size_t iteration = 1;; ++iteration) {
    if (accumulated.size() == n_vars) {
      trace.termination = Termination::exhausted_variables;
      break;
    }
    if (cfg.max_iterations && trace.steps.size() >= *cfg.max_iterations) {
      trace.termination = Termination::max_iterations;
      break;
    }

    const EntropyEstimate* prev = trace.steps.empty() ? nullptr : &trace.steps.back().chosen_estimate;
    std::vector<CandidateScore> candidates;
    for (std::size_t v = 0; v < n_vars; ++v) {
      if (taken[v]) {
        continue;
      }
      const VariableId id{static_cast<std::uint32_t>(v)};
      VariableSet extended = accumulated;
      extended.push_back(id);
      EstimatorConfig est_cfg = cfg.estimator;
      est_cfg.seed = derive_seed({cfg.estimator.seed, iteration, v});

      CandidateScore score;
      score.variable = id;
      score.estimate = estimate(sample, make_variable_set(std::move(extended)), est_cfg);
      score.k = prev ? score_extension(*prev, score.estimate) : score_first(score.estimate);
      score.f = cantelli_confidence(score.k);
      candidates.push_back(std::move(score));
    }

    // Strict comparison keeps the lowest index on ties.
    std::size_t best = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i) {
      if (candidates[i].k > candidates[best].k) {
        best = i;
      }
    }
    const double k_star = candidates[best].k;
    const double f_star = candidates[best].f;
    if (k_star <= cfg.k_min) {
      trace.termination = Termination::no_positive_k;
      trace.rejected_candidates = std::move(candidates);
      break;
    }
    if (f_star < cfg.f_min) {
      trace.termination = Termination::below_f_min;
      trace.rejected_candidates = std::move(candidates);
      break;
    }

    SelectionStep step;
    step.iteration = iteration;
    step.chosen = candidates[best].variable;
    step.chosen_estimate = candidates[best].estimate;
    step.k_star = k_star;
    step.f_star = f_star;
    step.entropy_reduction_lower_bound =
        prev ? k_star * (prev->sigma_est + step.chosen_estimate.sigma_est) : k_star * step.chosen_estimate.sigma_est;
    step.candidates = std::move(candidates);

    taken[step.chosen.index] = true;
    accumulated.push_back(step.chosen);
    accumulated = make_variable_set(std::move(accumulated));
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

}  // namespace dsel
