#include "dsel/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>

#include "dsel/error.hpp"
#include "dsel/estimator.hpp"

namespace dsel {

std::string_view to_string(EvaluationSource s) noexcept {
  switch (s) {
    case EvaluationSource::exact_distribution:
      return "exact_distribution";
    case EvaluationSource::empirical_sample:
      return "empirical_sample";
  }
  return "unknown";
}

namespace {

void check_guard(std::size_t n_vars) {
  if (n_vars > kOracleMaxVariables) {
    throw InputError("exhaustive search supports at most " + std::to_string(kOracleMaxVariables) +
                     " variables, got " + std::to_string(n_vars));
  }
}

VariableSet subset_from_mask(std::uint32_t mask, std::size_t n_vars) {
  VariableSet out;
  for (std::size_t i = 0; i < n_vars; ++i) {
    if (mask & (1U << i)) {
      out.push_back(VariableId{static_cast<std::uint32_t>(i)});
    }
  }
  return out;
}

// Entropies are bucketed on a 1e-12 grid so that values differing only by
// summation order compare equal and fall through to the secondary keys.
std::int64_t entropy_key(double h) { return std::llround(h * 1e12); }

std::vector<SubsetEvaluation> enumerate(std::size_t n_vars, EvaluationSource source,
                                        const std::function<double(const VariableSet&)>& entropy_of) {
  check_guard(n_vars);
  const std::uint32_t count = 1U << n_vars;
  std::vector<SubsetEvaluation> out;
  out.reserve(count);
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    auto subset = subset_from_mask(mask, n_vars);
    const double h = entropy_of(subset);
    out.push_back({std::move(subset), h, source});
  }
  std::sort(out.begin(), out.end(), [](const SubsetEvaluation& a, const SubsetEvaluation& b) {
    const auto ka = entropy_key(a.entropy);
    const auto kb = entropy_key(b.entropy);
    if (ka != kb) {
      return ka < kb;
    }
    if (a.subset.size() != b.subset.size()) {
      return a.subset.size() < b.subset.size();
    }
    return a.subset < b.subset;
  });
  return out;
}

}  // namespace

std::vector<SubsetEvaluation> exhaustive_exact(const JointDistribution& j) {
  return enumerate(j.num_variables(), EvaluationSource::exact_distribution,
                   [&](const VariableSet& s) { return exact_conditional_entropy(j, s); });
}

std::vector<SubsetEvaluation> exhaustive_empirical(const Dataset& sample) {
  return enumerate(sample.num_variables(), EvaluationSource::empirical_sample, [&](const VariableSet& s) {
    return conditional_entropy_once(project(sample, s), Correction::none);
  });
}

std::size_t minimal_minimizer(const std::vector<SubsetEvaluation>& ranked, double tolerance) {
  if (ranked.empty()) {
    throw std::invalid_argument("minimal_minimizer of an empty ranking");
  }
  double minimum = ranked.front().entropy;
  for (const auto& e : ranked) {
    minimum = std::min(minimum, e.entropy);
  }
  std::size_t best = ranked.size();
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    if (ranked[i].entropy > minimum + tolerance) {
      continue;
    }
    if (best == ranked.size() || ranked[i].subset.size() < ranked[best].subset.size() ||
        (ranked[i].subset.size() == ranked[best].subset.size() && ranked[i].subset < ranked[best].subset)) {
      best = i;
    }
  }
  return best;
}

}  // namespace dsel
