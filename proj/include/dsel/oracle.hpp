#ifndef DSEL_ORACLE_HPP
#define DSEL_ORACLE_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include "dsel/dataset.hpp"
#include "dsel/distribution.hpp"

namespace dsel {

/// Exhaustive search refuses rosters larger than this.
inline constexpr std::size_t kOracleMaxVariables = 20;

enum class EvaluationSource { exact_distribution, empirical_sample };

std::string_view to_string(EvaluationSource s) noexcept;

struct SubsetEvaluation {
  VariableSet subset;
  double entropy = 0.0;
  EvaluationSource source = EvaluationSource::exact_distribution;
};

/// H(C | D) for every subset D of the roster, ∅ included. Sorted by entropy
/// (values within 1e-12 count as equal), then cardinality, then
/// lexicographic index order.
std::vector<SubsetEvaluation> exhaustive_exact(const JointDistribution& j);

/// Same enumeration on the full-sample plug-in entropy (no resampling, no
/// bias correction).
std::vector<SubsetEvaluation> exhaustive_empirical(const Dataset& sample);

/// Position in a ranked list of the smallest subset attaining the minimum
/// entropy within `tolerance`. The list must be non-empty and sorted as
/// returned by the exhaustive functions.
std::size_t minimal_minimizer(const std::vector<SubsetEvaluation>& ranked, double tolerance = 1e-12);

}  // namespace dsel

#endif  // DSEL_ORACLE_HPP
