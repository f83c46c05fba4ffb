#ifndef DSEL_ESTIMATOR_HPP
#define DSEL_ESTIMATOR_HPP

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "dsel/dataset.hpp"

namespace dsel {

enum class Correction { none, miller_madow };

std::string_view to_string(Correction c) noexcept;

/// Settings for the half-size subsampling estimator. The subsample size is
/// always floor(m / 2).
struct EstimatorConfig {
  std::size_t n_sub = 100;
  Correction correction = Correction::miller_madow;
  std::uint64_t seed = 0;

  /// Throws InputError when n_sub < 2.
  void validate() const;
};

struct EntropyEstimate {
  double h_est = 0.0;
  double sigma_est = 0.0;
  std::size_t n_sub_used = 0;
  VariableSet subset;
};

/// Plug-in binary entropy of the class counts in one cell, plus the
/// Miller-Madow term (K - 1) / (2 N ln 2) bits where K is the number of
/// non-empty classes. Not clamped to [0, 1].
double binary_entropy_mm(std::size_t count_c0, std::size_t count_c1);

/// binary_entropy_mm or the uncorrected plug-in value, per `correction`.
double cell_entropy(std::size_t count_c0, std::size_t count_c1, Correction correction);

/// Class counts of one realized pattern.
struct CellCount {
  std::array<std::size_t, 2> by_class{0, 0};
};

/// sum_j (N_j / n) * cell_entropy(cell j). Cells are summed in the order
/// given; empty cells contribute nothing.
double weighted_cell_entropy(const std::vector<CellCount>& cells, std::size_t n, Correction correction);

/// Assigns each row the index of its pattern over `view`'s variables.
/// Patterns are numbered in sorted (lexicographic) order, so any sum taken
/// in index order is independent of row order and platform.
struct CellIndex {
  std::vector<std::uint32_t> row_cell;
  std::size_t cell_count = 0;

  static CellIndex build(const DatasetView& view);
};

/// Conditional entropy of the class given the view's variables over every
/// row of the view (no resampling).
double conditional_entropy_once(const DatasetView& sample, Correction correction);

/// Mean and sample standard deviation (n_sub - 1 denominator) of the
/// conditional entropy over n_sub subsamples of floor(m/2) distinct rows.
/// Subsample s draws from its own stream derived from (cfg.seed, s).
EntropyEstimate estimate(const Dataset& sample, const VariableSet& vars, const EstimatorConfig& cfg);

}  // namespace dsel

#endif  // DSEL_ESTIMATOR_HPP
