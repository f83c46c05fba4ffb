#include "dsel/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "dsel/distribution.hpp"
#include "dsel/error.hpp"
#include "dsel/rng.hpp"

namespace dsel {

std::string_view to_string(Correction c) noexcept {
  switch (c) {
    case Correction::none:
      return "none";
    case Correction::miller_madow:
      return "miller_madow";
  }
  return "unknown";
}

void EstimatorConfig::validate() const {
  if (n_sub < 2) {
    throw InputError("number of subsamples must be at least 2, got " + std::to_string(n_sub));
  }
}

double cell_entropy(std::size_t count_c0, std::size_t count_c1, Correction correction) {
  const std::size_t total = count_c0 + count_c1;
  if (total == 0) {
    throw std::invalid_argument("cell entropy of an empty cell");
  }
  const double h = binary_entropy(static_cast<double>(count_c0) / static_cast<double>(total));
  if (correction == Correction::none) {
    return h;
  }
  const int nonzero = (count_c0 > 0 ? 1 : 0) + (count_c1 > 0 ? 1 : 0);
  return h + static_cast<double>(nonzero - 1) / (2.0 * static_cast<double>(total) * std::numbers::ln2);
}

double binary_entropy_mm(std::size_t count_c0, std::size_t count_c1) {
  return cell_entropy(count_c0, count_c1, Correction::miller_madow);
}

double weighted_cell_entropy(const std::vector<CellCount>& cells, std::size_t n, Correction correction) {
  double h = 0.0;
  const auto denom = static_cast<double>(n);
  for (const auto& cell : cells) {
    const std::size_t size = cell.by_class[0] + cell.by_class[1];
    if (size == 0) {
      continue;
    }
    h += static_cast<double>(size) / denom * cell_entropy(cell.by_class[0], cell.by_class[1], correction);
  }
  return h;
}

CellIndex CellIndex::build(const DatasetView& view) {
  CellIndex index;
  const std::size_t m = view.rows();
  index.row_cell.resize(m);
  if (view.width() == 0) {
    index.cell_count = 1;
    return index;
  }
  std::map<std::vector<CategoryCode>, std::uint32_t> ids;
  std::vector<std::vector<CategoryCode>> row_patterns(m, std::vector<CategoryCode>(view.width()));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k < view.width(); ++k) {
      row_patterns[r][k] = view.value(r, k);
    }
    ids.emplace(row_patterns[r], 0);
  }
  std::uint32_t next = 0;
  for (auto& [pattern, id] : ids) {
    id = next++;
  }
  for (std::size_t r = 0; r < m; ++r) {
    index.row_cell[r] = ids.at(row_patterns[r]);
  }
  index.cell_count = ids.size();
  return index;
}

double conditional_entropy_once(const DatasetView& sample, Correction correction) {
  if (sample.rows() == 0) {
    throw std::invalid_argument("conditional entropy of an empty sample");
  }
  const auto index = CellIndex::build(sample);
  std::vector<CellCount> cells(index.cell_count);
  for (std::size_t r = 0; r < sample.rows(); ++r) {
    ++cells[index.row_cell[r]].by_class[sample.class_label(r)];
  }
  return weighted_cell_entropy(cells, sample.rows(), correction);
}

EntropyEstimate estimate(const Dataset& sample, const VariableSet& vars, const EstimatorConfig& cfg) {
  cfg.validate();
  const auto view = project(sample, vars);
  const std::size_t m = sample.rows();
  const std::size_t n = m / 2;
  const auto index = CellIndex::build(view);
  const auto labels = sample.class_labels();

  std::vector<double> per_subsample(cfg.n_sub);
  std::vector<std::uint32_t> rows(m);
  std::vector<CellCount> cells(index.cell_count);
  for (std::size_t s = 0; s < cfg.n_sub; ++s) {
    Generator rng(derive_seed({cfg.seed, s}));
    std::iota(rows.begin(), rows.end(), 0U);
    // Partial Fisher-Yates: rows[0, n) becomes a uniform n-subset.
    for (std::size_t i = 0; i < n; ++i) {
      const auto j = i + static_cast<std::size_t>(rng.uniform_below(m - i));
      std::swap(rows[i], rows[j]);
    }
    std::fill(cells.begin(), cells.end(), CellCount{});
    for (std::size_t i = 0; i < n; ++i) {
      const auto r = rows[i];
      ++cells[index.row_cell[r]].by_class[labels[r]];
    }
    per_subsample[s] = weighted_cell_entropy(cells, n, cfg.correction);
  }

  EntropyEstimate out;
  out.n_sub_used = cfg.n_sub;
  out.subset = view.variables();
  if (std::all_of(per_subsample.begin(), per_subsample.end(),
                  [&](double h) { return h == per_subsample.front(); })) {
    // Exact: summing and dividing identical values can leave rounding residue.
    out.h_est = per_subsample.front();
    out.sigma_est = 0.0;
    return out;
  }

  const double count = static_cast<double>(cfg.n_sub);
  double sum = 0.0;
  for (double h : per_subsample) {
    sum += h;
  }
  const double mean = sum / count;
  double sq = 0.0;
  for (double h : per_subsample) {
    sq += (h - mean) * (h - mean);
  }
  out.h_est = mean;
  out.sigma_est = std::sqrt(sq / (count - 1.0));
  return out;
}

}  // namespace dsel
