#include "dsel/distribution.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "delimited.hpp"
#include "dsel/error.hpp"
#include "dsel/rng.hpp"

namespace dsel {

namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    names[i] = "X" + std::to_string(i + 1);
  }
  return names;
}

std::size_t checked_table_size(std::span<const std::uint32_t> arity) {
  std::size_t size = 2;
  for (auto a : arity) {
    if (a == 0) {
      throw InputError("variable arity must be at least 1");
    }
    if (size > kMaxTableEntries / a) {
      throw InputError("probability table would exceed " + std::to_string(kMaxTableEntries) + " entries");
    }
    size *= a;
  }
  return size;
}

// Decodes a flat index into its variable tuple; returns the class bit.
int decode(std::size_t index, std::span<const std::uint32_t> arity, std::span<CategoryCode> values) {
  const int class_bit = static_cast<int>(index % 2);
  index /= 2;
  for (std::size_t v = arity.size(); v-- > 0;) {
    values[v] = static_cast<CategoryCode>(index % arity[v]);
    index /= arity[v];
  }
  return class_bit;
}

}  // namespace

JointDistribution::JointDistribution(std::vector<std::uint32_t> arity, std::vector<double> table,
                                     std::vector<std::string> variable_names)
    : arity_(std::move(arity)), table_(std::move(table)), names_(std::move(variable_names)) {
  const std::size_t expected = checked_table_size(arity_);
  if (table_.size() != expected) {
    throw InputError("probability table has " + std::to_string(table_.size()) + " entries, expected " +
                     std::to_string(expected));
  }
  if (names_.empty()) {
    names_ = default_names(arity_.size());
  } else if (names_.size() != arity_.size()) {
    throw InputError("variable names do not match the number of variables");
  }
  double total = 0.0;
  for (double p : table_) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw InputError("probabilities must be finite and non-negative");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "probabilities sum to " << total << ", expected 1 (tolerance 1e-12)";
    throw InputError(msg.str());
  }
}

std::size_t JointDistribution::index_of(std::span<const CategoryCode> values, int class_bit) const {
  if (values.size() != arity_.size() || (class_bit != 0 && class_bit != 1)) {
    throw std::invalid_argument("pattern does not match the distribution's roster");
  }
  std::size_t index = 0;
  for (std::size_t v = 0; v < arity_.size(); ++v) {
    if (values[v] >= arity_[v]) {
      throw std::invalid_argument("value out of range for variable " + names_[v]);
    }
    index = index * arity_[v] + values[v];
  }
  return index * 2 + static_cast<std::size_t>(class_bit);
}

double JointDistribution::probability(std::span<const CategoryCode> values, int class_bit) const {
  return table_[index_of(values, class_bit)];
}

double JointDistribution::class_zero_probability() const noexcept {
  double p0 = 0.0;
  for (std::size_t i = 0; i < table_.size(); i += 2) {
    p0 += table_[i];
  }
  return p0;
}

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument("binary_entropy: argument outside [0, 1]");
  }
  if (x == 0.0 || x == 1.0) {
    return 0.0;
  }
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

std::vector<CellStats> marginal_cells(const JointDistribution& j, const VariableSet& vars) {
  const auto arity = j.arity();
  std::size_t cells = 1;
  for (auto v : vars) {
    if (v.index >= j.num_variables()) {
      throw InputError("unknown variable index " + std::to_string(v.index) + " (distribution has " +
                       std::to_string(j.num_variables()) + " variables)");
    }
    cells *= arity[v.index];
  }

  // mass[cell][class], cell numbered lexicographically over the selected arities.
  std::vector<std::array<double, 2>> mass(cells, {0.0, 0.0});
  std::vector<CategoryCode> values(j.num_variables());
  const auto table = j.table();
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] == 0.0) {
      continue;
    }
    const int c = decode(i, arity, values);
    std::size_t cell = 0;
    for (auto v : vars) {
      cell = cell * arity[v.index] + values[v.index];
    }
    mass[cell][static_cast<std::size_t>(c)] += table[i];
  }

  std::vector<CellStats> out;
  for (std::size_t cell = 0; cell < cells; ++cell) {
    const double p = mass[cell][0] + mass[cell][1];
    if (p <= 0.0) {
      continue;
    }
    CellStats stats;
    stats.pattern.resize(vars.size());
    std::size_t rest = cell;
    for (std::size_t k = vars.size(); k-- > 0;) {
      const auto a = arity[vars[k].index];
      stats.pattern[k] = static_cast<CategoryCode>(rest % a);
      rest /= a;
    }
    stats.p_pattern = p;
    stats.q_class_zero = std::clamp(mass[cell][0] / p, 0.0, 1.0);
    out.push_back(std::move(stats));
  }
  return out;
}

double exact_conditional_entropy(const JointDistribution& j, const VariableSet& vars) {
  double h = 0.0;
  for (const auto& cell : marginal_cells(j, vars)) {
    h += cell.p_pattern * binary_entropy(cell.q_class_zero);
  }
  return h;
}

JointDistribution case_study_distribution() {
  // P(X1, X2, C) in 96ths, rows (x1, x2, c) in lexicographic order.
  constexpr std::array<std::int64_t, 8> kNumerators96 = {23, 1, 9, 15, 4, 20, 0, 24};
  constexpr std::int64_t kDenominator = 96 * 8;  // X3..X5 uniform: divide by 2^3

  const std::vector<std::uint32_t> arity(5, 2);
  std::vector<double> table(64);
  std::vector<CategoryCode> values(5);
  for (std::size_t i = 0; i < table.size(); ++i) {
    const int c = decode(i, arity, values);
    const auto row = (values[0] * 2 + values[1]) * 2 + static_cast<std::size_t>(c);
    table[i] = static_cast<double>(kNumerators96[row]) / static_cast<double>(kDenominator);
  }
  return JointDistribution(arity, std::move(table), default_names(5));
}

JointDistribution empirical_distribution(const Dataset& sample) {
  std::vector<std::uint32_t> arity(sample.category_counts().begin(), sample.category_counts().end());
  std::vector<std::uint64_t> counts(checked_table_size(arity), 0);
  const auto labels = sample.class_labels();
  for (std::size_t r = 0; r < sample.rows(); ++r) {
    std::size_t index = 0;
    for (std::size_t v = 0; v < arity.size(); ++v) {
      index = index * arity[v] + sample.column(VariableId{static_cast<std::uint32_t>(v)})[r];
    }
    ++counts[index * 2 + labels[r]];
  }
  std::vector<double> table(counts.size());
  const auto m = static_cast<double>(sample.rows());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    table[i] = static_cast<double>(counts[i]) / m;
  }
  return JointDistribution(std::move(arity), std::move(table), sample.variable_names());
}

Dataset sample_dataset(const JointDistribution& j, std::size_t m, std::uint64_t seed) {
  if (m < 2) {
    throw InputError("sample size must be at least 2, got " + std::to_string(m));
  }
  const auto table = j.table();
  std::vector<double> cdf(table.size());
  std::partial_sum(table.begin(), table.end(), cdf.begin());
  const double total = cdf.back();

  Generator rng(seed);
  const std::size_t n_vars = j.num_variables();
  std::vector<std::uint8_t> labels(m);
  std::vector<std::vector<CategoryCode>> columns(n_vars, std::vector<CategoryCode>(m));
  std::vector<CategoryCode> values(n_vars);
  for (std::size_t r = 0; r < m; ++r) {
    const double u = rng.uniform01() * total;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) {
      // u rounded up to total; take the last entry with positive mass.
      it = std::prev(cdf.end());
      while (table[static_cast<std::size_t>(it - cdf.begin())] == 0.0) {
        --it;
      }
    }
    const int c = decode(static_cast<std::size_t>(it - cdf.begin()), j.arity(), values);
    labels[r] = static_cast<std::uint8_t>(c);
    for (std::size_t v = 0; v < n_vars; ++v) {
      columns[v][r] = values[v];
    }
  }
  std::vector<std::uint32_t> arity(j.arity().begin(), j.arity().end());
  return Dataset(std::move(labels), std::move(columns), j.variable_names(), std::move(arity));
}

double parse_probability(std::string_view text) {
  text = detail::trim(text);
  auto parse_number = [&](std::string_view s) {
    const std::string owned(s);
    char* end = nullptr;
    const double value = std::strtod(owned.c_str(), &end);
    if (owned.empty() || end != owned.c_str() + owned.size() || !std::isfinite(value)) {
      throw InputError("cannot parse probability '" + std::string(text) + "'");
    }
    return value;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return parse_number(text);
  }
  const double num = parse_number(detail::trim(text.substr(0, slash)));
  const double den = parse_number(detail::trim(text.substr(slash + 1)));
  if (den == 0.0) {
    throw InputError("zero denominator in probability '" + std::string(text) + "'");
  }
  return num / den;
}

JointDistribution parse_distribution(std::string_view text, const CsvOptions& options) {
  const auto table = detail::parse_delimited(text, options.delimiter);
  std::optional<std::size_t> class_index;
  std::optional<std::size_t> prob_index;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    const auto& name = table.header[i];
    if (name == options.class_column) {
      class_index = i;
    } else if (name == "p" || name == "prob" || name == "probability") {
      if (prob_index) {
        throw InputError("more than one probability column");
      }
      prob_index = i;
    }
  }
  if (!class_index) {
    throw InputError("class column '" + options.class_column + "' not found in header");
  }
  if (!prob_index) {
    throw InputError("no probability column (expected 'p', 'prob' or 'probability')");
  }

  std::vector<std::size_t> var_columns;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i != *class_index && i != *prob_index) {
      var_columns.push_back(i);
      names.push_back(table.header[i]);
    }
  }

  struct Entry {
    std::vector<CategoryCode> values;
    int class_bit;
    double p;
    std::size_t line;
  };
  std::vector<Entry> entries;
  std::vector<std::uint32_t> arity(var_columns.size(), 1);
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const auto line = table.line_numbers[r];
    Entry e{std::vector<CategoryCode>(var_columns.size()), 0, 0.0, line};
    for (std::size_t k = 0; k < var_columns.size(); ++k) {
      const auto& field = row[var_columns[k]];
      unsigned long code = 0;
      auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), code);
      if (ec != std::errc{} || ptr != field.data() + field.size() || code > 0xffffffffUL) {
        throw InputError("line " + std::to_string(line) + ": column '" + names[k] +
                         "' must hold a non-negative integer code, got '" + field + "'");
      }
      e.values[k] = static_cast<CategoryCode>(code);
      arity[k] = std::max<std::uint32_t>(arity[k], static_cast<std::uint32_t>(code) + 1);
    }
    const auto& cls = row[*class_index];
    if (cls != "0" && cls != "1") {
      throw InputError("line " + std::to_string(line) + ": class value '" + cls + "' is not 0 or 1");
    }
    e.class_bit = cls == "1" ? 1 : 0;
    try {
      e.p = parse_probability(row[*prob_index]);
    } catch (const InputError& err) {
      throw InputError("line " + std::to_string(line) + ": " + err.what());
    }
    entries.push_back(std::move(e));
  }

  std::vector<double> flat(checked_table_size(arity), 0.0);
  std::vector<bool> seen(flat.size(), false);
  for (const auto& e : entries) {
    std::size_t index = 0;
    for (std::size_t k = 0; k < arity.size(); ++k) {
      index = index * arity[k] + e.values[k];
    }
    index = index * 2 + static_cast<std::size_t>(e.class_bit);
    if (seen[index]) {
      throw InputError("line " + std::to_string(e.line) + ": duplicate entry for this pattern and class");
    }
    seen[index] = true;
    flat[index] = e.p;
  }
  return JointDistribution(std::move(arity), std::move(flat), std::move(names));
}

JointDistribution load_distribution(const std::filesystem::path& path, const CsvOptions& options) {
  try {
    return parse_distribution(detail::read_file(path), options);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

}  // namespace dsel
