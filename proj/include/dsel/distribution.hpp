#ifndef DSEL_DISTRIBUTION_HPP
#define DSEL_DISTRIBUTION_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dsel/dataset.hpp"

namespace dsel {

/// Name under which the built-in five-variable case study is addressable.
inline constexpr std::string_view kCaseStudyName = "case-study";

/// Explicit probability table over (variable tuple, class bit).
///
/// Entries are stored densely in lexicographic order of the tuple
/// (x_1, ..., x_N, c), class bit fastest. That order is also the
/// inverse-CDF order used by sample_dataset.
class JointDistribution {
 public:
  /// Throws InputError unless probabilities are non-negative, sum to 1
  /// within 1e-12, and the table size matches 2 * prod(arity).
  JointDistribution(std::vector<std::uint32_t> arity, std::vector<double> table,
                    std::vector<std::string> variable_names = {});

  std::size_t num_variables() const noexcept { return arity_.size(); }
  std::span<const std::uint32_t> arity() const noexcept { return arity_; }
  std::span<const double> table() const noexcept { return table_; }
  const std::vector<std::string>& variable_names() const noexcept { return names_; }

  /// Flat table index of (values, class_bit).
  std::size_t index_of(std::span<const CategoryCode> values, int class_bit) const;
  double probability(std::span<const CategoryCode> values, int class_bit) const;
  /// P(C = 0).
  double class_zero_probability() const noexcept;

 private:
  std::vector<std::uint32_t> arity_;
  std::vector<double> table_;
  std::vector<std::string> names_;
};

/// Largest flat table accepted, in entries.
inline constexpr std::size_t kMaxTableEntries = std::size_t{1} << 26;

/// Realized pattern of a variable subset with its weight and P(C=0 | pattern).
struct CellStats {
  std::vector<CategoryCode> pattern;
  double p_pattern = 0.0;
  double q_class_zero = 0.0;
};

/// Shannon entropy of a Bernoulli(x) variable in bits, with 0 log 0 = 0.
/// Throws std::invalid_argument outside [0, 1].
double binary_entropy(double x);

/// Marginal cells of `vars`, in lexicographic pattern order. Cells with zero
/// mass are omitted.
std::vector<CellStats> marginal_cells(const JointDistribution& j, const VariableSet& vars);

/// H(C | vars) = sum over patterns of p(pattern) * h(q_pattern).
double exact_conditional_entropy(const JointDistribution& j, const VariableSet& vars);

/// Five independent uniform binary variables; only X1 and X2 drive the class.
/// Built from integer numerators over 768 before any floating conversion.
JointDistribution case_study_distribution();

/// Plug-in distribution of a sample: relative frequency of each row pattern.
JointDistribution empirical_distribution(const Dataset& sample);

/// m i.i.d. draws by inverse CDF over the flat table. Bit-reproducible for
/// identical (j, m, seed).
Dataset sample_dataset(const JointDistribution& j, std::size_t m, std::uint64_t seed);

/// Reads a delimited table with one row per (pattern, class) entry. Variable
/// columns hold integer codes, `class_column` holds 0/1, and a column named
/// `p`, `prob` or `probability` holds either a decimal or an "a/b" rational.
/// Unlisted entries have probability zero.
JointDistribution load_distribution(const std::filesystem::path& path, const CsvOptions& options = {});
JointDistribution parse_distribution(std::string_view text, const CsvOptions& options = {});

/// Parses "a/b" or a decimal literal. Throws InputError.
double parse_probability(std::string_view text);

}  // namespace dsel

#endif  // DSEL_DISTRIBUTION_HPP
