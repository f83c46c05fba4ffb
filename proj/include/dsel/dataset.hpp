#ifndef DSEL_DATASET_HPP
#define DSEL_DATASET_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dsel {

/// Position of a variable in a dataset's (or distribution's) roster.
struct VariableId {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(VariableId, VariableId) = default;
};

/// Sorted, duplicate-free list of variables.
using VariableSet = std::vector<VariableId>;

/// Sorts and deduplicates.
VariableSet make_variable_set(std::vector<VariableId> ids);
VariableSet all_variables(std::size_t count);

using CategoryCode = std::uint32_t;

/// m observations of a binary class plus N_X discrete variables. Immutable
/// once constructed; the constructor enforces every invariant.
class Dataset {
 public:
  /// category_labels may be empty, in which case codes print as integers.
  Dataset(std::vector<std::uint8_t> class_labels, std::vector<std::vector<CategoryCode>> columns,
          std::vector<std::string> variable_names, std::vector<std::uint32_t> category_counts,
          std::vector<std::vector<std::string>> category_labels = {});

  std::size_t rows() const noexcept { return class_labels_.size(); }
  std::size_t num_variables() const noexcept { return columns_.size(); }

  std::span<const std::uint8_t> class_labels() const noexcept { return class_labels_; }
  std::span<const CategoryCode> column(VariableId v) const { return columns_.at(v.index); }
  const std::string& variable_name(VariableId v) const { return names_.at(v.index); }
  const std::vector<std::string>& variable_names() const noexcept { return names_; }
  std::uint32_t category_count(VariableId v) const { return category_counts_.at(v.index); }
  std::span<const std::uint32_t> category_counts() const noexcept { return category_counts_; }

  /// Original string for a code, or the decimal code if no labels were kept.
  std::string category_label(VariableId v, CategoryCode code) const;

  std::optional<VariableId> find_variable(std::string_view name) const;

  /// Stable 64-bit FNV-1a hash over class labels and columns.
  std::uint64_t content_hash() const noexcept;

 private:
  std::vector<std::uint8_t> class_labels_;
  std::vector<std::vector<CategoryCode>> columns_;
  std::vector<std::string> names_;
  std::vector<std::uint32_t> category_counts_;
  std::vector<std::vector<std::string>> category_labels_;
};

/// Read-only view of a dataset restricted to a subset of its variables.
/// Holds a reference; the dataset must outlive the view.
class DatasetView {
 public:
  DatasetView(const Dataset& source, VariableSet vars);

  std::size_t rows() const noexcept { return source_->rows(); }
  std::size_t width() const noexcept { return vars_.size(); }
  const VariableSet& variables() const noexcept { return vars_; }
  const Dataset& source() const noexcept { return *source_; }

  std::uint8_t class_label(std::size_t row) const { return source_->class_labels()[row]; }
  /// Value of the position-th selected variable at row.
  CategoryCode value(std::size_t row, std::size_t position) const {
    return source_->column(vars_[position])[row];
  }

 private:
  const Dataset* source_;
  VariableSet vars_;
};

/// Throws InputError if any id is outside the roster.
DatasetView project(const Dataset& d, const VariableSet& vars);

struct CsvOptions {
  char delimiter = ',';
  std::string class_column = "class";
};

/// Parses a delimited file with a header row. Non-class columns become
/// variables in file order; categories get dense codes in first-appearance
/// order.
Dataset load_dataset(const std::filesystem::path& path, const CsvOptions& options = {});
Dataset parse_dataset(std::string_view text, const CsvOptions& options = {});

/// Writes variables in roster order followed by the class column.
void write_dataset(const Dataset& d, const std::filesystem::path& path, const CsvOptions& options = {});
std::string format_dataset(const Dataset& d, const CsvOptions& options = {});

}  // namespace dsel

#endif  // DSEL_DATASET_HPP
