#include "dsel/dataset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "delimited.hpp"
#include "dsel/error.hpp"

namespace dsel {

VariableSet make_variable_set(std::vector<VariableId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

VariableSet all_variables(std::size_t count) {
  VariableSet out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = VariableId{static_cast<std::uint32_t>(i)};
  }
  return out;
}

Dataset::Dataset(std::vector<std::uint8_t> class_labels, std::vector<std::vector<CategoryCode>> columns,
                 std::vector<std::string> variable_names, std::vector<std::uint32_t> category_counts,
                 std::vector<std::vector<std::string>> category_labels)
    : class_labels_(std::move(class_labels)),
      columns_(std::move(columns)),
      names_(std::move(variable_names)),
      category_counts_(std::move(category_counts)),
      category_labels_(std::move(category_labels)) {
  const std::size_t m = class_labels_.size();
  if (m < 2) {
    throw InputError("dataset needs at least 2 observations, got " + std::to_string(m));
  }
  for (std::size_t r = 0; r < m; ++r) {
    if (class_labels_[r] > 1) {
      throw InputError("class label at row " + std::to_string(r + 1) + " is not 0 or 1");
    }
  }
  if (names_.size() != columns_.size() || category_counts_.size() != columns_.size()) {
    throw InputError("variable names, category counts and columns disagree in length");
  }
  if (!category_labels_.empty() && category_labels_.size() != columns_.size()) {
    throw InputError("category labels given for some but not all variables");
  }
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (!seen.insert(names_[i]).second) {
      throw InputError("duplicate variable name '" + names_[i] + "'");
    }
    if (columns_[i].size() != m) {
      throw InputError("column '" + names_[i] + "' has " + std::to_string(columns_[i].size()) +
                       " values, expected " + std::to_string(m));
    }
    for (std::size_t r = 0; r < m; ++r) {
      if (columns_[i][r] >= category_counts_[i]) {
        throw InputError("column '" + names_[i] + "' row " + std::to_string(r + 1) + ": code " +
                         std::to_string(columns_[i][r]) + " outside [0, " +
                         std::to_string(category_counts_[i]) + ")");
      }
    }
    if (!category_labels_.empty() && category_labels_[i].size() != category_counts_[i]) {
      throw InputError("column '" + names_[i] + "' has a label table of the wrong size");
    }
  }
}

std::string Dataset::category_label(VariableId v, CategoryCode code) const {
  if (category_labels_.empty()) {
    return std::to_string(code);
  }
  return category_labels_.at(v.index).at(code);
}

std::optional<VariableId> Dataset::find_variable(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) {
      return VariableId{static_cast<std::uint32_t>(i)};
    }
  }
  return std::nullopt;
}

std::uint64_t Dataset::content_hash() const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](std::uint64_t word) {
    for (int b = 0; b < 8; ++b) {
      h ^= (word >> (8 * b)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  feed(class_labels_.size());
  feed(columns_.size());
  for (auto c : class_labels_) {
    feed(c);
  }
  for (const auto& col : columns_) {
    for (auto v : col) {
      feed(v);
    }
  }
  return h;
}

DatasetView::DatasetView(const Dataset& source, VariableSet vars) : source_(&source), vars_(std::move(vars)) {}

DatasetView project(const Dataset& d, const VariableSet& vars) {
  for (auto v : vars) {
    if (v.index >= d.num_variables()) {
      throw InputError("unknown variable index " + std::to_string(v.index) + " (dataset has " +
                       std::to_string(d.num_variables()) + " variables)");
    }
  }
  return DatasetView(d, make_variable_set(vars));
}

Dataset parse_dataset(std::string_view text, const CsvOptions& options) {
  const auto table = detail::parse_delimited(text, options.delimiter);

  std::optional<std::size_t> class_index;
  std::unordered_set<std::string> names;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (!names.insert(table.header[i]).second) {
      throw InputError("duplicate column '" + table.header[i] + "' in header");
    }
    if (table.header[i] == options.class_column) {
      class_index = i;
    }
  }
  if (!class_index) {
    throw InputError("class column '" + options.class_column + "' not found in header");
  }

  const std::size_t m = table.rows.size();
  const std::size_t width = table.header.size();
  std::vector<std::uint8_t> labels(m);
  std::vector<std::vector<CategoryCode>> columns(width - 1, std::vector<CategoryCode>(m));
  std::vector<std::string> variable_names;
  std::vector<std::vector<std::string>> category_labels(width - 1);
  std::vector<std::unordered_map<std::string, CategoryCode>> codebooks(width - 1);
  for (std::size_t i = 0; i < width; ++i) {
    if (i != *class_index) {
      variable_names.push_back(table.header[i]);
    }
  }

  for (std::size_t r = 0; r < m; ++r) {
    const auto& row = table.rows[r];
    std::size_t var = 0;
    for (std::size_t i = 0; i < width; ++i) {
      if (i == *class_index) {
        if (row[i] == "0") {
          labels[r] = 0;
        } else if (row[i] == "1") {
          labels[r] = 1;
        } else {
          throw InputError("line " + std::to_string(table.line_numbers[r]) + ": class value '" + row[i] +
                           "' in column '" + options.class_column + "' is not 0 or 1");
        }
        continue;
      }
      auto [it, inserted] =
          codebooks[var].try_emplace(row[i], static_cast<CategoryCode>(category_labels[var].size()));
      if (inserted) {
        category_labels[var].push_back(row[i]);
      }
      columns[var][r] = it->second;
      ++var;
    }
  }

  std::vector<std::uint32_t> counts(width - 1);
  for (std::size_t v = 0; v + 1 < width; ++v) {
    // An all-missing column cannot occur (m >= 1 rows each with a value), but an
    // empty table still needs arity 1 to satisfy the dataset invariants.
    counts[v] = std::max<std::uint32_t>(1, static_cast<std::uint32_t>(category_labels[v].size()));
    if (category_labels[v].empty()) {
      category_labels[v].push_back("0");
    }
  }
  return Dataset(std::move(labels), std::move(columns), std::move(variable_names), std::move(counts),
                 std::move(category_labels));
}

Dataset load_dataset(const std::filesystem::path& path, const CsvOptions& options) {
  try {
    return parse_dataset(detail::read_file(path), options);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string format_dataset(const Dataset& d, const CsvOptions& options) {
  std::ostringstream out;
  for (const auto& name : d.variable_names()) {
    out << name << options.delimiter;
  }
  out << options.class_column << '\n';
  const auto labels = d.class_labels();
  for (std::size_t r = 0; r < d.rows(); ++r) {
    for (std::size_t v = 0; v < d.num_variables(); ++v) {
      const VariableId id{static_cast<std::uint32_t>(v)};
      out << d.category_label(id, d.column(id)[r]) << options.delimiter;
    }
    out << static_cast<int>(labels[r]) << '\n';
  }
  return out.str();
}

void write_dataset(const Dataset& d, const std::filesystem::path& path, const CsvOptions& options) {
  detail::write_file(path, format_dataset(d, options));
}

}  // namespace dsel
