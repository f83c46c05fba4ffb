#include "delimited.hpp"

#include <fstream>
#include <sstream>

#include "dsel/error.hpp"

namespace dsel::detail {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot open file '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw InputError("cannot open '" + path.string() + "' for writing");
  }
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) {
    throw InputError("failed writing '" + path.string() + "'");
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

namespace {

std::vector<std::string> split(std::string_view line, char delimiter) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(delimiter, start);
    const auto piece = line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
    fields.emplace_back(trim(piece));
    if (pos == std::string_view::npos) {
      break;
    }
    start = pos + 1;
  }
  return fields;
}

}  // namespace

DelimitedTable parse_delimited(std::string_view text, char delimiter) {
  if (text.starts_with("\xEF\xBB\xBF")) {
    text.remove_prefix(3);
  }
  DelimitedTable table;
  std::size_t line_number = 0;
  bool have_header = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    const auto line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    ++line_number;
    start = (end == std::string_view::npos) ? text.size() + 1 : end + 1;
    if (trim(line).empty()) {
      continue;
    }
    auto fields = split(line, delimiter);
    if (!have_header) {
      for (std::size_t i = 0; i < fields.size(); ++i) {
        if (fields[i].empty()) {
          throw InputError("header line " + std::to_string(line_number) + ": column " +
                           std::to_string(i + 1) + " has an empty name");
        }
      }
      table.header = std::move(fields);
      have_header = true;
      continue;
    }
    if (fields.size() != table.header.size()) {
      throw InputError("line " + std::to_string(line_number) + ": expected " +
                       std::to_string(table.header.size()) + " fields, found " +
                       std::to_string(fields.size()));
    }
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (fields[i].empty()) {
        throw InputError("line " + std::to_string(line_number) + ": empty value in column '" +
                         table.header[i] + "'");
      }
    }
    table.rows.push_back(std::move(fields));
    table.line_numbers.push_back(line_number);
  }
  if (!have_header) {
    throw InputError("input has no header row");
  }
  return table;
}

}  // namespace dsel::detail
