// Internal helpers for reading simple delimited text. No quoting support:
// fields may not contain the delimiter or a newline.
#ifndef DSEL_SRC_DELIMITED_HPP
#define DSEL_SRC_DELIMITED_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace dsel::detail {

struct DelimitedTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  /// 1-based source line for each row, for error messages.
  std::vector<std::size_t> line_numbers;
};

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

/// Splits text into header and rows. Blank lines are skipped, trailing CR
/// and surrounding whitespace are trimmed, a UTF-8 BOM is dropped. Throws
/// InputError on ragged rows or empty fields.
DelimitedTable parse_delimited(std::string_view text, char delimiter);

std::string_view trim(std::string_view s);

}  // namespace dsel::detail

#endif  // DSEL_SRC_DELIMITED_HPP
