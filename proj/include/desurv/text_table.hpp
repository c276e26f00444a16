#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace desurv {

/// Comma-separated table with a mandatory header row. Blank lines and lines
/// starting with '#' are skipped; cells are whitespace-trimmed. Header names
/// are matched case-insensitively.
class TextTable {
 public:
  struct Row {
    std::size_t line = 0;  ///< 1-based line number in the source text
    std::vector<std::string> cells;
  };

  static TextTable parse(std::string_view text, std::string module);
  static TextTable read(const std::filesystem::path& path, std::string module);

  const std::vector<std::string>& header() const { return header_; }
  const std::vector<Row>& rows() const { return rows_; }

  std::optional<std::size_t> column(std::string_view name) const;
  std::size_t require_column(std::string_view name) const;

  /// Cell text, or empty when the column is absent or the row is short.
  std::string_view cell(const Row& row, std::optional<std::size_t> col) const;
  double number(const Row& row, std::size_t col) const;

 private:
  std::string module_;
  std::vector<std::string> header_;
  std::vector<Row> rows_;
};

/// Strict double parse of the whole string; nullopt on junk.
std::optional<double> parse_double(std::string_view text);

/// Reads the whole file; throws desurv::Error(module, ...) if unreadable.
std::string read_file(const std::filesystem::path& path, const std::string& module);

}  // namespace desurv
