#include "desurv/text_table.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "desurv/error.hpp"

namespace desurv {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.emplace_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::optional<double> parse_double(std::string_view text) {
  text = trim(text);
  if (text.empty()) return std::nullopt;
  if (text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

std::string read_file(const std::filesystem::path& path, const std::string& module) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(module, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TextTable TextTable::parse(std::string_view text, std::string module) {
  TextTable table;
  table.module_ = std::move(module);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  // Skip a UTF-8 byte-order mark.
  if (text.substr(0, 3) == "\xEF\xBB\xBF") pos = 3;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    ++line_no;
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (!have_header) {
      table.header_ = split(t);
      have_header = true;
    } else {
      table.rows_.push_back(Row{line_no, split(t)});
    }
  }
  if (!have_header) throw Error(table.module_, "table has no header row");
  return table;
}

TextTable TextTable::read(const std::filesystem::path& path, std::string module) {
  return parse(read_file(path, module), std::move(module));
}

std::optional<std::size_t> TextTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (iequals(header_[i], name)) return i;
  }
  return std::nullopt;
}

std::size_t TextTable::require_column(std::string_view name) const {
  if (auto c = column(name)) return *c;
  throw Error(module_, "missing column '" + std::string(name) + "'");
}

std::string_view TextTable::cell(const Row& row, std::optional<std::size_t> col) const {
  if (!col || *col >= row.cells.size()) return {};
  return row.cells[*col];
}

double TextTable::number(const Row& row, std::size_t col) const {
  const auto text = cell(row, col);
  if (auto v = parse_double(text)) return *v;
  throw Error(module_, "line " + std::to_string(row.line) + ": column '" + header_.at(col) +
                           "' is not a number ('" + std::string(text) + "')");
}

}  // namespace desurv
