#include "fca/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "fca/error.hpp"

namespace fca {

namespace {

using Kind = ParseError::Kind;

// Splits on '\n', dropping a trailing '\r' from each line. A final newline
// does not produce an extra empty line.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  return lines;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  return s;
}

std::optional<std::size_t> parse_count(std::string_view s) {
  s = trim(s);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    return std::nullopt;
  return value;
}

bool only_blank_from(const std::vector<std::string_view>& lines, std::size_t from) {
  for (std::size_t i = from; i < lines.size(); ++i)
    if (!trim(lines[i]).empty())
      return false;
  return true;
}

std::vector<std::string_view> split_cells(std::string_view line, char delimiter) {
  std::vector<std::string_view> cells;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = line.find(delimiter, pos);
    if (end == std::string_view::npos) {
      cells.push_back(line.substr(pos));
      return cells;
    }
    cells.push_back(line.substr(pos, end - pos));
    pos = end + 1;
  }
}

}  // namespace

FormalContext parse_cxt(std::string_view text) {
  const auto lines = split_lines(text);
  auto line_at = [&](std::size_t i) -> std::string_view {
    return i < lines.size() ? lines[i] : std::string_view{};
  };

  if (lines.empty() || trim(lines[0]) != "B")
    throw ParseError(Kind::MalformedHeader, 1, "expected 'B' on the first line");

  // With a name line the dimensions are on lines 3-4; without one they are
  // on lines 2-3 and line 4 is the blank separator.
  std::size_t dims = 2;
  if (lines.size() > 3 && parse_count(line_at(1)) && parse_count(line_at(2)) &&
      trim(line_at(3)).empty())
    dims = 1;
  const std::string name = dims == 2 ? std::string(line_at(1)) : std::string();

  if (lines.size() <= dims + 1)
    throw ParseError(Kind::MalformedHeader, lines.size() + 1, "missing object/attribute counts");
  const auto m = parse_count(lines[dims]);
  if (!m)
    throw ParseError(Kind::MalformedHeader, dims + 1, "object count is not a non-negative integer");
  const auto n = parse_count(lines[dims + 1]);
  if (!n)
    throw ParseError(Kind::MalformedHeader, dims + 2,
                     "attribute count is not a non-negative integer");

  const std::size_t separator = dims + 2;
  if (separator >= lines.size() || !trim(lines[separator]).empty())
    throw ParseError(Kind::MalformedHeader, separator + 1,
                     "expected a blank line after the dimensions");

  const std::size_t names_begin = separator + 1;
  const std::size_t rows_begin = names_begin + *m + *n;
  const std::size_t rows_end = rows_begin + *m;
  if (lines.size() < rows_end)
    throw ParseError(Kind::DimensionMismatch, lines.size() + 1,
                     "file ends early: expected " + std::to_string(*m) + " object names, " +
                         std::to_string(*n) + " attribute names and " + std::to_string(*m) +
                         " rows");
  if (!only_blank_from(lines, rows_end))
    throw ParseError(Kind::DimensionMismatch, rows_end + 1, "unexpected content after the last row");

  std::vector<std::string> object_names;
  std::vector<std::string> attribute_names;
  for (std::size_t i = 0; i < *m; ++i)
    object_names.emplace_back(lines[names_begin + i]);
  for (std::size_t i = 0; i < *n; ++i)
    attribute_names.emplace_back(lines[names_begin + *m + i]);

  std::vector<AttrSet> rows;
  rows.reserve(*m);
  for (std::size_t g = 0; g < *m; ++g) {
    const std::size_t line_no = rows_begin + g + 1;
    std::string_view row = lines[rows_begin + g];
    if (row.size() != *n)
      throw ParseError(Kind::DimensionMismatch, line_no,
                       "row has " + std::to_string(row.size()) + " cells, expected " +
                           std::to_string(*n));
    AttrSet bits(*n);
    for (std::size_t a = 0; a < *n; ++a) {
      const char c = row[a];
      if (c == 'X' || c == 'x')
        bits.set(a);
      else if (c != '.')
        throw ParseError(Kind::IllegalCell, line_no,
                         std::string("illegal cell character '") + c + "' in column " +
                             std::to_string(a + 1));
    }
    rows.push_back(std::move(bits));
  }

  FormalContext ctx =
      FormalContext::from_rows(*n, std::move(rows), std::move(object_names), std::move(attribute_names));
  ctx.set_name(name);
  return ctx;
}

std::string serialize_cxt(const FormalContext& ctx) {
  std::string out = "B\n";
  out += ctx.name();
  out += '\n';
  out += std::to_string(ctx.object_count()) + '\n';
  out += std::to_string(ctx.attribute_count()) + '\n';
  out += '\n';
  for (const std::string& s : ctx.object_names())
    out += s + '\n';
  for (const std::string& s : ctx.attribute_names())
    out += s + '\n';
  for (const AttrSet& row : ctx.rows()) {
    for (std::size_t a = 0; a < row.size(); ++a)
      out += row.test(a) ? 'X' : '.';
    out += '\n';
  }
  return out;
}

FormalContext parse_csv(std::string_view text, const CsvOptions& options) {
  auto lines = split_lines(text);
  while (!lines.empty() && trim(lines.back()).empty())
    lines.pop_back();

  std::vector<std::string> attribute_names;
  std::vector<std::string> object_names;
  std::vector<AttrSet> rows;
  std::optional<std::size_t> width;
  const std::size_t skip = options.object_names ? 1 : 0;

  std::size_t first_data = 0;
  if (options.header && !lines.empty()) {
    auto cells = split_cells(lines[0], options.delimiter);
    if (cells.size() < skip)
      throw ParseError(Kind::MalformedHeader, 1, "header has no cells");
    for (std::size_t i = skip; i < cells.size(); ++i)
      attribute_names.emplace_back(trim(cells[i]));
    // A header holding only the corner cell describes zero attributes.
    if (lines[0].empty())
      attribute_names.clear();
    width = attribute_names.size();
    first_data = 1;
  }

  for (std::size_t i = first_data; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    auto cells = split_cells(lines[i], options.delimiter);
    if (cells.size() < skip)
      throw ParseError(Kind::DimensionMismatch, line_no, "row is missing its object name");
    const std::size_t row_width = cells.size() - skip;
    if (!width)
      width = row_width;
    if (row_width != *width)
      throw ParseError(Kind::DimensionMismatch, line_no,
                       "row has " + std::to_string(row_width) + " cells, expected " +
                           std::to_string(*width));
    if (options.object_names)
      object_names.emplace_back(trim(cells[0]));
    AttrSet bits(*width);
    for (std::size_t a = 0; a < *width; ++a) {
      const std::string_view cell = trim(cells[a + skip]);
      if (cell == "1")
        bits.set(a);
      else if (cell != "0")
        throw ParseError(Kind::IllegalCell, line_no,
                         "illegal cell \"" + std::string(cell) + "\" in column " +
                             std::to_string(a + 1));
    }
    rows.push_back(std::move(bits));
  }

  return FormalContext::from_rows(width.value_or(0), std::move(rows), std::move(object_names),
                                  std::move(attribute_names));
}

std::string serialize_csv(const FormalContext& ctx, const CsvOptions& options) {
  std::string out;
  const char d = options.delimiter;
  if (options.header) {
    bool first = true;
    if (options.object_names)
      first = false;
    for (const std::string& s : ctx.attribute_names()) {
      if (!first)
        out += d;
      out += s;
      first = false;
    }
    out += '\n';
  }
  for (std::size_t g = 0; g < ctx.object_count(); ++g) {
    bool first = true;
    if (options.object_names) {
      out += ctx.object_names()[g];
      first = false;
    }
    for (std::size_t a = 0; a < ctx.attribute_count(); ++a) {
      if (!first)
        out += d;
      out += ctx.incident(g, a) ? '1' : '0';
      first = false;
    }
    out += '\n';
  }
  return out;
}

FormalContext parse_context(ContextFormat format, std::string_view text, const CsvOptions& csv) {
  return format == ContextFormat::Csv ? parse_csv(text, csv) : parse_cxt(text);
}

std::string serialize_context(const FormalContext& ctx, ContextFormat format,
                              const CsvOptions& csv) {
  return format == ContextFormat::Csv ? serialize_csv(ctx, csv) : serialize_cxt(ctx);
}

ContextFormat format_for_path(const std::filesystem::path& path) {
  auto ext = path.extension().string();
  for (char& c : ext)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return ext == ".csv" ? ContextFormat::Csv : ContextFormat::Cxt;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

FormalContext load_context(const std::filesystem::path& path, std::optional<ContextFormat> format,
                           const CsvOptions& csv) {
  return parse_context(format.value_or(format_for_path(path)), read_text_file(path), csv);
}

}  // namespace fca
