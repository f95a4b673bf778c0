#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "fca/context.hpp"

namespace fca {

enum class ContextFormat { Cxt, Csv };

struct CsvOptions {
  bool header = true;        // first row holds attribute names
  bool object_names = true;  // first column holds object names
  char delimiter = ',';
};

// Burmeister format:
//   B
//   <context name, may be empty>
//   <object count>
//   <attribute count>
//   <blank line>
//   <one object name per line>
//   <one attribute name per line>
//   <one row per object, one of '.' 'X' per attribute>
// The name line may be omitted entirely. 'x' is read as 'X'.
FormalContext parse_cxt(std::string_view text);
std::string serialize_cxt(const FormalContext& ctx);

// Cells are 0 or 1. Without a header, attributes get default names; without
// an object column, objects do.
FormalContext parse_csv(std::string_view text, const CsvOptions& options = {});
std::string serialize_csv(const FormalContext& ctx, const CsvOptions& options = {});

FormalContext parse_context(ContextFormat format, std::string_view text,
                            const CsvOptions& csv = {});
std::string serialize_context(const FormalContext& ctx, ContextFormat format,
                              const CsvOptions& csv = {});

// ".csv" selects CSV, anything else Burmeister.
ContextFormat format_for_path(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

FormalContext load_context(const std::filesystem::path& path,
                           std::optional<ContextFormat> format = std::nullopt,
                           const CsvOptions& csv = {});

}  // namespace fca
