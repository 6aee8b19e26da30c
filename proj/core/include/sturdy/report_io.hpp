#pragma once

// Table rows `n,char,swm,msw,mfw` in plain, CSV and JSON form.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sturdy/biguint.hpp"
#include "sturdy/solvers.hpp"

namespace sturdy {

struct TableRow {
  std::uint64_t n = 0;
  Character character = Character::Sturdy;
  std::uint32_t swm = 0;
  std::optional<BigUint> msw;
  std::optional<BigUint> mfw;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

enum class OutputFormat { Plain, Csv, Json };
OutputFormat parse_format(std::string_view name);

TableRow to_row(const SturdyReport& r);

/// "S" or "F".
std::string_view char_code(Character c);
Character parse_char_code(std::string_view s);

std::string csv_header();
std::string to_csv(const TableRow& r);
TableRow parse_csv_row(std::string_view line);
/// Skips the header line if present.
std::vector<TableRow> parse_csv(std::string_view text);

/// One JSON object per row, as an array.
std::string to_json(const std::vector<TableRow>& rows);
std::vector<TableRow> parse_json(std::string_view text);

/// Aligned columns; empty cells for absent values.
std::string to_plain(const TableRow& r);

void write_rows(std::ostream& os, const std::vector<TableRow>& rows, OutputFormat format);

}  // namespace sturdy
