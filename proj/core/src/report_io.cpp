#include "sturdy/report_io.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sturdy {

OutputFormat parse_format(std::string_view name) {
  if (name == "plain") return OutputFormat::Plain;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown format: " + std::string(name));
}

TableRow to_row(const SturdyReport& r) {
  return {r.n, r.character, r.swm, r.msw, r.mfw};
}

std::string_view char_code(Character c) { return c == Character::Sturdy ? "S" : "F"; }

Character parse_char_code(std::string_view s) {
  if (s == "S") return Character::Sturdy;
  if (s == "F") return Character::Flimsy;
  throw std::invalid_argument("character must be S or F, got: " + std::string(s));
}

std::string csv_header() { return "n,char,swm,msw,mfw"; }

std::string to_csv(const TableRow& r) {
  std::ostringstream os;
  os << r.n << ',' << char_code(r.character) << ',' << r.swm << ',';
  if (r.msw) os << *r.msw;
  os << ',';
  if (r.mfw) os << *r.mfw;
  return os.str();
}

namespace {

std::uint64_t parse_u64(std::string_view s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos) {
    throw std::invalid_argument("not a non-negative integer: " + std::string(s));
  }
  return BigUint(s).to_u64();
}

std::optional<BigUint> parse_optional(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if (s.find_first_not_of("0123456789") != std::string_view::npos) {
    throw std::invalid_argument("not a non-negative integer: " + std::string(s));
  }
  return BigUint(s);
}

}  // namespace

TableRow parse_csv_row(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.remove_suffix(1);
  std::vector<std::string_view> cells;
  std::size_t pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    cells.push_back(line.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (cells.size() != 5) throw std::invalid_argument("expected 5 CSV cells: " + std::string(line));
  TableRow r;
  r.n = parse_u64(cells[0]);
  r.character = parse_char_code(cells[1]);
  r.swm = static_cast<std::uint32_t>(parse_u64(cells[2]));
  r.msw = parse_optional(cells[3]);
  r.mfw = parse_optional(cells[4]);
  return r;
}

std::vector<TableRow> parse_csv(std::string_view text) {
  std::vector<TableRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.rfind("n,", 0) == 0) continue;
    rows.push_back(parse_csv_row(line));
  }
  return rows;
}

std::string to_json(const std::vector<TableRow>& rows) {
  // Big values are written as strings so no reader loses precision.
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json o;
    o["n"] = r.n;
    o["char"] = std::string(char_code(r.character));
    o["swm"] = r.swm;
    o["msw"] = r.msw ? nlohmann::ordered_json(r.msw->to_string()) : nlohmann::ordered_json(nullptr);
    o["mfw"] = r.mfw ? nlohmann::ordered_json(r.mfw->to_string()) : nlohmann::ordered_json(nullptr);
    arr.push_back(std::move(o));
  }
  return arr.dump(2);
}

std::vector<TableRow> parse_json(std::string_view text) {
  const auto arr = nlohmann::json::parse(text);
  if (!arr.is_array()) throw std::invalid_argument("expected a JSON array of rows");
  auto big = [](const nlohmann::json& v) -> std::optional<BigUint> {
    if (v.is_null()) return std::nullopt;
    if (v.is_string()) return BigUint(v.get<std::string>());
    return BigUint(v.get<std::uint64_t>());
  };
  std::vector<TableRow> rows;
  for (const auto& o : arr) {
    TableRow r;
    r.n = o.at("n").get<std::uint64_t>();
    r.character = parse_char_code(o.at("char").get<std::string>());
    r.swm = o.at("swm").get<std::uint32_t>();
    r.msw = big(o.at("msw"));
    r.mfw = big(o.at("mfw"));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string to_plain(const TableRow& r) {
  std::ostringstream os;
  os << std::setw(10) << r.n << "  " << char_code(r.character) << "  " << std::setw(3) << r.swm << "  "
     << std::setw(20) << (r.msw ? r.msw->to_string() : "") << "  " << std::setw(12) << (r.mfw ? r.mfw->to_string() : "");
  return os.str();
}

void write_rows(std::ostream& os, const std::vector<TableRow>& rows, OutputFormat format) {
  switch (format) {
    case OutputFormat::Plain:
      os << std::setw(10) << "n" << "  c  " << std::setw(3) << "swm" << "  " << std::setw(20) << "msw" << "  "
         << std::setw(12) << "mfw" << '\n';
      for (const auto& r : rows) os << to_plain(r) << '\n';
      break;
    case OutputFormat::Csv:
      os << csv_header() << '\n';
      for (const auto& r : rows) os << to_csv(r) << '\n';
      break;
    case OutputFormat::Json:
      os << to_json(rows) << '\n';
      break;
  }
}

}  // namespace sturdy
