#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "sturdy/report_io.hpp"
#include "sturdy/solvers.hpp"

using namespace sturdy;

namespace {

std::vector<TableRow> sample() {
  TableRow a{7, Character::Sturdy, 3, BigUint(1), std::nullopt};
  TableRow b{11, Character::Flimsy, 2, BigUint(3), BigUint(3)};
  TableRow c{167, Character::Flimsy, 2, std::nullopt, BigUint::pow2(90)};
  return {a, b, c};
}

}  // namespace

TEST_CASE("character codes and formats") {
  CHECK(char_code(Character::Sturdy) == "S");
  CHECK(parse_char_code("F") == Character::Flimsy);
  CHECK_THROWS(parse_char_code("X"));
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK(parse_format("json") == OutputFormat::Json);
  CHECK(parse_format("plain") == OutputFormat::Plain);
  CHECK_THROWS(parse_format("xml"));
}

TEST_CASE("CSV round trip") {
  CHECK(csv_header() == "n,char,swm,msw,mfw");
  const auto rows = sample();
  CHECK(to_csv(rows[0]) == "7,S,3,1,");
  CHECK(to_csv(rows[1]) == "11,F,2,3,3");
  std::string text = csv_header() + "\n";
  for (const auto& r : rows) text += to_csv(r) + "\n";
  CHECK(parse_csv(text) == rows);
  CHECK_THROWS(parse_csv_row("7,S"));
  CHECK_THROWS(parse_csv_row("x,S,3,7,"));
}

TEST_CASE("JSON round trip keeps big values exact") {
  const auto rows = sample();
  const std::string j = to_json(rows);
  CHECK(j.find(BigUint::pow2(90).to_string()) != std::string::npos);
  CHECK(parse_json(j) == rows);
  CHECK_THROWS(parse_json("{"));
}

TEST_CASE("writers") {
  std::ostringstream csv, plain, json;
  write_rows(csv, sample(), OutputFormat::Csv);
  write_rows(plain, sample(), OutputFormat::Plain);
  write_rows(json, sample(), OutputFormat::Json);
  CHECK(csv.str().rfind("n,char,swm,msw,mfw\n7,S,3,1,\n", 0) == 0);
  CHECK(plain.str().find("11") != std::string::npos);
  CHECK(parse_json(json.str()) == sample());
  const TableRow r = to_row(solve(11, Algorithm::Bfs01));
  CHECK(r == sample()[1]);
}
