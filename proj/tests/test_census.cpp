#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <fstream>
#include <map>
#include <sstream>

#include "sturdy/asymptotics.hpp"
#include "sturdy/census.hpp"
#include "sturdy/grammar.hpp"
#include "sturdy/pda.hpp"
#include "sturdy/series.hpp"

using namespace sturdy;
using namespace sturdy::census;

namespace {

std::string data_file(const std::string& name) {
  std::ifstream in(std::string(STURDY_TEST_DATA) + "/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string lsb_word(std::uint64_t n) {
  std::string w;
  for (; n; n >>= 1) w.push_back((n & 1) ? '1' : '0');
  return w;
}

bool direct(std::uint64_t n, std::uint32_t k, PdaMode mode) {
  const auto a = std::popcount(k * n);
  const auto b = std::popcount(n);
  return mode == PdaMode::Flimsy ? a < b : a == b;
}

}  // namespace

TEST_CASE("mode names") {
  CHECK(parse_mode("flimsy") == PdaMode::Flimsy);
  CHECK(parse_mode("equal") == PdaMode::Equal);
  CHECK(to_string(PdaMode::Equal) == "equal");
  CHECK_THROWS(parse_mode("sturdy"));
}

TEST_CASE("PDA membership matches the digit-sum definition with one path") {
  for (std::uint32_t k : {3u, 5u, 7u}) {
    for (auto mode : {PdaMode::Flimsy, PdaMode::Equal}) {
      const OneCounterPda p = build_pda(k, mode);
      for (std::uint64_t n = 1; n < 4096; ++n) {
        CAPTURE(n);
        const Membership m = pda_membership(p, lsb_word(n));
        CHECK(m.accepted == direct(n, k, mode));
        CHECK(m.path_count == (m.accepted ? 1u : 0u));
      }
      CHECK_FALSE(pda_membership(p, "").accepted);
      CHECK_FALSE(pda_membership(p, "10").accepted);  // leading zero
    }
  }
}

TEST_CASE("path counts equal brute-force counts") {
  for (std::uint32_t k : {3u, 5u}) {
    for (auto mode : {PdaMode::Flimsy, PdaMode::Equal}) {
      const auto paths = pda_path_counts(build_pda(k, mode), 14);
      const auto brute = brute_force_census(k, mode, 14);
      for (std::size_t n = 1; n <= 14; ++n) CHECK(paths[n] == brute[n]);
    }
  }
}

TEST_CASE("grammar text round trip and isomorphism") {
  const Grammar g = parse_grammar("S -> 1 A | 0 S\nA -> 1 | 0 A A\n");
  CHECK(g.num_variables() == 2);
  CHECK(g.names[g.start] == "S");
  const Grammar back = parse_grammar(to_text(g));
  CHECK(isomorphic(g, back));
  const Grammar renamed = parse_grammar("S -> 0 S | 1 B\nB -> 0 B B | 1\n");
  CHECK(isomorphic(g, renamed));
  const Grammar other = parse_grammar("S -> 1 A | 0 S\nA -> 1 | 0 A\n");
  CHECK_FALSE(isomorphic(g, other));
  CHECK(generate_words(g, 3) == std::vector<std::string>{"11", "011"});
  CHECK(parse_grammar("S -> eps | 1 S\n").productions.size() == 2);
}

TEST_CASE("cleaning keeps the language and rejects empty languages") {
  const Grammar g = parse_grammar("S -> 1 A | 0 D\nA -> B\nB -> 1 | 1 B\nD -> 0 D\nU -> 1\n");
  const Grammar c = clean_grammar(g);
  CHECK(generate_words(c, 5) == generate_words(g, 5));
  CHECK(c.num_variables() < g.num_variables());
  CHECK_THROWS_AS(clean_grammar(parse_grammar("S -> 0 S\n")), EmptyLanguage);
}

TEST_CASE("cleaned grammars match the reference listings") {
  const std::map<std::pair<std::uint32_t, PdaMode>, std::pair<std::string, std::size_t>> files = {
      {{3, PdaMode::Flimsy}, {"flimsy3_grammar.txt", 15}},
      {{5, PdaMode::Flimsy}, {"flimsy5_grammar.txt", 40}},
      {{3, PdaMode::Equal}, {"equal3_grammar.txt", 12}},
      {{5, PdaMode::Equal}, {"equal5_grammar.txt", 35}},
  };
  for (const auto& [key, file] : files) {
    CAPTURE(file.first);
    const CensusPipeline c = build_census(key.first, key.second);
    const Grammar reference = parse_grammar(data_file(file.first));
    CHECK(c.cleaned.num_variables() == file.second);
    CHECK(reference.num_variables() == file.second);
    CHECK(isomorphic(c.cleaned, reference));
    // Distinct derivations, one per member below 2^10.
    std::vector<std::string> words = generate_words(c.cleaned, 10);
    for (std::size_t i = 1; i < words.size(); ++i) CHECK(words[i - 1] != words[i]);
    std::size_t accepted = 0;
    for (std::uint64_t n = 1; n < 1024; ++n) accepted += direct(n, key.first, key.second);
    CHECK(words.size() == accepted);
  }
}

TEST_CASE("series extraction agrees with fixed-point iteration and brute force") {
  for (std::uint32_t k : {3u, 5u}) {
    for (auto mode : {PdaMode::Flimsy, PdaMode::Equal}) {
      const CensusPipeline c = build_census(k, mode);
      const Coefficients fast = extract_coefficients(c.system, 16);
      const Coefficients slow = iterate_system(c.system, 16, 40);
      CHECK(fast == slow);
      const auto counts = census_counts(c, 16);
      const auto brute = brute_force_census(k, mode, 16);
      for (std::size_t n = 0; n <= 16; ++n) CHECK(counts[n] == BigUint(brute[n]));
    }
  }
  const SeriesSystem sys = build_census(3, PdaMode::Flimsy).system;
  CHECK(to_text(sys).rfind(sys.names[sys.start] + " =", 0) == 0);
}

TEST_CASE("improper systems are rejected") {
  CHECK_THROWS_AS(grammar_to_system(parse_grammar("S -> eps | 1 S\n")), NotProper);
  const SeriesSystem cyc = grammar_to_system(parse_grammar("S -> A | 1\nA -> S\n"));
  CHECK_THROWS_AS(extract_coefficients(cyc, 4), NotProper);
}

TEST_CASE("duplicate monomials merge") {
  const SeriesSystem s = grammar_to_system(parse_grammar("S -> 0 S | 1 S | 1\n"));
  REQUIRE(s.equations[s.start].size() == 2);
  const auto c = extract_coefficients(s, 6);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(c[s.start][n] == BigUint::pow2(n - 1));
}

TEST_CASE("quadratic for the 3-flimsy series") {
  const auto c = census_counts(build_census(3, PdaMode::Flimsy), 60);
  const Quadratic q = flimsy3_quadratic();
  for (const auto& v : quadratic_residual(c, q.a2, q.a1, q.a0, 61)) CHECK(v == 0);
  // Perturbing one coefficient breaks it.
  auto bad = c;
  bad[30] += BigUint(1);
  bool nonzero = false;
  for (const auto& v : quadratic_residual(bad, q.a2, q.a1, q.a0, 61)) nonzero = nonzero || v != 0;
  CHECK(nonzero);
  CHECK(poly_mul({1, 1}, {1, -1}) == IntPoly{1, 0, -1});
}

TEST_CASE("asymptotic models") {
  CHECK(density(BigUint(3), 2) == Real(3) / 4);
  const Real big = density(BigUint::pow2(1000) - BigUint(1), 1002);
  CHECK(boost::multiprecision::abs(big - Real(1) / 4) < Real("1e-250"));
  const AsymptoticModel m = leading_model(3, PdaMode::Flimsy);
  CHECK(m.density == Real(1) / 4);
  CHECK(m.evaluate(100) < Real(1) / 4);
  CHECK(leading_model(5, PdaMode::Equal).density == 0);
  CHECK_THROWS(leading_constant(7, PdaMode::Flimsy));
  const auto counts = census_counts(build_census(3, PdaMode::Flimsy), 400);
  const auto lead = asymptotic_check(counts, m, {200, 400});
  const auto four = asymptotic_check(counts, flimsy3_expansion(), {200, 400});
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(boost::multiprecision::abs(four.points[i].residual) < boost::multiprecision::abs(lead.points[i].residual));
  }
  CHECK(lead.points[1].relative_error < Real("0.01"));
  CHECK_THROWS_AS(asymptotic_check(counts, m, {401}), std::out_of_range);
  CHECK(format_real(Real(1) / 3, 5) == "0.33333");
}

TEST_CASE("census CSV output") {
  std::ostringstream os;
  write_counts_csv(os, {BigUint(0), BigUint(1), BigUint(2)});
  CHECK(os.str() == "N,count\n1,1\n2,2\n");
}
