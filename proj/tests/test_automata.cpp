#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <set>

#include "sturdy/biguint.hpp"
#include "sturdy/dfa.hpp"
#include "sturdy/few_zeros.hpp"
#include "sturdy/solvers.hpp"

using namespace sturdy;
using namespace sturdy::automata;

namespace {

std::string bin(std::uint64_t v) { return BigUint(v).to_binary(); }

std::vector<std::string> all_words(std::size_t max_len) {
  std::vector<std::string> out{""};
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      std::string w(len, '0');
      for (std::size_t i = 0; i < len; ++i) w[len - 1 - i] = ((v >> i) & 1) ? '1' : '0';
      out.push_back(w);
    }
  }
  return out;
}

std::uint32_t zeros(std::uint64_t n) { return static_cast<std::uint32_t>(std::bit_width(n) - std::popcount(n)); }

}  // namespace

TEST_CASE("divisibility and ones-count machines") {
  for (std::uint64_t n : {1u, 3u, 6u, 7u, 12u}) {
    const Dfa d = divisibility_dfa(n);
    d.validate();
    for (std::uint64_t v = 1; v < 300; ++v) CHECK(d.accepts(bin(v)) == (v % n == 0));
    CHECK_FALSE(d.accepts(""));
    CHECK_FALSE(d.accepts("0" + bin(n)));
  }
  for (const auto& w : all_words(8)) {
    const auto ones = static_cast<std::uint32_t>(std::count(w.begin(), w.end(), '1'));
    CHECK(at_most_ones_dfa(3).accepts(w) == (ones <= 3));
    CHECK(exactly_ones_dfa(2).accepts(w) == (ones == 2));
  }
}

TEST_CASE("boolean operations, minimisation and reversal") {
  const Dfa a = compile_regex("(0|1)*1");
  const Dfa b = compile_regex("1(0|1)*");
  const Dfa both = product(a, b, ProductMode::Intersect);
  const Dfa either = product(a, b, ProductMode::Union);
  const Dfa diff = difference(a, b);
  for (const auto& w : all_words(7)) {
    CHECK(both.accepts(w) == (a.accepts(w) && b.accepts(w)));
    CHECK(either.accepts(w) == (a.accepts(w) || b.accepts(w)));
    CHECK(diff.accepts(w) == (a.accepts(w) && !b.accepts(w)));
    CHECK(complement(a).accepts(w) == !a.accepts(w));
    CHECK(minimize(either).accepts(w) == either.accepts(w));
    CHECK(reversed(a).accepts(w) == b.accepts(w));
  }
  CHECK(equivalent(reversed(a), b));
  CHECK(minimize(compile_regex("(0|1)*1")).size() == 2);
  CHECK(is_empty(empty_language()));
  CHECK_FALSE(is_empty(all_words()));
  CHECK(distinguishing_word(a, b) == std::optional<std::string>("01"));
  CHECK_FALSE(distinguishing_word(a, a).has_value());
}

TEST_CASE("regex syntax") {
  const Dfa d = compile_regex("10 1* 01");
  CHECK(d.accepts("1001"));
  CHECK(d.accepts("1011101"));
  CHECK_FALSE(d.accepts("101"));
  CHECK(compile_regex("1+0?").accepts("1110"));
  CHECK_FALSE(compile_regex("1+0?").accepts("100"));
  CHECK_THROWS_AS(compile_regex("(10"), std::invalid_argument);
  CHECK_THROWS_AS(compile_regex("12"), std::invalid_argument);
}

TEST_CASE("finite languages and enumeration") {
  const Dfa f = finite_language({"1", "101", "11", "101"});
  CHECK(is_finite(f));
  CHECK(finite_count(f) == 3);
  CHECK(enumerate(f, 10) == std::vector<std::string>{"1", "11", "101"});
  CHECK(least_accepted(f) == std::optional<std::string>("1"));
  CHECK_FALSE(is_finite(compile_regex("1*")));
  CHECK(enumerate(compile_regex("1*"), 3) == std::vector<std::string>{"", "1", "11", "111"});
  CHECK(enumerate(compile_regex("(0|1)*"), 10, 4).size() == 4);
  CHECK_FALSE(least_accepted(empty_language()).has_value());
}

TEST_CASE("determinisation of a reversed machine") {
  const Dfa d = divisibility_dfa(5);
  const Dfa r = determinize(reverse(d));
  for (std::uint64_t v = 1; v < 200; ++v) {
    std::string w = bin(v);
    std::reverse(w.begin(), w.end());
    CHECK(r.accepts(w) == (v % 5 == 0));
  }
  CHECK(to_dot(d).find("digraph") != std::string::npos);
}

TEST_CASE("M(j, k) accepts exactly the j-zero numbers that k proves flimsy") {
  for (std::uint32_t j = 0; j <= 3; ++j) {
    for (std::uint64_t k = 3; k <= 9; k += 2) {
      const Dfa m = few_zeros_flimsy_dfa(j, k);
      const Dfa lsb = few_zeros_flimsy_dfa_lsb(j, k);
      for (std::uint64_t n = 1; n < (1u << 13); n += 2) {
        CAPTURE(n);
        CAPTURE(k);
        const bool want = zeros(n) == j && std::popcount(k * n) < std::popcount(n);
        std::string w = bin(n);
        CHECK(m.accepts(w) == want);
        std::reverse(w.begin(), w.end());
        CHECK(lsb.accepts(w) == want);
      }
    }
  }
  const Dfa odd2 = odd_with_zeros_lsb(2);
  CHECK(odd2.accepts("1001"));
  CHECK_FALSE(odd2.accepts("0111"));
  CHECK_FALSE(odd2.accepts("111"));
}

TEST_CASE("family patterns") {
  CHECK(mirrored_family_patterns(0) == std::vector<std::string>{"1+"});
  CHECK(mirrored_family_patterns(1).empty());
  CHECK(mirrored_family_patterns(2) == std::vector<std::string>{"10 1* 01"});
  CHECK(mirrored_family_patterns(4).size() == 4);
  for (std::uint32_t j = 0; j <= 5; ++j) {
    Dfa fam = empty_language();
    for (const auto& p : mirrored_family_patterns(j)) fam = product(fam, compile_regex(p), ProductMode::Union);
    for (std::uint64_t n = 1; n < (1u << 12); n += 2) CHECK(fam.accepts(bin(n)) == in_mirrored_family(n, j));
  }
  for (std::uint64_t n = 1; n < (1u << 16); n += 2) {
    if (in_mirrored_family(n, zeros(n))) CHECK(is_sturdy(n));
  }
}

TEST_CASE("automata verification for j <= 3") {
  const std::vector<std::set<std::uint64_t>> want = {{}, {5}, {51}, {17, 85, 89, 455}};
  for (std::uint32_t j = 0; j <= 3; ++j) {
    const auto& sporadic = known_sporadic_exceptions(j);
    CHECK(std::set<std::uint64_t>(sporadic.begin(), sporadic.end()) == want[j]);
    const FewZerosVerdict v = verify_few_zeros_theorem(j, sporadic, mirrored_family_patterns(j));
    CHECK(v.ok());
    CHECK(v.leftover_finite);
    CHECK(v.leftover_decided);
    CHECK(v.unexpected.empty());
    CHECK(v.missing.empty());
    for (const auto& w : v.leftover_flimsy) CHECK_FALSE(is_sturdy(BigUint::from_binary(w).to_u64()));
  }
  // A wrong sporadic list is caught.
  const FewZerosVerdict bad = verify_few_zeros_theorem(2, {51, 53}, mirrored_family_patterns(2));
  CHECK_FALSE(bad.ok());
  CHECK(bad.missing == std::vector<std::string>{bin(53)});
  const FewZerosVerdict short_list = verify_few_zeros_theorem(3, {17, 85, 89}, mirrored_family_patterns(3));
  CHECK(short_list.unexpected == std::vector<std::string>{bin(455)});
  CHECK(to_json(short_list).find("\"unexpected\"") != std::string::npos);
}

TEST_CASE("brute force over small bit lengths") {
  for (std::uint32_t j = 2; j <= 5; ++j) {
    const auto r = brute_force_few_zeros(j, 20, known_sporadic_exceptions(j));
    CHECK(r.ok());
    std::uint64_t expected = 0;
    for (std::uint64_t n = 1; n < (1u << 20); n += 2) expected += zeros(n) == j;
    CHECK(r.scanned == expected);
  }
  CHECK_FALSE(brute_force_few_zeros(3, 16, {17, 85, 89}).ok());
}
