#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <fstream>
#include <sstream>

#include "sturdy/numeric.hpp"
#include "sturdy/report_io.hpp"
#include "sturdy/solvers.hpp"
#include "sturdy/sweeps.hpp"

using namespace sturdy;

namespace {

constexpr Algorithm kAll[] = {Algorithm::Dp, Algorithm::Aut, Algorithm::Bfs01, Algorithm::OrderDegBfs};

// Exact oracle for odd n with ord_2(n) <= 20: a multiple with t ones folds
// (exponents mod ord, carries merged) to a set of at most t distinct powers
// below 2^ord, so swm is the least nonzero subset size summing to 0 mod n.
// msw and mfw (both multipliers) come from scanning k up to (2^ord - 1) / n.
struct Oracle {
  std::uint32_t swm;
  std::uint64_t msw;
  std::optional<std::uint64_t> mfw;
};

Oracle oracle(std::uint64_t n) {
  const std::uint64_t ord = numeric::multiplicative_order(2, n);
  REQUIRE(ord <= 20);
  std::uint32_t best = 64;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << ord); ++mask) {
    if (mask % n == 0) best = std::min<std::uint32_t>(best, std::popcount(mask));
  }
  Oracle o{best, 0, std::nullopt};
  const std::uint64_t top = ((std::uint64_t{1} << ord) - 1) / n;
  for (std::uint64_t k = 1; k <= top; ++k) {
    const auto c = static_cast<std::uint32_t>(std::popcount(k * n));
    if (o.msw == 0 && c == best) o.msw = k;
    if (!o.mfw && c < static_cast<std::uint32_t>(std::popcount(n))) o.mfw = k;
  }
  return o;
}

std::string data_file(const char* name) {
  std::ifstream in(std::string(STURDY_TEST_DATA) + "/" + name);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("algorithm names round trip") {
  for (auto a : kAll) CHECK(parse_algorithm(to_string(a)) == a);
  CHECK(parse_algorithm("auto") == Algorithm::Auto);
  CHECK_THROWS(parse_algorithm("quantum"));
}

TEST_CASE("every algorithm matches the subset oracle") {
  for (std::uint64_t n = 3; n < 400; n += 2) {
    if (numeric::multiplicative_order(2, n) > 20) continue;
    const Oracle o = oracle(n);
    for (auto a : kAll) {
      CAPTURE(n);
      CAPTURE(to_string(a));
      const FieldSet f = a == Algorithm::OrderDegBfs ? FieldSet::without_mfw() : FieldSet::all();
      SolveOptions raw;
      raw.use_shortcuts = false;
      raw.quick_witness = false;
      const SturdyReport r = solve(n, a, f, raw);
      CHECK(r.swm == o.swm);
      REQUIRE(r.msw);
      CHECK(*r.msw == BigUint(o.msw));
      CHECK((r.character == Character::Flimsy) == o.mfw.has_value());
      if (a != Algorithm::OrderDegBfs) {
        CHECK(r.mfw.has_value() == o.mfw.has_value());
        if (o.mfw) CHECK(*r.mfw == BigUint(*o.mfw));
      }
    }
  }
}

TEST_CASE("golden table for odd 3 <= n <= 129") {
  const auto rows = parse_csv(data_file("small_odd_table.csv"));
  REQUIRE(rows.size() == 64);
  for (auto a : kAll) {
    SweepOptions o;
    o.algorithm = a;
    const FieldSet f = a == Algorithm::OrderDegBfs ? FieldSet::without_mfw() : FieldSet::all();
    const auto got = table_sweep(3, 129, f, o);
    REQUIRE(got.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CAPTURE(rows[i].n);
      CAPTURE(to_string(a));
      TableRow want = rows[i];
      if (a == Algorithm::OrderDegBfs) want.mfw.reset();
      CHECK(got[i] == want);
    }
  }
}

TEST_CASE("even numbers reduce to their odd part") {
  const auto r = solve(11 * 64, Algorithm::Bfs01);
  CHECK(r.character == Character::Flimsy);
  CHECK(r.swm == 2);
  for (std::uint64_t n : {1ull, 2ull, 1024ull}) {
    const auto s = solve(n, Algorithm::Auto);
    CHECK(s.character == Character::Sturdy);
    CHECK(s.swm == 1);
  }
  CHECK(is_sturdy(7 * 8));
  CHECK_FALSE(is_sturdy(11 * 2));
}

TEST_CASE("order_deg_bfs refuses mfw") {
  CHECK_THROWS_AS(solve(11, Algorithm::OrderDegBfs, FieldSet::all()), UnsupportedCombination);
  CHECK_THROWS_AS(order_deg_bfs_solve(11, FieldSet::all()), UnsupportedCombination);
}

TEST_CASE("shortcuts agree with the full solvers") {
  for (std::uint32_t n = 3; n < 3000; n += 2) {
    CAPTURE(n);
    const Bfs01Result full = bfs01_solve(n);
    const auto two = shortcut_swm2(n);
    CHECK(two.has_value() == (full.swm == 2));
    if (two) CHECK(numeric::pow_mod(2, *two, n) == n - 1);
    if (full.swm != 2) {
      const auto three = shortcut_swm3(n);
      CHECK(three.has_value() == (full.swm == 3));
      if (three) {
        const auto [l, k] = *three;
        CHECK(0 < l);
        CHECK(l < k);
        CHECK((1 + numeric::pow_mod(2, l, n) + numeric::pow_mod(2, k, n)) % n == 0);
        const auto r = bfs01_then_least(n, FieldSet::without_mfw());
        CHECK(*r.msw * BigUint(n) == BigUint(1) + BigUint::pow2(l) + BigUint::pow2(k));
      }
    }
    const auto w = quick_flimsy_witness(n);
    if (w) {
      CHECK(*w % 2 == 1);
      CHECK(std::popcount(*w * n) < std::popcount(n));
      CHECK(full.character == Character::Flimsy);
    }
  }
}

TEST_CASE("bfs01 witness and trace") {
  for (std::uint32_t n = 3; n < 600; n += 2) {
    Bfs01Trace trace;
    const Bfs01Result r = bfs01_solve(n, true, &trace);
    const Bfs01Result fast = bfs01_solve(n);
    CHECK(r.swm == fast.swm);
    CHECK(r.character == fast.character);
    REQUIRE(r.witness_multiple);
    CHECK(r.witness_multiple->divisible_by(BigUint(n)));
    CHECK(r.witness_multiple->popcount() == r.swm);
    // 0-1 BFS pops distances in non-decreasing order and finalises each residue once.
    for (std::size_t i = 1; i < trace.dequeued_distances.size(); ++i) {
      CHECK(trace.dequeued_distances[i - 1] <= trace.dequeued_distances[i]);
    }
    for (auto c : trace.finalise_count) CHECK(c <= 1);
  }
}

TEST_CASE("aut with a smaller bound") {
  // 11 has swm 2: bound 2 finds it, bound 1 is inconclusive.
  CHECK(aut_solve(11, 2).swm == 2);
  CHECK_THROWS_AS(aut_solve(11, 1), std::domain_error);
  CHECK(aut_character(11) == Character::Flimsy);
  CHECK(aut_character(7) == Character::Sturdy);
}

TEST_CASE("large moduli") {
  // 2^27 - 1 is sturdy with swm 27.
  const auto r = solve((1u << 27) - 1, Algorithm::Bfs01, FieldSet::char_swm());
  CHECK(r.character == Character::Sturdy);
  CHECK(r.swm == 27);
  CHECK(solve(616318177, Algorithm::Bfs01, FieldSet::char_only()).character == Character::Sturdy);
  CHECK(solve(616318179, Algorithm::Bfs01, FieldSet::char_only()).character == Character::Flimsy);
}

TEST_CASE("t + i bound on the number of ones") {
  // Base 2: from a multiple with swm ones, lifting yields multiples with
  // exactly swm + i ones; checked for odd n <= 500 and i <= 3.
  for (std::uint64_t n = 3; n <= 500; n += 2) {
    const auto r = bfs01_solve(static_cast<std::uint32_t>(n), true);
    BigUint m = *r.witness_multiple;
    for (int i = 1; i <= 3; ++i) {
      m = numeric::lift_digit_sum(m, n, 2);
      CHECK(m.divisible_by(BigUint(n)));
      CHECK(m.popcount() == r.swm + i);
    }
  }
  // Base 3 has no such property: swm_3(13) = 3 but no small multiple has digit sum 4.
  std::uint64_t least = 100;
  bool four = false;
  for (std::uint64_t k = 1; k < 200000; ++k) {
    const auto d = numeric::digit_sum(k * 13, 3);
    least = std::min(least, d);
    four = four || d == 4;
  }
  CHECK(least == 3);
  CHECK_FALSE(four);
}

TEST_CASE("sweeps do not depend on the worker count") {
  SweepOptions one;
  SweepOptions four;
  four.jobs = 4;
  CHECK(table_sweep(3, 801, FieldSet::all(), one) == table_sweep(3, 801, FieldSet::all(), four));
  CHECK(sturdy_counts_below_powers_of_ten(4, one) == std::vector<std::uint64_t>{5, 22, 81, 292});
  CHECK(sturdy_counts_below_powers_of_ten(4, four) == std::vector<std::uint64_t>{5, 22, 81, 292});
  CHECK(swm_histogram(1, 4096, one) == swm_histogram(1, 4096, four));
  const auto primes = sturdy_primes(0, 3000, four);
  CHECK(primes == std::vector<std::uint64_t>{2, 3, 5, 7, 17, 31, 73, 89, 127, 257, 1801, 2089});
  std::uint64_t calls = 0;
  sturdy_primes(0, 1000, one, [&](std::uint64_t, const std::vector<std::uint64_t>&) { ++calls; }, 100);
  CHECK(calls == 10);
}
