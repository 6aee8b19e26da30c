#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <stdexcept>

#include "sturdy/biguint.hpp"
#include "sturdy/numeric.hpp"
#include "sturdy/residue_set.hpp"

using namespace sturdy;
using namespace sturdy::numeric;

namespace {

std::uint64_t naive_order(std::uint64_t a, std::uint64_t n) {
  std::uint64_t x = a % n;
  for (std::uint64_t v = 1;; ++v) {
    if (x == 1 % n) return v;
    x = x * a % n;
  }
}

std::uint64_t naive_digit_sum(std::uint64_t v, std::uint32_t b) {
  std::uint64_t s = 0;
  for (; v; v /= b) s += v % b;
  return s;
}

}  // namespace

TEST_CASE("BigUint arithmetic and conversions") {
  const BigUint a("123456789012345678901234567890");
  const BigUint b = BigUint::pow(10, 29);
  CHECK(a > b);
  CHECK((a - b).to_string() == "23456789012345678901234567890");
  CHECK((a * BigUint(2)).to_string() == "246913578024691357802469135780");
  CHECK(BigUint::pow2(70).bit_length() == 71);
  CHECK(BigUint::pow2(70).popcount() == 1);
  CHECK(BigUint::from_binary("101101").to_u64() == 45);
  CHECK(BigUint(45).to_binary() == "101101");
  CHECK(BigUint(0).to_binary() == "0");
  CHECK((BigUint::pow2(83) - BigUint(1)).divisible_by(BigUint(167)));
  CHECK(BigUint::pow2(64).mod_u64(1000) == 616);
  CHECK_THROWS_AS(BigUint(3) - BigUint(4), std::domain_error);
  CHECK_THROWS_AS(BigUint::pow2(64).to_u64(), std::overflow_error);
  CHECK(BigUint(1234).digits_lsb_first(10) == std::vector<std::uint32_t>{4, 3, 2, 1});
}

TEST_CASE("digit sums agree with repeated division") {
  for (std::uint32_t b : {2u, 3u, 10u, 16u}) {
    for (std::uint64_t v = 0; v < 3000; v += 7) {
      CHECK(digit_sum(v, b) == naive_digit_sum(v, b));
      CHECK(digit_sum(BigUint(v), b) == naive_digit_sum(v, b));
    }
  }
  CHECK(digit_sum(BigUint::pow2(200) - BigUint(1), 2) == 200);
}

TEST_CASE("Digits round trip and complement") {
  const Digits d = Digits::from_value(BigUint(2024), 10);
  CHECK(d.to_string() == "2024");
  CHECK(d.value() == BigUint(2024));
  CHECK(complement(d).to_string() == "7975");
  CHECK(Digits::parse("1101", 2).value() == BigUint(13));
  CHECK(complement(Digits::parse("1101", 2)).to_string() == "0010");
  CHECK(Digits::from_value(BigUint(0), 2).to_string() == "0");
}

TEST_CASE("modular helpers") {
  CHECK(gcd(84, 36) == 12);
  CHECK(pow_mod(2, 83, 167) == 1);
  CHECK(mul_mod(~std::uint64_t{0}, ~std::uint64_t{0}, 1000000007) ==
        static_cast<std::uint64_t>((static_cast<unsigned __int128>(~std::uint64_t{0}) * ~std::uint64_t{0}) % 1000000007));
  for (std::uint64_t n = 3; n < 400; n += 2) CHECK(multiplicative_order(2, n) == naive_order(2, n));
  CHECK(multiplicative_order(10, 7) == 6);
  CHECK(multiplicative_order(BigUint(2), BigUint(167), 1000) == 83);
  CHECK_THROWS_AS(multiplicative_order(BigUint(2), BigUint(167), 10), std::overflow_error);
  CHECK(reduce_base_part(96, 2) == 3);
  CHECK(reduce_base_part(1500, 10) == 3);
}

TEST_CASE("factorisation and primality") {
  const auto f = factorize(2 * 2 * 3 * 7 * 7 * 101);
  REQUIRE(f.size() == 4);
  CHECK(f[0] == std::pair<std::uint64_t, unsigned>{2, 2});
  CHECK(f[3] == std::pair<std::uint64_t, unsigned>{101, 1});
  CHECK(is_prime(2147483647));
  CHECK_FALSE(is_prime(2147483649ULL));
  std::size_t primes = 0;
  for (std::uint64_t n = 0; n < 1000; ++n) primes += is_prime(n);
  CHECK(primes == 168);
}

TEST_CASE("divisor criterion finds the least flimsy witness") {
  // 7 is sturdy; 11 is flimsy with 3 * 11 = 100001b.
  CHECK_FALSE(is_flimsy_by_divisor_criterion(BigUint(7), 2).flimsy);
  const auto r = is_flimsy_by_divisor_criterion(BigUint(11), 2);
  CHECK(r.flimsy);
  REQUIRE(r.witness);
  CHECK(*r.witness == BigUint(3));
  CHECK(r.order == 10);
  // Base 10: 3 divides 9 and is sturdy.
  CHECK_FALSE(is_flimsy_by_divisor_criterion(BigUint(3), 10).flimsy);
  for (std::uint64_t n = 3; n < 200; n += 2) {
    if (multiplicative_order(2, n) > 24) continue;
    const auto d = is_flimsy_by_divisor_criterion(BigUint(n), 2);
    std::optional<std::uint64_t> least;
    const std::uint64_t bound = ((std::uint64_t{1} << d.order) - 1) / n;
    for (std::uint64_t k = 1; k <= bound; ++k) {
      if (std::popcount(k * n) < std::popcount(n)) {
        least = k;
        break;
      }
    }
    CHECK(d.flimsy == least.has_value());
    if (least) CHECK(*d.witness == BigUint(*least));
  }
}

TEST_CASE("distinct power witness and lifting") {
  for (std::uint64_t n : {7u, 11u, 13u, 21u, 23u}) {
    // 3 * 7 = 10101b etc.: try small multiples.
    for (std::uint64_t k = 1; k < 40; ++k) {
      const BigUint m(k * n);
      const auto e = distinct_power_witness(n, m, 2);
      CHECK(e.size() == digit_sum(m, 2));
      BigUint sum;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) CHECK(e[i - 1] < e[i]);
        sum += BigUint::pow2(e[i]);
      }
      CHECK(sum.divisible_by(BigUint(n)));
      const BigUint lifted = lift_digit_sum(m, n, 2);
      CHECK(lifted.divisible_by(BigUint(n)));
      CHECK(digit_sum(lifted, 2) == digit_sum(m, 2) + 1);
    }
  }
  const BigUint m3(3 * 13);
  const BigUint lifted = lift_digit_sum(m3, 13, 3);
  CHECK(lifted.divisible_by(BigUint(13)));
  CHECK(digit_sum(lifted, 3) == digit_sum(m3, 3) + 2);
}

TEST_CASE("sturdy family members are sturdy") {
  FamilyParams p;
  p.base = 2;
  p.j = 6;
  CHECK(sturdy_family_member(SturdyFamily::BaseMinusOneDivisor, p) == BigUint(63));
  p.r = 3;
  p.e = 2;
  CHECK(sturdy_family_member(SturdyFamily::SparseRepunit, p) == BigUint(21));
  CHECK(sturdy_family_member(SturdyFamily::AlternatingBlocks, p) == BigUint::from_binary("11001100110011"));
  p.x = Digits::parse("110", 2);
  p.i = 2;
  CHECK(sturdy_family_member(SturdyFamily::MirroredComplement, p) == BigUint::from_binary("11011001"));
  p.base = 10;
  p.j = 3;
  p.m = 3;
  CHECK(sturdy_family_member(SturdyFamily::BaseMinusOneDivisor, p) == BigUint(333));
  CHECK(sturdy_family_member(SturdyFamily::SquaredRepunit, p) == BigUint(110889));
  p.m = 2;
  CHECK_THROWS_AS(sturdy_family_member(SturdyFamily::SquaredRepunit, p), std::invalid_argument);
  p.base = 10;
  p.r = 2;
  CHECK_THROWS_AS(sturdy_family_member(SturdyFamily::AlternatingBlocks, p), std::invalid_argument);

  // Base 10 members checked with the divisor criterion.
  FamilyParams q;
  q.base = 10;
  q.j = 2;
  q.m = 9;
  CHECK_FALSE(is_flimsy_by_divisor_criterion(sturdy_family_member(SturdyFamily::BaseMinusOneDivisor, q), 10).flimsy);
  q.r = 2;
  q.e = 2;
  CHECK_FALSE(is_flimsy_by_divisor_criterion(sturdy_family_member(SturdyFamily::SparseRepunit, q), 10).flimsy);
}

TEST_CASE("ResidueSet rotation matches the definition") {
  for (std::uint32_t n : {1u, 5u, 63u, 64u, 65u, 200u}) {
    ResidueSet src(n);
    for (std::uint32_t r = 0; r < n; r += 3) src.set(r);
    for (std::uint32_t shift : {0u, 1u, 7u, n - 1, n + 5}) {
      ResidueSet got(n);
      got.or_rotated(src, shift);
      ResidueSet want(n);
      src.for_each([&](std::uint32_t x) { want.set(static_cast<std::uint32_t>((x + shift) % n)); });
      CHECK(got == want);
      CHECK(got.count() == src.count());
    }
  }
  ResidueSet a(70), b(70), d(70);
  a.set(3);
  a.set(69);
  b.set(69);
  d.assign_difference(a, b);
  CHECK(d.count() == 1);
  CHECK(d.test(3));
  d.clear();
  CHECK_FALSE(d.any());
}
