#pragma once

// Base-b digit arithmetic, multiplicative orders, and constructive results
// about digit sums of multiples. Everything here is a pure function.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sturdy/biguint.hpp"

namespace sturdy::numeric {

/// A base-b digit string, most significant digit first.
///
/// Values built with from_value() have no leading zero (zero itself is the
/// single digit 0). complement() may produce leading zeros.
struct Digits {
  std::uint32_t base = 2;
  std::vector<std::uint32_t> digits;

  static Digits from_value(const BigUint& v, std::uint32_t base);
  /// Parses "1011" style strings; digits above 9 are not supported.
  static Digits parse(std::string_view text, std::uint32_t base);

  BigUint value() const;
  std::string to_string() const;
  std::size_t size() const { return digits.size(); }

  friend bool operator==(const Digits&, const Digits&) = default;
};

std::uint64_t digit_sum(const BigUint& v, std::uint32_t base);
std::uint64_t digit_sum(std::uint64_t v, std::uint32_t base);

/// Replaces each digit d by base - 1 - d. Length is preserved.
Digits complement(const Digits& x);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

/// Prime factorisation by trial division, as (prime, exponent) pairs.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// Least v >= 1 with a^v = 1 (mod n). Requires gcd(a, n) = 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

/// Same for arbitrary-precision moduli by plain iteration; throws
/// std::overflow_error once `cap` steps pass without reaching 1.
std::uint64_t multiplicative_order(const BigUint& a, const BigUint& n, std::uint64_t cap);

/// Strips from n every prime power whose prime divides `base`.
std::uint64_t reduce_base_part(std::uint64_t n, std::uint32_t base);

struct DivisorCriterionResult {
  bool flimsy = false;
  std::optional<BigUint> witness;  // least k with s_b(kn) < s_b(n)
  std::uint64_t order = 0;         // j with n | base^j - 1
  BigUint multipliers_scanned;
};

/// Decides flimsiness of n (coprime to base) by scanning the multipliers
/// k = 1 .. (base^j - 1)/n in ascending order; the first hit is the least
/// flimsy witness. The order j is computed by iteration bounded by `order_cap`.
DivisorCriterionResult is_flimsy_by_divisor_criterion(const BigUint& n, std::uint32_t base,
                                                      std::uint64_t order_cap = 1u << 20);

/// Variant for callers that already know some j with n | base^j - 1.
DivisorCriterionResult is_flimsy_by_divisor_criterion_with_order(const BigUint& n,
                                                                 std::uint32_t base,
                                                                 std::uint64_t j);

/// Exponents e_1 < ... < e_t (t = digit sum of `multiple`) whose powers of
/// `base` sum to a multiple of n. Digits are folded modulo ord_base(n) and
/// repeated digits are spread out by multiples of the order.
std::vector<std::uint64_t> distinct_power_witness(std::uint64_t n, const BigUint& multiple,
                                                  std::uint32_t base);

/// A multiple of n whose digit sum exceeds that of `multiple` by base - 1:
/// the highest power b^m in the distinct-power form is replaced by the b
/// powers b^(i*ord + m - 1), i = 1..b.
BigUint lift_digit_sum(const BigUint& multiple, std::uint64_t n, std::uint32_t base);

enum class SturdyFamily {
  BaseMinusOneDivisor,  // (b^j - 1) / m with m | b - 1
  SparseRepunit,        // (b^(r e) - 1) / (b^e - 1)
  MirroredComplement,   // x (b-1)^i complement(x)
  SquaredRepunit,       // (b^j - 1)^2 / m^2 with m^2 | b - 1
  AlternatingBlocks,    // base 2 only: (1^e 0^e)^r 1^e
};

struct FamilyParams {
  std::uint32_t base = 2;
  std::uint64_t j = 1;
  std::uint64_t m = 1;
  std::uint64_t r = 1;
  std::uint64_t e = 1;
  std::uint64_t i = 0;
  Digits x;
};

/// A member of one of the provably sturdy families; throws
/// std::invalid_argument for parameters outside the family.
BigUint sturdy_family_member(SturdyFamily family, const FamilyParams& params);

}  // namespace sturdy::numeric
