#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace sturdy {

/// Arbitrary-precision non-negative integer.
///
/// Thin value wrapper over a GMP integer that keeps the non-negativity
/// invariant: subtraction that would go below zero throws std::domain_error.
class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t v);  // NOLINT(google-explicit-constructor)
  explicit BigUint(const mpz_class& v);
  explicit BigUint(std::string_view decimal);

  static BigUint pow(std::uint64_t base, std::uint64_t exponent);
  static BigUint pow2(std::uint64_t exponent);
  /// Parses a string of '0'/'1' characters, most significant bit first.
  static BigUint from_binary(std::string_view bits);

  bool is_zero() const { return value_ == 0; }
  bool fits_u64() const;
  std::uint64_t to_u64() const;  // throws std::overflow_error
  double to_double() const { return value_.get_d(); }

  std::size_t bit_length() const;
  std::uint64_t popcount() const;
  bool bit(std::size_t i) const;
  /// Base-b digits, least significant first. Zero yields an empty vector.
  std::vector<std::uint32_t> digits_lsb_first(std::uint32_t base) const;

  std::string to_string() const;
  std::string to_binary() const;

  std::uint64_t mod_u64(std::uint64_t m) const;
  bool divisible_by(const BigUint& d) const;

  const mpz_class& mpz() const { return value_; }

  BigUint& operator+=(const BigUint& o);
  BigUint& operator-=(const BigUint& o);
  BigUint& operator*=(const BigUint& o);
  BigUint& operator/=(const BigUint& o);
  BigUint& operator%=(const BigUint& o);
  BigUint& operator<<=(std::size_t s);
  BigUint& operator>>=(std::size_t s);

  friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
  friend BigUint operator-(BigUint a, const BigUint& b) { return a -= b; }
  friend BigUint operator*(BigUint a, const BigUint& b) { return a *= b; }
  friend BigUint operator/(BigUint a, const BigUint& b) { return a /= b; }
  friend BigUint operator%(BigUint a, const BigUint& b) { return a %= b; }
  friend BigUint operator<<(BigUint a, std::size_t s) { return a <<= s; }
  friend BigUint operator>>(BigUint a, std::size_t s) { return a >>= s; }

  friend bool operator==(const BigUint& a, const BigUint& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigUint& a, const BigUint& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpz_class value_;
};

std::ostream& operator<<(std::ostream& os, const BigUint& v);

}  // namespace sturdy
