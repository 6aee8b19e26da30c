#include "sturdy/biguint.hpp"

#include <ostream>
#include <stdexcept>

namespace sturdy {

BigUint::BigUint(std::uint64_t v) {
  mpz_import(value_.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
}

BigUint::BigUint(const mpz_class& v) : value_(v) {
  if (sgn(value_) < 0) throw std::domain_error("BigUint: negative value");
}

BigUint::BigUint(std::string_view decimal) {
  if (decimal.empty()) throw std::invalid_argument("BigUint: empty string");
  for (char c : decimal) {
    if (c < '0' || c > '9') throw std::invalid_argument("BigUint: not a decimal integer");
  }
  value_.set_str(std::string(decimal), 10);
}

BigUint BigUint::pow(std::uint64_t base, std::uint64_t exponent) {
  BigUint r;
  mpz_class b = BigUint(base).value_;
  mpz_pow_ui(r.value_.get_mpz_t(), b.get_mpz_t(), exponent);
  return r;
}

BigUint BigUint::pow2(std::uint64_t exponent) {
  BigUint r;
  mpz_setbit(r.value_.get_mpz_t(), exponent);
  return r;
}

BigUint BigUint::from_binary(std::string_view bits) {
  if (bits.empty()) throw std::invalid_argument("BigUint: empty bit string");
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("BigUint: not a bit string");
  }
  BigUint r;
  r.value_.set_str(std::string(bits), 2);
  return r;
}

bool BigUint::fits_u64() const { return mpz_sizeinbase(value_.get_mpz_t(), 2) <= 64; }

std::uint64_t BigUint::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("BigUint: value exceeds 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, value_.get_mpz_t());
  return out;
}

std::size_t BigUint::bit_length() const {
  return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

std::uint64_t BigUint::popcount() const { return mpz_popcount(value_.get_mpz_t()); }

bool BigUint::bit(std::size_t i) const { return mpz_tstbit(value_.get_mpz_t(), i) != 0; }

std::vector<std::uint32_t> BigUint::digits_lsb_first(std::uint32_t base) const {
  if (base < 2) throw std::invalid_argument("digit base must be at least 2");
  std::vector<std::uint32_t> out;
  if (base == 2) {
    const std::size_t len = bit_length();
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i) out.push_back(bit(i) ? 1 : 0);
    return out;
  }
  mpz_class q = value_;
  while (q != 0) {
    out.push_back(static_cast<std::uint32_t>(mpz_tdiv_q_ui(q.get_mpz_t(), q.get_mpz_t(), base)));
  }
  return out;
}

std::string BigUint::to_string() const { return value_.get_str(10); }

std::string BigUint::to_binary() const { return value_.get_str(2); }

std::uint64_t BigUint::mod_u64(std::uint64_t m) const {
  if (m == 0) throw std::domain_error("BigUint: modulus zero");
  mpz_class r;
  mpz_mod(r.get_mpz_t(), value_.get_mpz_t(), BigUint(m).value_.get_mpz_t());
  return BigUint(r).to_u64();
}

bool BigUint::divisible_by(const BigUint& d) const {
  if (d.is_zero()) return is_zero();
  return mpz_divisible_p(value_.get_mpz_t(), d.value_.get_mpz_t()) != 0;
}

BigUint& BigUint::operator+=(const BigUint& o) {
  value_ += o.value_;
  return *this;
}

BigUint& BigUint::operator-=(const BigUint& o) {
  if (cmp(value_, o.value_) < 0) throw std::domain_error("BigUint: subtraction underflow");
  value_ -= o.value_;
  return *this;
}

BigUint& BigUint::operator*=(const BigUint& o) {
  value_ *= o.value_;
  return *this;
}

BigUint& BigUint::operator/=(const BigUint& o) {
  if (o.is_zero()) throw std::domain_error("BigUint: division by zero");
  mpz_tdiv_q(value_.get_mpz_t(), value_.get_mpz_t(), o.value_.get_mpz_t());
  return *this;
}

BigUint& BigUint::operator%=(const BigUint& o) {
  if (o.is_zero()) throw std::domain_error("BigUint: division by zero");
  mpz_tdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), o.value_.get_mpz_t());
  return *this;
}

BigUint& BigUint::operator<<=(std::size_t s) {
  mpz_mul_2exp(value_.get_mpz_t(), value_.get_mpz_t(), s);
  return *this;
}

BigUint& BigUint::operator>>=(std::size_t s) {
  mpz_tdiv_q_2exp(value_.get_mpz_t(), value_.get_mpz_t(), s);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const BigUint& v) { return os << v.to_string(); }

}  // namespace sturdy
