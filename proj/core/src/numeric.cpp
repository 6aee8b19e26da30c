#include "sturdy/numeric.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace sturdy::numeric {

namespace {

void require_base(std::uint32_t base) {
  if (base < 2) throw std::invalid_argument("base must be at least 2");
}

BigUint from_digits_msb(const std::vector<std::uint32_t>& digits, std::uint32_t base) {
  BigUint v;
  const BigUint b(base);
  for (std::uint32_t d : digits) {
    v *= b;
    v += BigUint(d);
  }
  return v;
}

}  // namespace

Digits Digits::from_value(const BigUint& v, std::uint32_t base) {
  require_base(base);
  Digits out{base, v.digits_lsb_first(base)};
  std::reverse(out.digits.begin(), out.digits.end());
  if (out.digits.empty()) out.digits.push_back(0);
  return out;
}

Digits Digits::parse(std::string_view text, std::uint32_t base) {
  require_base(base);
  if (base > 10) throw std::invalid_argument("Digits::parse supports bases up to 10");
  if (text.empty()) throw std::invalid_argument("Digits::parse: empty string");
  Digits out{base, {}};
  for (char c : text) {
    if (c < '0' || static_cast<std::uint32_t>(c - '0') >= base) {
      throw std::invalid_argument("Digits::parse: digit out of range");
    }
    out.digits.push_back(static_cast<std::uint32_t>(c - '0'));
  }
  return out;
}

BigUint Digits::value() const { return from_digits_msb(digits, base); }

std::string Digits::to_string() const {
  std::string s;
  for (std::uint32_t d : digits) {
    if (d < 10) {
      s.push_back(static_cast<char>('0' + d));
    } else {
      s += "(" + std::to_string(d) + ")";
    }
  }
  return s;
}

std::uint64_t digit_sum(const BigUint& v, std::uint32_t base) {
  require_base(base);
  if (base == 2) return v.popcount();
  std::uint64_t s = 0;
  for (std::uint32_t d : v.digits_lsb_first(base)) s += d;
  return s;
}

std::uint64_t digit_sum(std::uint64_t v, std::uint32_t base) {
  require_base(base);
  if (base == 2) return static_cast<std::uint64_t>(std::popcount(v));
  std::uint64_t s = 0;
  for (; v != 0; v /= base) s += v % base;
  return s;
}

Digits complement(const Digits& x) {
  Digits out = x;
  for (auto& d : out.digits) {
    if (d >= x.base) throw std::invalid_argument("complement: digit out of range");
    d = x.base - 1 - d;
  }
  return out;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  a %= m;
  while (e != 0) {
    if (e & 1) result = mul_mod(result, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return result;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  auto take = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e != 0) out.emplace_back(p, e);
  };
  take(2);
  take(3);
  for (std::uint64_t p = 5; p <= n / p; p += 6) {
    take(p);
    take(p + 2);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for all 64-bit n.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("multiplicative_order: modulus must be positive");
  if (n == 1) return 1;
  if (gcd(a % n, n) != 1) throw std::invalid_argument("multiplicative_order: arguments are not coprime");
  // Carmichael's lambda(n) is a multiple of the order.
  std::uint64_t lambda = 1;
  for (auto [p, e] : factorize(n)) {
    std::uint64_t pe1 = 1;
    for (unsigned i = 1; i < e; ++i) pe1 *= p;
    std::uint64_t l = (p - 1) * pe1;
    if (p == 2 && e >= 3) l /= 2;
    lambda = lambda / gcd(lambda, l) * l;
  }
  std::uint64_t order = lambda;
  for (auto [q, e] : factorize(lambda)) {
    (void)e;
    while (order % q == 0 && pow_mod(a, order / q, n) == 1) order /= q;
  }
  return order;
}

std::uint64_t multiplicative_order(const BigUint& a, const BigUint& n, std::uint64_t cap) {
  if (n.is_zero()) throw std::invalid_argument("multiplicative_order: modulus must be positive");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.mpz().get_mpz_t(), n.mpz().get_mpz_t());
  if (n == BigUint(1)) return 1;
  if (g != 1) throw std::invalid_argument("multiplicative_order: arguments are not coprime");
  const BigUint base = a % n;
  BigUint x = base;
  for (std::uint64_t v = 1; v <= cap; ++v) {
    if (x == BigUint(1)) return v;
    x = (x * base) % n;
  }
  throw std::overflow_error("multiplicative_order: iteration cap exceeded");
}

std::uint64_t reduce_base_part(std::uint64_t n, std::uint32_t base) {
  require_base(base);
  if (n == 0) throw std::invalid_argument("reduce_base_part: n must be positive");
  for (auto [p, e] : factorize(base)) {
    (void)e;
    while (n % p == 0) n /= p;
  }
  return n;
}

DivisorCriterionResult is_flimsy_by_divisor_criterion_with_order(const BigUint& n,
                                                                 std::uint32_t base,
                                                                 std::uint64_t j) {
  require_base(base);
  if (n.is_zero()) throw std::invalid_argument("divisor criterion: n must be positive");
  if (mpz_gcd_ui(nullptr, n.mpz().get_mpz_t(), base) != 1) {
    throw std::invalid_argument("divisor criterion: n must be coprime to the base");
  }
  const BigUint span = BigUint::pow(base, j) - BigUint(1);
  if (!span.divisible_by(n)) {
    throw std::invalid_argument("divisor criterion: n does not divide base^j - 1");
  }
  const BigUint bound = span / n;
  if (bound.bit_length() > 40) {
    throw std::overflow_error("divisor criterion: multiplier range too large to scan");
  }
  const std::uint64_t limit = bound.to_u64();
  const std::uint64_t target = digit_sum(n, base);

  DivisorCriterionResult result;
  result.order = j;
  BigUint multiple = n;
  for (std::uint64_t k = 1; k <= limit; ++k, multiple += n) {
    if (digit_sum(multiple, base) < target) {
      result.flimsy = true;
      result.witness = BigUint(k);
      result.multipliers_scanned = BigUint(k);
      return result;
    }
  }
  result.multipliers_scanned = bound;
  return result;
}

DivisorCriterionResult is_flimsy_by_divisor_criterion(const BigUint& n, std::uint32_t base,
                                                      std::uint64_t order_cap) {
  require_base(base);
  if (n.is_zero()) throw std::invalid_argument("divisor criterion: n must be positive");
  if (mpz_gcd_ui(nullptr, n.mpz().get_mpz_t(), base) != 1) {
    throw std::invalid_argument("divisor criterion: n must be coprime to the base");
  }
  const std::uint64_t j = multiplicative_order(BigUint(base), n, order_cap);
  return is_flimsy_by_divisor_criterion_with_order(n, base, j);
}

std::vector<std::uint64_t> distinct_power_witness(std::uint64_t n, const BigUint& multiple,
                                                  std::uint32_t base) {
  require_base(base);
  if (n == 0 || multiple.is_zero() || !multiple.divisible_by(BigUint(n))) {
    throw std::invalid_argument("distinct_power_witness: not a positive multiple of n");
  }
  const std::uint64_t order = multiplicative_order(base, n);
  std::map<std::uint64_t, std::uint64_t> folded;  // exponent mod order -> total digit weight
  const auto digits = multiple.digits_lsb_first(base);
  for (std::size_t p = 0; p < digits.size(); ++p) {
    if (digits[p] != 0) folded[p % order] += digits[p];
  }
  std::vector<std::uint64_t> exps;
  for (auto [i, c] : folded) {
    for (std::uint64_t j = 0; j < c; ++j) exps.push_back(j * order + i);
  }
  std::sort(exps.begin(), exps.end());
  return exps;
}

BigUint lift_digit_sum(const BigUint& multiple, std::uint64_t n, std::uint32_t base) {
  auto exps = distinct_power_witness(n, multiple, base);
  const std::uint64_t order = multiplicative_order(base, n);
  if (exps.back() == 0) {
    for (auto& e : exps) ++e;
  }
  const std::uint64_t top = exps.back();
  exps.pop_back();
  for (std::uint64_t i = 1; i <= base; ++i) exps.push_back(i * order + top - 1);
  BigUint out;
  for (std::uint64_t e : exps) out += BigUint::pow(base, e);
  return out;
}

BigUint sturdy_family_member(SturdyFamily family, const FamilyParams& p) {
  require_base(p.base);
  const BigUint one(1);
  switch (family) {
    case SturdyFamily::BaseMinusOneDivisor: {
      if (p.j < 1 || p.m < 1 || (p.base - 1) % p.m != 0) {
        throw std::invalid_argument("family parameters: need j >= 1 and m | base - 1");
      }
      return (BigUint::pow(p.base, p.j) - one) / BigUint(p.m);
    }
    case SturdyFamily::SparseRepunit: {
      if (p.r < 1 || p.e < 1) throw std::invalid_argument("family parameters: need r, e >= 1");
      return (BigUint::pow(p.base, p.r * p.e) - one) / (BigUint::pow(p.base, p.e) - one);
    }
    case SturdyFamily::MirroredComplement: {
      if (p.x.base != p.base || p.x.digits.empty() || p.x.digits.front() == 0) {
        throw std::invalid_argument("family parameters: x must be a base-b representation");
      }
      for (auto d : p.x.digits) {
        if (d >= p.base) throw std::invalid_argument("family parameters: digit out of range");
      }
      Digits y = p.x;
      y.digits.insert(y.digits.end(), p.i, p.base - 1);
      const Digits xc = complement(p.x);
      y.digits.insert(y.digits.end(), xc.digits.begin(), xc.digits.end());
      return y.value();
    }
    case SturdyFamily::SquaredRepunit: {
      if (p.j < 1 || p.m < 1 || (p.base - 1) % (p.m * p.m) != 0) {
        throw std::invalid_argument("family parameters: need j >= 1 and m^2 | base - 1");
      }
      const BigUint r = BigUint::pow(p.base, p.j) - one;
      return r * r / BigUint(p.m * p.m);
    }
    case SturdyFamily::AlternatingBlocks: {
      if (p.base != 2 || p.e < 1 || p.r < 1) {
        throw std::invalid_argument("family parameters: base 2 with e, r >= 1");
      }
      std::string bits;
      for (std::uint64_t k = 0; k < p.r; ++k) {
        bits.append(p.e, '1');
        bits.append(p.e, '0');
      }
      bits.append(p.e, '1');
      return BigUint::from_binary(bits);
    }
  }
  throw std::invalid_argument("unknown sturdy family");
}

}  // namespace sturdy::numeric
