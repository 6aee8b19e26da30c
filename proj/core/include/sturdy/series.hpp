#pragma once

// Census power series of a grammar: terminal -> x, concatenation -> product,
// alternation -> sum. Coefficient [x^N] of a variable counts its derivations
// of length-N words.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sturdy/biguint.hpp"
#include "sturdy/grammar.hpp"

namespace sturdy::census {

struct Monomial {
  std::uint64_t coefficient = 1;
  std::uint32_t x_power = 0;
  std::vector<std::uint32_t> vars;  // sorted; repeats mean powers
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct SeriesSystem {
  std::vector<std::string> names;
  std::uint32_t start = 0;
  std::vector<std::vector<Monomial>> equations;  // one right-hand side per variable
};

/// The system cannot be solved degree by degree: some variable derives the
/// empty word, or unit productions form a cycle.
class NotProper : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Identical monomials of one variable are merged into a coefficient.
/// Throws NotProper as described above.
SeriesSystem grammar_to_system(const Grammar& g);

/// `S = x F + x S`, start first.
std::string to_text(const SeriesSystem& sys);

using Coefficients = std::vector<std::vector<BigUint>>;  // [variable][degree]

/// Exact coefficients of degrees 0..n_max, computed degree by degree:
/// products only need lower degrees and unit equations are taken in
/// dependency order.
Coefficients extract_coefficients(const SeriesSystem& sys, std::size_t n_max);

/// Plain fixed-point iteration from zero, truncated at degree n_max.
Coefficients iterate_system(const SeriesSystem& sys, std::size_t n_max, std::size_t iterations);

using IntPoly = std::vector<mpz_class>;  // coefficients, lowest degree first

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);

/// a2 S^2 + a1 S + a0 truncated to degrees below `order`.
IntPoly quadratic_residual(const std::vector<BigUint>& s, const IntPoly& a2, const IntPoly& a1, const IntPoly& a0,
                           std::size_t order);

/// Coefficients (a2, a1, a0) of the quadratic satisfied by the 3-flimsy
/// census series S(x):
///   x(2x-1)^2(x+1)(2x^2-x+1) S^2 + (2x-1)(x-1)^2(x+1)(2x^2-x+1) S
///     + x^4(x^2-x+1) = 0.
struct Quadratic {
  IntPoly a2, a1, a0;
};
Quadratic flimsy3_quadratic();

}  // namespace sturdy::census
