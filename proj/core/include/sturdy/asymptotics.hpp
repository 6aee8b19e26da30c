#pragma once

// Asymptotic models for the density counts[N] / 2^N of k-flimsy and k-equal
// numbers in [2^(N-1), 2^N).

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "sturdy/biguint.hpp"
#include "sturdy/pda.hpp"

namespace sturdy::census {

using Real = boost::multiprecision::cpp_bin_float_100;

struct PowerTerm {
  Real coefficient;
  Real exponent;  // contributes coefficient * N^(-exponent)
};

struct AsymptoticModel {
  std::string name;
  Real density;  // constant term of the density
  std::vector<PowerTerm> terms;

  Real evaluate(std::size_t n) const;
  /// Exponent of the first omitted term, used to scale residuals.
  Real next_exponent;
};

/// The constant c in the leading correction c * N^(-1/2).
Real leading_constant(std::uint32_t k, PdaMode mode);

/// density - c N^(-1/2) for flimsy, c N^(-1/2) for equal; k in {3, 5}.
AsymptoticModel leading_model(std::uint32_t k, PdaMode mode);

/// Four correction terms for k = 3 flimsy:
///   1/4 - sqrt(6/pi) (7/24 N^-1/2 - 13/72 N^-3/2 + 17/64 N^-5/2 - 3365/13824 N^-7/2).
AsymptoticModel flimsy3_expansion();

/// counts / 2^n in high precision.
Real density(const BigUint& count, std::size_t n);

struct AsymptoticPoint {
  std::size_t n = 0;
  Real ratio;
  Real model;
  Real residual;         // ratio - model
  Real scaled_residual;  // |residual| * n^next_exponent
  Real relative_error;   // |residual| / |model - density|
};

struct AsymptoticReport {
  std::string model;
  std::vector<AsymptoticPoint> points;
  Real max_scaled_residual;
};

/// counts[N] must be exact for every N in `ns`.
AsymptoticReport asymptotic_check(const std::vector<BigUint>& counts, const AsymptoticModel& model,
                                  const std::vector<std::size_t>& ns);

/// Fixed notation with `digits` significant digits.
std::string format_real(const Real& v, int digits = 12);

}  // namespace sturdy::census
