#include "sturdy/asymptotics.hpp"

#include <boost/math/constants/constants.hpp>
#include <sstream>
#include <stdexcept>

namespace sturdy::census {

namespace {

const Real& sqrt_pi() {
  static const Real v = boost::multiprecision::sqrt(boost::math::constants::pi<Real>());
  return v;
}

Real rational(long p, long q) { return Real(p) / Real(q); }

}  // namespace

Real AsymptoticModel::evaluate(std::size_t n) const {
  Real v = density;
  const Real N(n);
  for (const auto& t : terms) v += t.coefficient * boost::multiprecision::pow(N, -t.exponent);
  return v;
}

Real leading_constant(std::uint32_t k, PdaMode mode) {
  using boost::multiprecision::sqrt;
  if (k == 3 && mode == PdaMode::Flimsy) return 7 * sqrt(Real(6)) / (24 * sqrt_pi());
  if (k == 5 && mode == PdaMode::Flimsy) return 3 * sqrt(Real(5)) / (8 * sqrt_pi());
  if (k == 3 && mode == PdaMode::Equal) return sqrt(Real(6)) / (4 * sqrt_pi());
  if (k == 5 && mode == PdaMode::Equal) return sqrt(Real(5)) / (4 * sqrt_pi());
  throw std::invalid_argument("no asymptotic constant known for k = " + std::to_string(k));
}

AsymptoticModel leading_model(std::uint32_t k, PdaMode mode) {
  AsymptoticModel m;
  m.name = std::to_string(k) + "-" + std::string(to_string(mode)) + " leading term";
  const Real c = leading_constant(k, mode);
  if (mode == PdaMode::Flimsy) {
    m.density = rational(1, 4);
    m.terms.push_back({-c, rational(1, 2)});
  } else {
    m.density = 0;
    m.terms.push_back({c, rational(1, 2)});
  }
  m.next_exponent = rational(3, 2);
  return m;
}

AsymptoticModel flimsy3_expansion() {
  AsymptoticModel m;
  m.name = "3-flimsy four-term expansion";
  m.density = rational(1, 4);
  const Real s = boost::multiprecision::sqrt(Real(6)) / sqrt_pi();
  m.terms = {
      {-s * rational(7, 24), rational(1, 2)},
      {s * rational(13, 72), rational(3, 2)},
      {-s * rational(17, 64), rational(5, 2)},
      {s * rational(3365, 13824), rational(7, 2)},
  };
  m.next_exponent = rational(9, 2);
  return m;
}

Real density(const BigUint& count, std::size_t n) {
  // Keep the top bits only; 400 bits exceed the working precision.
  const std::size_t bits = count.bit_length();
  const std::size_t drop = bits > 400 ? bits - 400 : 0;
  const BigUint top = count >> drop;
  Real v(top.to_string());
  return boost::multiprecision::ldexp(v, static_cast<int>(drop) - static_cast<int>(n));
}

AsymptoticReport asymptotic_check(const std::vector<BigUint>& counts, const AsymptoticModel& model,
                                  const std::vector<std::size_t>& ns) {
  AsymptoticReport r;
  r.model = model.name;
  r.max_scaled_residual = 0;
  for (auto n : ns) {
    if (n == 0 || n >= counts.size()) throw std::out_of_range("asymptotic_check: no count for N = " + std::to_string(n));
    AsymptoticPoint p;
    p.n = n;
    p.ratio = density(counts[n], n);
    p.model = model.evaluate(n);
    p.residual = p.ratio - p.model;
    p.scaled_residual = boost::multiprecision::abs(p.residual) * boost::multiprecision::pow(Real(n), model.next_exponent);
    p.relative_error = boost::multiprecision::abs(p.residual) / boost::multiprecision::abs(p.model - model.density);
    if (p.scaled_residual > r.max_scaled_residual) r.max_scaled_residual = p.scaled_residual;
    r.points.push_back(p);
  }
  return r;
}

std::string format_real(const Real& v, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

}  // namespace sturdy::census
