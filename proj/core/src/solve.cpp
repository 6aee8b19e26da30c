#include <bit>
#include <stdexcept>

#include "radix_search.hpp"
#include "sturdy/numeric.hpp"
#include "sturdy/solvers.hpp"

namespace sturdy {

std::string_view to_string(Character c) { return c == Character::Sturdy ? "S" : "F"; }

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Dp: return "dp";
    case Algorithm::Aut: return "aut";
    case Algorithm::Bfs01: return "bfs01";
    case Algorithm::OrderDegBfs: return "order_deg_bfs";
    case Algorithm::Auto: return "auto";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::Dp, Algorithm::Aut, Algorithm::Bfs01, Algorithm::OrderDegBfs, Algorithm::Auto}) {
    if (name == to_string(a)) return a;
  }
  throw std::invalid_argument("unknown algorithm: " + std::string(name));
}

namespace {

// Tries the swm = 2 and swm = 3 shortcuts; on success fills char, swm, msw.
bool apply_shortcuts(std::uint32_t n, SturdyReport& rep) {
  const std::uint32_t s = static_cast<std::uint32_t>(std::popcount(n));
  BigUint multiple;
  if (auto k = shortcut_swm2(n)) {
    rep.swm = 2;
    multiple = BigUint::pow2(*k) + BigUint(1);
  } else if (s <= 3) {
    rep.swm = s;  // swm >= 3 >= s
  } else if (auto kl = shortcut_swm3(n)) {
    rep.swm = 3;
    multiple = BigUint::pow2(kl->second) + BigUint::pow2(kl->first) + BigUint(1);
  } else {
    return false;
  }
  rep.character = rep.swm < s ? Character::Flimsy : Character::Sturdy;
  if (rep.character == Character::Sturdy) multiple = BigUint(n);
  rep.witness_multiple = multiple;
  rep.msw = multiple / BigUint(n);
  return true;
}

SturdyReport mfw_by_aut(std::uint32_t n, SturdyReport rep) {
  const std::uint32_t s = static_cast<std::uint32_t>(std::popcount(n));
  const auto res = detail::radix_least_multiples(n, s - 1, true);
  rep.mfw = *res.first_accepted / BigUint(n);
  return rep;
}

SturdyReport solve_odd(std::uint32_t n, Algorithm algorithm, FieldSet wanted, const SolveOptions& opt) {
  if (algorithm == Algorithm::OrderDegBfs && wanted.mfw) {
    throw UnsupportedCombination("order_deg_bfs does not compute mfw");
  }
  const bool char_only = !wanted.swm && !wanted.msw && !wanted.mfw;
  SturdyReport rep;
  rep.n = n;
  rep.algorithm = algorithm;

  if (char_only && opt.quick_witness) {
    if (quick_flimsy_witness(n)) {
      rep.character = Character::Flimsy;
      return rep;
    }
  }

  if (opt.use_shortcuts && apply_shortcuts(n, rep)) {
    if (!wanted.mfw || rep.character == Character::Sturdy) return rep;
    switch (algorithm) {
      case Algorithm::Dp: {
        SturdyReport full = dp_solve(n);
        rep.mfw = full.mfw;
        return rep;
      }
      default:
        return mfw_by_aut(n, rep);
    }
  }

  switch (algorithm) {
    case Algorithm::Dp:
      return dp_solve(n);
    case Algorithm::Aut:
      if (char_only) {
        rep.character = aut_character(n);
        return rep;
      }
      return aut_solve(n);
    case Algorithm::Bfs01:
    case Algorithm::Auto: {
      SturdyReport r = bfs01_then_least(n, wanted);
      r.algorithm = algorithm;
      return r;
    }
    case Algorithm::OrderDegBfs:
      return order_deg_bfs_solve(n, wanted);
  }
  throw std::invalid_argument("unknown algorithm");
}

}  // namespace

SturdyReport solve(std::uint64_t n, Algorithm algorithm, FieldSet wanted, const SolveOptions& options) {
  if (n == 0) throw std::invalid_argument("solve: n must be positive");
  const std::uint64_t odd = numeric::reduce_base_part(n, 2);
  if (odd > 0xffffffffu) throw std::overflow_error("solve: odd part of n must be below 2^32");

  SturdyReport rep;
  if (odd == 1) {
    rep.character = Character::Sturdy;
    rep.swm = 1;
    rep.msw = BigUint(1);
    rep.witness_multiple = BigUint(n);
    rep.algorithm = algorithm;
    if (algorithm == Algorithm::OrderDegBfs && wanted.mfw) {
      throw UnsupportedCombination("order_deg_bfs does not compute mfw");
    }
  } else {
    rep = solve_odd(static_cast<std::uint32_t>(odd), algorithm, wanted, options);
  }

  // Multiplying by 2^a changes neither digit sums nor the multipliers.
  rep.n = n;
  if (rep.witness_multiple && odd != n) rep.witness_multiple = *rep.witness_multiple * BigUint(n / odd);
  if (!wanted.swm) rep.swm = 0;
  if (!wanted.msw) rep.msw.reset();
  if (!wanted.mfw) rep.mfw.reset();
  if (!wanted.swm && !wanted.msw) rep.witness_multiple.reset();
  return rep;
}

bool is_sturdy(std::uint64_t n, Algorithm algorithm) {
  return solve(n, algorithm, FieldSet::char_only()).character == Character::Sturdy;
}

}  // namespace sturdy
