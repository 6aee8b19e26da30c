#include <bit>
#include <stdexcept>

#include "sturdy/residue_set.hpp"
#include "sturdy/solvers.hpp"

namespace sturdy {

// Level i holds the residues reachable as a sum of i distinct powers
// 2^0..2^(r-1). A residue's least representation is fixed the first round it
// appears (the new top power dominates anything found later), so one round
// number per (level, residue) is enough to rebuild it.
SturdyReport dp_solve(std::uint32_t n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("dp_solve: n must be odd and at least 3");
  const std::uint32_t s = static_cast<std::uint32_t>(std::popcount(n));

  std::vector<ResidueSet> x(s, ResidueSet(n));
  std::vector<std::vector<std::uint32_t>> round(s, std::vector<std::uint32_t>(n, 0));
  std::vector<std::uint32_t> power;  // power[r-1] = 2^(r-1) mod n
  x[0].set(0);

  ResidueSet fresh(n);
  ResidueSet shifted(n);
  std::uint64_t p = 1;
  std::uint32_t r = 0;
  do {
    ++r;
    power.push_back(static_cast<std::uint32_t>(p));
    for (std::uint32_t i = s - 1; i >= 1; --i) {
      shifted.clear();
      shifted.or_rotated(x[i - 1], static_cast<std::uint32_t>(p));
      fresh.assign_difference(shifted, x[i]);
      fresh.for_each([&](std::uint32_t j) { round[i][j] = r; });
      x[i] |= fresh;
    }
    p = p * 2 % n;
  } while (p != 1);

  auto value = [&](std::uint32_t level, std::uint32_t j) {
    BigUint v;
    while (level > 0) {
      const std::uint32_t rr = round[level][j];
      v += BigUint::pow2(rr - 1);
      const std::uint32_t pw = power[rr - 1];
      j = j >= pw ? j - pw : j + n - pw;
      --level;
    }
    return v;
  };

  SturdyReport rep;
  rep.n = n;
  rep.algorithm = Algorithm::Dp;
  rep.swm = s;
  std::optional<BigUint> least;
  for (std::uint32_t i = 1; i < s; ++i) {
    if (!x[i].test(0)) continue;
    BigUint v = value(i, 0);
    if (rep.swm == s) {
      rep.swm = i;
      rep.witness_multiple = v;
    }
    if (!least || v < *least) least = v;
  }
  if (rep.swm == s) {
    rep.character = Character::Sturdy;
    rep.msw = BigUint(1);
    rep.witness_multiple = BigUint(n);
  } else {
    rep.character = Character::Flimsy;
    rep.msw = *rep.witness_multiple / BigUint(n);
    rep.mfw = *least / BigUint(n);
  }
  return rep;
}

}  // namespace sturdy
