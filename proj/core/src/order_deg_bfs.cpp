#include <bit>
#include <limits>
#include <stdexcept>

#include "sturdy/residue_set.hpp"
#include "sturdy/solvers.hpp"

namespace sturdy {

namespace {

constexpr std::uint32_t kNoTop = std::numeric_limits<std::uint32_t>::max();

std::vector<std::uint32_t> powers_of_two(std::uint32_t n) {
  std::vector<std::uint32_t> pw;
  std::uint64_t p = 1;
  do {
    pw.push_back(static_cast<std::uint32_t>(p));
    p = p * 2 % n;
  } while (p != 1);
  return pw;
}

// swm by level-synchronous BFS from residue 0 over x -> x + 2^j. Once layer D
// is complete, every split of a multiple with at most 2D ones into two
// halves of at most D powers each has been seen, so the first layer that
// closes a pair x, n - x gives swm.
std::uint32_t meet_in_middle_swm(std::uint32_t n, const std::vector<std::uint32_t>& pw) {
  const std::uint32_t s = static_cast<std::uint32_t>(std::popcount(n));
  std::vector<std::uint8_t> depth(n, 0xff);
  ResidueSet visited(n), layer(n), next(n), fresh(n);
  visited.set(0);
  layer.set(0);
  depth[0] = 0;
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  for (std::uint32_t D = 1;; ++D) {
    next.clear();
    for (std::uint32_t p : pw) next.or_rotated(layer, p);
    fresh.assign_difference(next, visited);
    // A power reaching 0 directly would need n | 2^j, impossible for odd n >= 3.
    fresh.for_each([&](std::uint32_t x) { depth[x] = static_cast<std::uint8_t>(D); });
    fresh.for_each([&](std::uint32_t x) {
      const std::uint32_t y = n - x;
      if (depth[y] != 0xff) best = std::min<std::uint32_t>(best, D + depth[y]);
    });
    visited |= fresh;
    layer = fresh;
    if (best != std::numeric_limits<std::uint32_t>::max()) return std::min(best, s);
    if (2 * D + 1 >= s || !fresh.any()) return s;
  }
}

// Least multiple of n that is a sum of w distinct powers 2^0..2^(ord-1).
// top[d][x] is the least possible top exponent over d-element sets summing to
// x; the least value is then 2^top + least(d - 1, x - 2^top).
BigUint least_multiple_with_weight(std::uint32_t n, std::uint32_t w, const std::vector<std::uint32_t>& pw) {
  const auto order = static_cast<std::uint32_t>(pw.size());
  std::vector<std::vector<std::uint32_t>> top(w, std::vector<std::uint32_t>(n, kNoTop));
  std::vector<ResidueSet> assigned(w, ResidueSet(n));
  assigned[0].set(0);

  ResidueSet allowed(n), hit(n), fresh(n);
  for (std::uint32_t d = 1; d < w; ++d) {
    // Elements of layer d - 1 become usable below exponent j once their top < j.
    std::vector<std::vector<std::uint32_t>> by_top(order + 1);
    assigned[d - 1].for_each([&](std::uint32_t y) {
      const std::uint32_t t = d == 1 ? 0 : top[d - 1][y] + 1;
      by_top[t].push_back(y);
    });
    allowed.clear();
    for (std::uint32_t j = 0; j < order; ++j) {
      for (std::uint32_t y : by_top[j]) allowed.set(y);
      hit.clear();
      hit.or_rotated(allowed, pw[j]);
      fresh.assign_difference(hit, assigned[d]);
      fresh.for_each([&](std::uint32_t x) { top[d][x] = j; });
      assigned[d] |= fresh;
    }
  }

  auto pred = [&](std::uint32_t x, std::uint32_t j) { return x >= pw[j] ? x - pw[j] : x + n - pw[j]; };
  for (std::uint32_t j = 0; j < order; ++j) {
    const std::uint32_t y = pred(0, j);
    const bool ok = w == 1 ? y == 0 : (top[w - 1][y] != kNoTop && top[w - 1][y] < j);
    if (!ok) continue;
    BigUint v = BigUint::pow2(j);
    std::uint32_t x = y;
    for (std::uint32_t d = w - 1; d >= 1; --d) {
      const std::uint32_t t = top[d][x];
      v += BigUint::pow2(t);
      x = pred(x, t);
    }
    return v;
  }
  throw std::logic_error("order_deg_bfs: no multiple of the expected weight");
}

}  // namespace

SturdyReport order_deg_bfs_solve(std::uint32_t n, FieldSet wanted) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("order_deg_bfs_solve: n must be odd and at least 3");
  if (wanted.mfw) throw UnsupportedCombination("order_deg_bfs does not compute mfw");
  const std::uint32_t s = static_cast<std::uint32_t>(std::popcount(n));
  const auto pw = powers_of_two(n);

  SturdyReport rep;
  rep.n = n;
  rep.algorithm = Algorithm::OrderDegBfs;
  rep.swm = meet_in_middle_swm(n, pw);
  rep.character = rep.swm == s ? Character::Sturdy : Character::Flimsy;
  if (wanted.msw) {
    if (rep.character == Character::Sturdy) {
      rep.msw = BigUint(1);
      rep.witness_multiple = BigUint(n);
    } else {
      rep.witness_multiple = least_multiple_with_weight(n, rep.swm, pw);
      rep.msw = *rep.witness_multiple / BigUint(n);
    }
  }
  return rep;
}

}  // namespace sturdy
