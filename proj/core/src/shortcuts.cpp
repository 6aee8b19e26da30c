#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "sturdy/numeric.hpp"
#include "sturdy/solvers.hpp"

namespace sturdy {

namespace {

void require_odd_modulus(std::uint32_t n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("modulus must be odd and at least 3");
}

}  // namespace

std::optional<std::uint64_t> shortcut_swm2(std::uint32_t n) {
  require_odd_modulus(n);
  const std::uint64_t m = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n)))) + 1;

  std::vector<std::pair<std::uint32_t, std::uint32_t>> baby;  // (2^i mod n, i)
  baby.reserve(m);
  std::uint64_t x = 1;
  for (std::uint64_t i = 0; i < m; ++i) {
    baby.emplace_back(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(i));
    x = x * 2 % n;
  }
  std::sort(baby.begin(), baby.end());

  // Giant step multiplies by 2^-m; the inverse of 2 is (n + 1) / 2.
  const std::uint64_t giant = numeric::pow_mod((n + 1) / 2, m, n);
  std::uint64_t target = n - 1;
  for (std::uint64_t g = 0; g <= m; ++g) {
    auto it = std::lower_bound(baby.begin(), baby.end(),
                               std::make_pair(static_cast<std::uint32_t>(target), std::uint32_t{0}));
    if (it != baby.end() && it->first == target) {
      const std::uint64_t k = g * m + it->second;
      if (k >= 1) return k;
      // k = 0 would need 1 = -1, impossible for n >= 3; check the next match.
      ++it;
      if (it != baby.end() && it->first == target) return g * m + it->second;
    }
    target = target * giant % n;
  }
  return std::nullopt;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> shortcut_swm3(std::uint32_t n) {
  require_odd_modulus(n);
  // seen holds 2^l mod n for 1 <= l < k; l = 0 would give 2 + 2^k, two bits.
  std::vector<std::uint64_t> seen(n / 64 + 1, 0);
  auto test = [&](std::uint64_t r) { return (seen[r >> 6] >> (r & 63)) & 1; };
  std::uint64_t pk = 2 % n;
  for (std::uint32_t k = 1; pk != 1; ++k, pk = pk * 2 % n) {
    const std::uint64_t want = (2 * static_cast<std::uint64_t>(n) - 1 - pk) % n;
    if (test(want)) {
      std::uint64_t pl = 2 % n;
      std::uint32_t l = 1;
      while (pl != want) {
        pl = pl * 2 % n;
        ++l;
      }
      return std::make_pair(l, k);
    }
    seen[pk >> 6] |= std::uint64_t{1} << (pk & 63);
  }
  return std::nullopt;
}

std::optional<std::uint64_t> quick_flimsy_witness(std::uint32_t n, std::uint64_t limit) {
  require_odd_modulus(n);
  const int s = std::popcount(n);
  for (std::uint64_t k = 3; k <= limit; k += 2) {
    const unsigned __int128 v = static_cast<unsigned __int128>(k) * n;
    const int w = std::popcount(static_cast<std::uint64_t>(v)) +
                  std::popcount(static_cast<std::uint64_t>(v >> 64));
    if (w < s) return k;
  }
  return std::nullopt;
}

}  // namespace sturdy
