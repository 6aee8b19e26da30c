#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

#include "radix_search.hpp"
#include "sturdy/solvers.hpp"

namespace sturdy {

namespace detail {

namespace {

constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();

// Divisibility DFA, MSB first: state 0 is the start (a leading 1 is
// required), 1 is dead, 2 + r is residue r.
std::vector<std::array<std::uint32_t, 2>> divisibility_table(std::uint32_t n) {
  std::vector<std::array<std::uint32_t, 2>> t(static_cast<std::size_t>(n) + 2);
  t[0] = {1, 2 + 1 % n};
  t[1] = {1, 1};
  for (std::uint64_t r = 0; r < n; ++r) {
    t[r + 2] = {static_cast<std::uint32_t>(2 + 2 * r % n), static_cast<std::uint32_t>(2 + (2 * r + 1) % n)};
  }
  return t;
}

// At most t ones: states 0..t count ones, t + 1 is dead.
std::vector<std::array<std::uint32_t, 2>> ones_table(std::uint32_t t) {
  std::vector<std::array<std::uint32_t, 2>> tab(t + 2);
  for (std::uint32_t c = 0; c <= t + 1; ++c) tab[c] = {c, std::min(c + 1, t + 1)};
  return tab;
}

}  // namespace

RadixSearchResult radix_least_multiples(std::uint32_t n, std::uint32_t t, bool stop_at_first) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("aut: n must be odd and at least 3");
  if (t == 0) throw std::invalid_argument("aut: ones bound must be positive");
  const auto div = divisibility_table(n);
  const auto ones = ones_table(t);
  const std::uint64_t width = t + 2;
  const std::uint64_t total = (static_cast<std::uint64_t>(n) + 2) * width;
  if (total >= kUnseen) throw std::overflow_error("aut: product automaton too large");

  std::vector<std::uint32_t> parent(total, kUnseen);
  std::vector<std::uint8_t> via(total, 0);
  std::vector<std::uint32_t> queue;
  queue.reserve(std::min<std::uint64_t>(total, 1u << 20));

  const auto start = static_cast<std::uint32_t>(0 * width + 0);
  parent[start] = start;
  queue.push_back(start);

  auto spell = [&](std::uint32_t state) {
    std::string bits;
    while (state != start) {
      bits.push_back(via[state] ? '1' : '0');
      state = parent[state];
    }
    std::reverse(bits.begin(), bits.end());
    return BigUint::from_binary(bits);
  };

  RadixSearchResult out;
  out.least_by_count.resize(t + 1);
  std::uint32_t found = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t q = queue[head];
    const std::uint32_t d = static_cast<std::uint32_t>(q / width);
    const std::uint32_t c = static_cast<std::uint32_t>(q % width);
    for (std::uint32_t bit = 0; bit < 2; ++bit) {
      const std::uint32_t d2 = div[d][bit];
      const std::uint32_t c2 = ones[c][bit];
      if (d2 == 1 || c2 == t + 1) continue;
      const auto q2 = static_cast<std::uint32_t>(d2 * width + c2);
      if (parent[q2] != kUnseen) continue;
      parent[q2] = q;
      via[q2] = static_cast<std::uint8_t>(bit);
      queue.push_back(q2);
      if (d2 == 2) {
        BigUint v = spell(q2);
        if (!out.first_accepted) out.first_accepted = v;
        out.least_by_count[c2] = std::move(v);
        if (stop_at_first || ++found == t) return out;
      }
    }
  }
  return out;
}

}  // namespace detail

SturdyReport aut_solve(std::uint32_t n, std::uint32_t t) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("aut_solve: n must be odd and at least 3");
  const std::uint32_t s = static_cast<std::uint32_t>(std::popcount(n));
  if (t == 0) t = s - 1;
  if (t >= s) throw std::invalid_argument("aut_solve: t must be below s2(n)");

  const auto res = detail::radix_least_multiples(n, t, false);
  SturdyReport rep;
  rep.n = n;
  rep.algorithm = Algorithm::Aut;
  for (std::uint32_t c = 1; c <= t; ++c) {
    if (!res.least_by_count[c]) continue;
    rep.character = Character::Flimsy;
    rep.swm = c;
    rep.witness_multiple = *res.least_by_count[c];
    rep.msw = *rep.witness_multiple / BigUint(n);
    if (t == s - 1) rep.mfw = *res.first_accepted / BigUint(n);
    return rep;
  }
  if (t != s - 1) throw std::domain_error("aut_solve: no multiple with at most t ones; swm undetermined");
  rep.character = Character::Sturdy;
  rep.swm = s;
  rep.msw = BigUint(1);
  rep.witness_multiple = BigUint(n);
  return rep;
}

Character aut_character(std::uint32_t n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("aut_character: n must be odd and at least 3");
  const std::uint32_t s = static_cast<std::uint32_t>(std::popcount(n));
  const auto res = detail::radix_least_multiples(n, s - 1, true);
  return res.first_accepted ? Character::Flimsy : Character::Sturdy;
}

}  // namespace sturdy
