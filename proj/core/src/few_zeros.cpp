#include "sturdy/few_zeros.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include <json.hpp>

#include "sturdy/solvers.hpp"

namespace sturdy::automata {

namespace {

std::uint32_t bit_length(std::uint64_t v) { return static_cast<std::uint32_t>(std::bit_width(v)); }

std::string lsb_string(std::uint64_t n) {
  std::string s;
  for (; n != 0; n >>= 1) s.push_back((n & 1) ? '1' : '0');
  return s;
}

std::string reversed_word(std::string w) {
  std::reverse(w.begin(), w.end());
  return w;
}

std::uint64_t msb_value(const std::string& w) {
  if (w.size() > 64) throw std::overflow_error("binary word longer than 64 bits");
  std::uint64_t v = 0;
  for (char c : w) v = (v << 1) | static_cast<std::uint64_t>(c == '1');
  return v;
}

bool numeric_less(const std::string& a, const std::string& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

void sort_numerically(std::vector<std::string>& words) { std::sort(words.begin(), words.end(), numeric_less); }

std::uint64_t default_multiplier(std::uint32_t j) {
  if (j > 20) throw std::invalid_argument("few zeros: j too large for automata verification");
  return (std::uint64_t{1} << (j + 1)) + 1;
}

}  // namespace

Dfa few_zeros_flimsy_dfa_lsb(std::uint32_t j, std::uint64_t k) {
  if (k < 3 || k % 2 == 0) throw std::invalid_argument("few_zeros_flimsy_dfa: k must be odd and at least 3");
  if (k > 4096) throw std::invalid_argument("few_zeros_flimsy_dfa: k too large");
  // State: carry c < k, zeros of n (capped at j + 1), zeros emitted for kn
  // (capped where the acceptance test saturates), last bit read.
  const std::uint32_t zn_states = j + 2;
  const std::uint32_t ze_cap = j + bit_length(k) + 1;
  const std::uint32_t ze_states = ze_cap + 1;
  auto index = [&](std::uint64_t c, std::uint32_t zn, std::uint32_t ze, std::uint32_t last) {
    return static_cast<std::uint32_t>(((c * zn_states + zn) * ze_states + ze) * 2 + last);
  };

  Dfa d;
  const std::uint64_t total = k * zn_states * ze_states * 2;
  for (std::uint64_t i = 0; i < total; ++i) d.add_state(false);
  for (std::uint64_t c = 0; c < k; ++c) {
    for (std::uint32_t zn = 0; zn < zn_states; ++zn) {
      for (std::uint32_t ze = 0; ze < ze_states; ++ze) {
        for (std::uint32_t last = 0; last < 2; ++last) {
          const std::uint32_t q = index(c, zn, ze, last);
          d.accepting[q] = zn == j && last == 1 && ze > j + static_cast<std::uint32_t>(std::popcount(c));
          for (std::uint32_t b = 0; b < 2; ++b) {
            const std::uint64_t v = k * b + c;
            const std::uint32_t e = static_cast<std::uint32_t>(v & 1);
            const std::uint32_t zn2 = std::min(zn + (b == 0 ? 1u : 0u), j + 1);
            const std::uint32_t ze2 = std::min(ze + (e == 0 ? 1u : 0u), ze_cap);
            d.trans[q][b] = index(v >> 1, zn2, ze2, b);
          }
        }
      }
    }
  }
  d.start = index(0, 0, 0, 0);
  return minimize(d);
}

Dfa few_zeros_flimsy_dfa(std::uint32_t j, std::uint64_t k) { return reversed(few_zeros_flimsy_dfa_lsb(j, k)); }

Dfa odd_with_zeros_lsb(std::uint32_t j) {
  // States: start, dead, then (zeros so far, last bit).
  Dfa d;
  d.start = d.add_state(false);
  const std::uint32_t dead = d.add_state(false);
  auto st = [&](std::uint32_t z, std::uint32_t last) { return 2 + 2 * z + last; };
  for (std::uint32_t z = 0; z <= j; ++z) {
    d.add_state(false);
    d.add_state(z == j);
  }
  d.trans[d.start] = {dead, st(0, 1)};
  for (std::uint32_t z = 0; z <= j; ++z) {
    for (std::uint32_t last = 0; last < 2; ++last) {
      d.trans[st(z, last)] = {z == j ? dead : st(z + 1, 0), st(z, 1)};
    }
  }
  return d;
}

std::vector<std::string> mirrored_family_patterns(std::uint32_t j) {
  if (j == 0) return {"1+"};
  std::vector<std::string> out;
  if (j < 2) return out;
  if (j > 20) throw std::invalid_argument("mirrored_family_patterns: j too large");
  // s = 1 m 0 with |m| = j - 2.
  for (std::uint64_t mid = 0; mid < (std::uint64_t{1} << (j - 2)); ++mid) {
    std::string s = "1";
    for (std::uint32_t i = j - 2; i-- > 0;) s.push_back(((mid >> i) & 1) ? '1' : '0');
    s.push_back('0');
    std::string bar = s;
    for (char& c : bar) c = c == '0' ? '1' : '0';
    out.push_back(s + " 1* " + bar);
  }
  return out;
}

const std::vector<std::uint64_t>& known_sporadic_exceptions(std::uint32_t j) {
  static const std::vector<std::vector<std::uint64_t>> table = {
      {},
      {5},
      {51},
      {17, 85, 89, 455},
      {33, 69, 73, 153, 3855},
      {65, 133, 161, 267, 275, 1365, 31775},
      {129, 259, 261, 273, 385, 525, 549, 561, 585, 645, 657, 705, 771, 777, 801, 1729, 1801, 2275, 3185, 11565,
       13107, 258111},
      {257, 515, 517, 529, 1035, 1065, 1105, 1155, 1157, 1185, 1285, 1545, 1665, 2077, 2201, 2325, 2449, 2573, 2697,
       2821, 2945, 19065, 19275, 21845, 26985, 95325, 2080895},
      {513,   1027,  1029,  1057,  1281,  2055,  2085,  2089,  2097,  2115,   2145,   2193,   2313,     2337,
       2563,  2565,  2625,  3075,  3105,  3585,  4123,  4185,  4371,  4389,   4433,   4619,   4675,     4681,
       4867,  4929,  5187,  6169,  6417,  6665,  6913,  8253,  8505,  8525,   8645,   8757,   9009,     9261,
       9513,  9765,  10017, 10269, 10465, 10521, 10773, 11025, 11277, 11529,  11781,  12033,  12483,    13505,
       14497, 18631, 25623, 34695, 39321, 42405, 50115, 57825, 158875, 222425, 774333, 16711935},
      {1025,  2051,  2057,  2065,  2177,  3073,  4131,  4165,  4233,    4361,    4369,    4417,     4641,
       5129,  5185,  6273,  8215,  8277,  8339,  8401,  8711,  8773,    8835,    8897,    10261,    10385,
       10757, 10881, 12307, 12369, 12803, 12865, 14353, 14849, 16443,   16569,   16835,   16947,    17073,
       17451, 17577, 17745, 17955, 18081, 18459, 18585, 18963, 19089,   19467,   19593,   19971,    20097,
       24605, 24633, 25025, 25137, 25641, 26145, 26649, 26691, 27153,   27657,   28161,   28679,    32893,
       33401, 33909, 34417, 34925, 35433, 35941, 36449, 36957, 37465,   37973,   38481,   38989,    39497,
       40005, 40513, 41021, 41529, 41769, 42037, 42545, 43053, 43561,   44069,   44577,   45085,    45593,
       46101, 46609, 47117, 47625, 48133, 48641, 178481, 285975, 349525, 413075, 476625, 1290555, 1806777,
       1864135, 6242685, 133956095},
  };
  if (j >= table.size()) throw std::invalid_argument("known_sporadic_exceptions: j must be at most 9");
  return table[j];
}

bool in_mirrored_family(std::uint64_t n, std::uint32_t j) {
  if (n == 0) return false;
  const std::uint32_t len = bit_length(n);
  if (j == 0) return (n & (n + 1)) == 0;
  if (j < 2 || len < 2 * j) return false;
  const std::uint64_t mask = (std::uint64_t{1} << j) - 1;
  const std::uint64_t top = n >> (len - j);
  const std::uint64_t low = n & mask;
  if ((top & 1) != 0) return false;  // s must end with 0
  if (low != (~top & mask)) return false;
  const std::uint32_t mid = len - 2 * j;
  const std::uint64_t middle = (n >> j) & ((std::uint64_t{1} << mid) - 1);
  return middle == (std::uint64_t{1} << mid) - 1;
}

FewZerosVerdict verify_few_zeros_theorem(std::uint32_t j, const std::vector<std::uint64_t>& sporadic,
                                         const std::vector<std::string>& families, const FewZerosOptions& opt) {
  FewZerosVerdict v;
  v.j = j;
  v.max_multiplier = opt.max_multiplier != 0 ? opt.max_multiplier : default_multiplier(j);
  constexpr std::size_t kListLimit = 256;

  // Everything below is least significant bit first.
  Dfa flimsy = empty_language();
  for (std::uint64_t k = 3; k <= v.max_multiplier; k += 2) {
    flimsy = minimize(product(flimsy, few_zeros_flimsy_dfa_lsb(j, k), ProductMode::Union));
  }
  v.union_states = flimsy.size();
  const Dfa exceptions = minimize(difference(odd_with_zeros_lsb(j), flimsy));

  Dfa family = empty_language();
  for (const auto& pattern : families) {
    family = minimize(product(family, reversed(compile_regex(pattern)), ProductMode::Union));
  }

  auto listing = [&](const Dfa& d) {
    std::vector<std::string> out;
    for (auto& w : enumerate(d, opt.listing_bits, kListLimit)) out.push_back(reversed_word(w));
    sort_numerically(out);
    return out;
  };

  const Dfa leftover = minimize(difference(exceptions, family));
  v.leftover_finite = is_finite(leftover);
  v.leftover = listing(leftover);
  v.families_contained = is_empty(difference(minimize(product(family, odd_with_zeros_lsb(j), ProductMode::Intersect)),
                                             exceptions));

  // Leftover numbers are settled one by one: flimsy ones simply need a
  // larger multiplier, sturdy ones must be exactly the sporadic list.
  v.leftover_decided = v.leftover_finite;
  std::vector<std::string> sturdy_left;
  for (const auto& w : v.leftover) {
    if (w.size() > 32) {
      v.leftover_decided = false;
      continue;
    }
    if (is_sturdy(msb_value(w), Algorithm::Bfs01)) {
      sturdy_left.push_back(w);
    } else {
      v.leftover_flimsy.push_back(w);
    }
  }
  std::vector<std::string> expected_words;
  for (auto n : sporadic) expected_words.push_back(reversed_word(lsb_string(n)));
  sort_numerically(expected_words);
  std::set_difference(sturdy_left.begin(), sturdy_left.end(), expected_words.begin(), expected_words.end(),
                      std::back_inserter(v.unexpected), numeric_less);
  std::set_difference(expected_words.begin(), expected_words.end(), sturdy_left.begin(), sturdy_left.end(),
                      std::back_inserter(v.missing), numeric_less);
  v.exact_match = v.leftover_decided && v.unexpected.empty() && v.missing.empty();

  v.sporadic_sturdy = std::all_of(sporadic.begin(), sporadic.end(), [](std::uint64_t n) {
    return solve(n, Algorithm::Bfs01, FieldSet::char_only(), {false, false}).character == Character::Sturdy;
  });

  v.families_sturdy = true;
  for (const auto& pattern : families) {
    for (const auto& w : enumerate(compile_regex(pattern), opt.family_check_bits)) {
      const std::uint64_t n = msb_value(w);
      if (!in_mirrored_family(n, j) || !is_sturdy(n, Algorithm::Bfs01)) {
        v.families_sturdy = false;
        break;
      }
    }
  }
  return v;
}

std::string to_json(const FewZerosVerdict& v) {
  nlohmann::json out;
  out["zeros"] = v.j;
  out["max_multiplier"] = v.max_multiplier;
  out["union_states"] = v.union_states;
  out["exact_match"] = v.exact_match;
  out["sporadic_sturdy"] = v.sporadic_sturdy;
  out["families_sturdy"] = v.families_sturdy;
  out["ok"] = v.ok();
  nlohmann::json left = nlohmann::json::array();
  for (const auto& w : v.leftover) left.push_back({{"binary", w}, {"value", w.size() <= 64 ? msb_value(w) : 0}});
  out["leftover"] = left;
  nlohmann::json flimsy_left = nlohmann::json::array();
  for (const auto& w : v.leftover_flimsy) flimsy_left.push_back(msb_value(w));
  out["leftover_flimsy"] = flimsy_left;
  out["families_contained"] = v.families_contained;
  out["leftover_finite"] = v.leftover_finite;
  out["leftover_decided"] = v.leftover_decided;
  out["unexpected"] = v.unexpected;
  out["missing"] = v.missing;
  return out.dump(2);
}

BruteForceZerosResult brute_force_few_zeros(std::uint32_t j, std::uint32_t max_bits,
                                            const std::vector<std::uint64_t>& sporadic) {
  if (max_bits > 50) throw std::invalid_argument("brute_force_few_zeros: at most 50 bits");
  BruteForceZerosResult r;
  r.j = j;
  r.max_bits = max_bits;
  const std::uint64_t kmax = (std::uint64_t{1} << (j + 1)) + 1;
  auto is_sporadic = [&](std::uint64_t n) { return std::find(sporadic.begin(), sporadic.end(), n) != sporadic.end(); };

  auto check = [&](std::uint64_t n) {
    ++r.scanned;
    const int s = std::popcount(n);
    for (std::uint64_t k = 3; k <= kmax; k += 2) {
      if (std::popcount(k * n) < s) return;
    }
    if (in_mirrored_family(n, j)) {
      ++r.family_members;
      return;
    }
    if (n <= 0xffffffffu && !is_sporadic(n)) {
      ++r.solver_decided;
      if (!is_sturdy(n, Algorithm::Bfs01)) return;
    }
    r.without_witness.push_back(n);
  };

  // Odd n of length L with j zeros: zeros sit among bits 1 .. L-2.
  for (std::uint32_t len = 1; len <= max_bits; ++len) {
    const std::uint64_t full = len == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1;
    if (j == 0) {
      check(full);
      continue;
    }
    if (len < j + 2) continue;
    const std::uint32_t slots = len - 2;
    std::uint64_t m = (std::uint64_t{1} << j) - 1;
    const std::uint64_t limit = std::uint64_t{1} << slots;
    while (m < limit) {
      check(full ^ (m << 1));
      // Gosper's hack: next larger integer with the same popcount.
      const std::uint64_t c = m & (~m + 1);
      const std::uint64_t rr = m + c;
      m = (((rr ^ m) >> 2) / c) | rr;
    }
  }

  std::sort(r.without_witness.begin(), r.without_witness.end());
  std::vector<std::uint64_t> expected = sporadic;
  std::sort(expected.begin(), expected.end());
  r.matches_sporadic = r.without_witness == expected;
  r.sporadic_sturdy = std::all_of(sporadic.begin(), sporadic.end(), [](std::uint64_t n) {
    return solve(n, Algorithm::Bfs01, FieldSet::char_only(), {false, false}).character == Character::Sturdy;
  });
  return r;
}

}  // namespace sturdy::automata
