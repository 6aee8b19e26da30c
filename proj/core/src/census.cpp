#include "sturdy/census.hpp"

#include <bit>
#include <ostream>
#include <stdexcept>

namespace sturdy::census {

CensusPipeline build_census(std::uint32_t k, PdaMode mode) {
  CensusPipeline c;
  c.pda = build_pda(k, mode);
  c.raw = triple_construction(c.pda);
  c.cleaned = clean_grammar(c.raw);
  c.system = grammar_to_system(c.cleaned);
  return c;
}

std::vector<BigUint> census_counts(const CensusPipeline& c, std::size_t n_max) {
  auto all = extract_coefficients(c.system, n_max);
  return std::move(all[c.system.start]);
}

bool in_census_set(std::uint64_t n, std::uint32_t k, PdaMode mode) {
  const unsigned __int128 kn = static_cast<unsigned __int128>(n) * k;
  const int ones = std::popcount(static_cast<std::uint64_t>(kn)) + std::popcount(static_cast<std::uint64_t>(kn >> 64));
  const int base = std::popcount(n);
  return mode == PdaMode::Flimsy ? ones < base : ones == base;
}

std::vector<std::uint64_t> brute_force_census(std::uint32_t k, PdaMode mode, std::size_t n_max) {
  if (n_max > 40) throw std::invalid_argument("brute_force_census: n_max above 40");
  std::vector<std::uint64_t> out(n_max + 1, 0);
  for (std::size_t len = 1; len <= n_max; ++len) {
    const std::uint64_t lo = std::uint64_t{1} << (len - 1);
    const std::uint64_t hi = std::uint64_t{1} << len;
    std::uint64_t count = 0;
    for (std::uint64_t n = lo; n < hi; ++n) count += in_census_set(n, k, mode) ? 1 : 0;
    out[len] = count;
  }
  return out;
}

void write_counts_csv(std::ostream& os, const std::vector<BigUint>& counts, std::size_t from) {
  os << "N,count\n";
  for (std::size_t n = from; n < counts.size(); ++n) os << n << ',' << counts[n] << '\n';
}

}  // namespace sturdy::census
