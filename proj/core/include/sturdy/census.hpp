#pragma once

// End-to-end census: PDA -> triple construction -> cleaned grammar ->
// series system -> exact counts per bit length.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "sturdy/biguint.hpp"
#include "sturdy/grammar.hpp"
#include "sturdy/pda.hpp"
#include "sturdy/series.hpp"

namespace sturdy::census {

struct CensusPipeline {
  OneCounterPda pda;
  Grammar raw;
  Grammar cleaned;
  SeriesSystem system;
};

CensusPipeline build_census(std::uint32_t k, PdaMode mode);

/// counts[N] = number of n in [2^(N-1), 2^N) in the census set, N = 0..n_max.
std::vector<BigUint> census_counts(const CensusPipeline& c, std::size_t n_max);

/// Same counts by testing every n directly; n_max <= 40.
std::vector<std::uint64_t> brute_force_census(std::uint32_t k, PdaMode mode, std::size_t n_max);

/// Whether n (with k*n < 2^128) belongs to the census set.
bool in_census_set(std::uint64_t n, std::uint32_t k, PdaMode mode);

/// `N,count` lines with a header.
void write_counts_csv(std::ostream& os, const std::vector<BigUint>& counts, std::size_t from = 1);

}  // namespace sturdy::census
