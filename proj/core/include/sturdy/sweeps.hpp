#pragma once

// Range computations over many n, sharded across worker threads. Results
// never depend on the number of workers.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "sturdy/report_io.hpp"
#include "sturdy/solvers.hpp"

namespace sturdy {

struct SweepOptions {
  Algorithm algorithm = Algorithm::Auto;
  SolveOptions solve;
  unsigned jobs = 1;
};

/// Runs f(i) for i in [0, count) on `jobs` threads in chunks; f must only
/// touch slot i of its output.
void parallel_for(std::uint64_t count, unsigned jobs, const std::function<void(std::uint64_t)>& f);

/// One row per odd n in [from, to], ascending.
std::vector<TableRow> table_sweep(std::uint64_t from, std::uint64_t to, FieldSet wanted, const SweepOptions& opt);

/// counts[i - 1] = number of sturdy n < 10^i among n = 1 and odd n > 1,
/// for i = 1 .. max_exponent.
std::vector<std::uint64_t> sturdy_counts_below_powers_of_ten(unsigned max_exponent, const SweepOptions& opt);

/// swm -> number of odd n with lo < n < hi.
std::map<std::uint32_t, std::uint64_t> swm_histogram(std::uint64_t lo, std::uint64_t hi, const SweepOptions& opt);

/// Sturdy primes p with from <= p < to (2 is sturdy). `on_block` is called
/// after each block of `block_size` numbers with the next unscanned value
/// and the primes found in that block, for checkpointing.
std::vector<std::uint64_t> sturdy_primes(
    std::uint64_t from, std::uint64_t to, const SweepOptions& opt,
    const std::function<void(std::uint64_t next, const std::vector<std::uint64_t>& found)>& on_block = {},
    std::uint64_t block_size = std::uint64_t{1} << 24);

}  // namespace sturdy
