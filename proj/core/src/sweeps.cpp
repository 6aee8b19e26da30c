#include "sturdy/sweeps.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "sturdy/numeric.hpp"

namespace sturdy {

void parallel_for(std::uint64_t count, unsigned jobs, const std::function<void(std::uint64_t)>& f) {
  if (jobs <= 1 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i) f(i);
    return;
  }
  const std::uint64_t chunk = std::max<std::uint64_t>(1, count / (std::uint64_t{jobs} * 64));
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    try {
      while (true) {
        const std::uint64_t begin = next.fetch_add(chunk);
        if (begin >= count) return;
        const std::uint64_t end = std::min(count, begin + chunk);
        for (std::uint64_t i = begin; i < end; ++i) f(i);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = count;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

namespace {

std::uint64_t first_odd_at_least(std::uint64_t v) { return v % 2 ? v : v + 1; }

}  // namespace

std::vector<TableRow> table_sweep(std::uint64_t from, std::uint64_t to, FieldSet wanted, const SweepOptions& opt) {
  if (from < 1 || from > to) throw std::invalid_argument("table: need 1 <= from <= to");
  const std::uint64_t first = first_odd_at_least(from);
  const std::uint64_t count = first > to ? 0 : (to - first) / 2 + 1;
  std::vector<TableRow> rows(count);
  parallel_for(count, opt.jobs, [&](std::uint64_t i) {
    rows[i] = to_row(solve(first + 2 * i, opt.algorithm, wanted, opt.solve));
  });
  return rows;
}

std::vector<std::uint64_t> sturdy_counts_below_powers_of_ten(unsigned max_exponent, const SweepOptions& opt) {
  if (max_exponent < 1 || max_exponent > 9) throw std::invalid_argument("sturdy count: exponent must be 1..9");
  std::uint64_t limit = 1;
  for (unsigned i = 0; i < max_exponent; ++i) limit *= 10;
  // Odd n in [1, limit).
  const std::uint64_t count = limit / 2;
  std::vector<std::uint8_t> sturdy(count, 0);
  parallel_for(count, opt.jobs, [&](std::uint64_t i) {
    const std::uint64_t n = 2 * i + 1;
    sturdy[i] = solve(n, opt.algorithm, FieldSet::char_only(), opt.solve).character == Character::Sturdy;
  });
  std::vector<std::uint64_t> out;
  std::uint64_t bound = 10;
  std::uint64_t acc = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t n = 2 * i + 1;
    while (n >= bound) {
      out.push_back(acc);
      bound *= 10;
    }
    acc += sturdy[i];
  }
  while (out.size() < max_exponent) out.push_back(acc);
  return out;
}

std::map<std::uint32_t, std::uint64_t> swm_histogram(std::uint64_t lo, std::uint64_t hi, const SweepOptions& opt) {
  if (lo >= hi) throw std::invalid_argument("histogram: need lo < hi");
  const std::uint64_t first = first_odd_at_least(lo + 1);
  const std::uint64_t count = first >= hi ? 0 : (hi - 1 - first) / 2 + 1;
  std::vector<std::uint8_t> swm(count, 0);
  parallel_for(count, opt.jobs, [&](std::uint64_t i) {
    swm[i] = static_cast<std::uint8_t>(solve(first + 2 * i, opt.algorithm, FieldSet::char_swm(), opt.solve).swm);
  });
  std::map<std::uint32_t, std::uint64_t> hist;
  for (auto s : swm) ++hist[s];
  return hist;
}

std::vector<std::uint64_t> sturdy_primes(
    std::uint64_t from, std::uint64_t to, const SweepOptions& opt,
    const std::function<void(std::uint64_t, const std::vector<std::uint64_t>&)>& on_block, std::uint64_t block_size) {
  if (to > (std::uint64_t{1} << 32) + 1) throw std::invalid_argument("sturdy primes: range limited to 2^32");
  std::vector<std::uint64_t> all;
  if (from <= 2 && to > 2) all.push_back(2);
  // Small primes for a segmented sieve of odd numbers.
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(to))) + 2;
  std::vector<std::uint8_t> small_composite(root + 1, 0);
  std::vector<std::uint64_t> small_primes;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (small_composite[i]) continue;
    small_primes.push_back(i);
    for (std::uint64_t j = i * i; j <= root; j += i) small_composite[j] = 1;
  }
  for (std::uint64_t lo = std::max<std::uint64_t>(from, 3); lo < to; lo += block_size) {
    const std::uint64_t hi = std::min(to, lo + block_size);
    std::vector<std::uint8_t> composite(hi - lo, 0);
    for (auto p : small_primes) {
      if (p * p >= hi) break;
      std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
      for (std::uint64_t j = start; j < hi; j += p) composite[j - lo] = 1;
    }
    std::vector<std::uint64_t> candidates;
    for (std::uint64_t n = first_odd_at_least(lo); n < hi; n += 2) {
      if (n > 1 && !composite[n - lo]) candidates.push_back(n);
    }
    std::vector<std::uint8_t> is_sturdy_flag(candidates.size(), 0);
    parallel_for(candidates.size(), opt.jobs, [&](std::uint64_t i) {
      is_sturdy_flag[i] =
          solve(candidates[i], opt.algorithm, FieldSet::char_only(), opt.solve).character == Character::Sturdy;
    });
    std::vector<std::uint64_t> found;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (is_sturdy_flag[i]) found.push_back(candidates[i]);
    }
    all.insert(all.end(), found.begin(), found.end());
    if (on_block) on_block(hi, found);
  }
  return all;
}

}  // namespace sturdy
