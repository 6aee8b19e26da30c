#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sturdy/biguint.hpp"

namespace sturdy::detail {

struct RadixSearchResult {
  /// least_by_count[c] = least positive multiple of n with exactly c ones
  /// (c <= t), if the search got that far.
  std::vector<std::optional<BigUint>> least_by_count;
  /// Least multiple with at most t ones.
  std::optional<BigUint> first_accepted;
};

/// Breadth-first search in radix order over (divisibility DFA) x (at most t
/// ones DFA). With stop_at_first the search ends at the first accepting state.
RadixSearchResult radix_least_multiples(std::uint32_t n, std::uint32_t t, bool stop_at_first);

}  // namespace sturdy::detail
