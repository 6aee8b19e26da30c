#pragma once

// Flimsy numbers whose binary representation has few zeros.
//
// M(j, k) accepts (n)_2 with exactly j zeros such that (kn)_2 has more than
// j + t zeros, t = |(kn)_2| - |(n)_2|; equivalently s2(kn) < s2(n). The
// machine is built least significant bit first, where multiplying by k is a
// carry-tracking sequential map, and reversed afterwards.

#include <cstdint>
#include <string>
#include <vector>

#include "sturdy/dfa.hpp"

namespace sturdy::automata {

/// Reads (n)_2 least significant bit first.
Dfa few_zeros_flimsy_dfa_lsb(std::uint32_t j, std::uint64_t k);
/// Reads (n)_2 most significant bit first (reversed and minimised).
Dfa few_zeros_flimsy_dfa(std::uint32_t j, std::uint64_t k);

/// Odd n with exactly j zeros, read least significant bit first.
Dfa odd_with_zeros_lsb(std::uint32_t j);

/// Patterns s 1* s' with |s| = j, s starting with 1 and ending with 0 and s'
/// its complement (most significant bit first). For j = 0 the single pattern
/// is 1+; for j = 1 there are none.
std::vector<std::string> mirrored_family_patterns(std::uint32_t j);

/// Reference list of sporadic sturdy numbers with exactly j zeros, 0 <= j <= 9.
const std::vector<std::uint64_t>& known_sporadic_exceptions(std::uint32_t j);

/// True if the binary form of n is s 1^i s' with |s| = j, s starting with 1
/// and ending with 0 (or, for j = 0, all ones).
bool in_mirrored_family(std::uint64_t n, std::uint32_t j);

struct FewZerosOptions {
  std::uint64_t max_multiplier = 0;  // 0: all odd k <= 2^(j+1) + 1
  std::size_t listing_bits = 64;     // bound for listing mismatches
  std::size_t family_check_bits = 24;
};

struct FewZerosVerdict {
  std::uint32_t j = 0;
  std::uint64_t max_multiplier = 0;
  std::size_t union_states = 0;
  /// Odd numbers with j zeros that no multiplier proves flimsy and that lie
  /// outside the families (MSB-first, radix order, listing bounded).
  bool leftover_finite = false;
  std::vector<std::string> leftover;
  /// Leftover numbers the solver shows flimsy (they need a larger multiplier).
  std::vector<std::string> leftover_flimsy;
  /// Every leftover number was below 2^32 and settled by the solver.
  bool leftover_decided = false;
  /// Sturdy leftover numbers missing from the sporadic list, and vice versa.
  std::vector<std::string> unexpected;
  std::vector<std::string> missing;
  bool exact_match = false;
  /// No family member is accepted by the union machine.
  bool families_contained = false;
  bool sporadic_sturdy = false;
  bool families_sturdy = false;
  bool ok() const { return exact_match && families_contained && sporadic_sturdy && families_sturdy; }
};

/// Builds the union of M(j, k) over odd 3 <= k <= max_multiplier and takes
/// (odd, j zeros) minus that union minus the families. The rest must be a
/// finite set whose sturdy members, decided by a solver, are exactly
/// `sporadic`. Sporadic members and family members (up to
/// family_check_bits) are confirmed sturdy with a solver.
FewZerosVerdict verify_few_zeros_theorem(std::uint32_t j, const std::vector<std::uint64_t>& sporadic,
                                         const std::vector<std::string>& families,
                                         const FewZerosOptions& options = {});

/// JSON object listing the verdict and the exceptions found.
std::string to_json(const FewZerosVerdict& v);

struct BruteForceZerosResult {
  std::uint32_t j = 0;
  std::uint32_t max_bits = 0;
  std::uint64_t scanned = 0;
  std::uint64_t family_members = 0;
  std::uint64_t solver_decided = 0;  // no small witness, settled by bfs01
  std::vector<std::uint64_t> without_witness;  // outside the family, no small witness
  bool matches_sporadic = false;
  bool sporadic_sturdy = false;
  bool ok() const { return matches_sporadic && sporadic_sturdy; }
};

/// Every odd n < 2^max_bits with exactly j zeros: looks for an odd multiplier
/// k <= 2^(j+1) + 1 with s2(kn) < s2(n). Numbers outside the mirrored family
/// without such a witness go to the bfs01 solver when below 2^32 (sporadic
/// candidates excepted). What remains must be exactly the sporadic set, whose
/// members are then confirmed sturdy by the bfs01 solver.
BruteForceZerosResult brute_force_few_zeros(std::uint32_t j, std::uint32_t max_bits,
                                            const std::vector<std::uint64_t>& sporadic);

}  // namespace sturdy::automata
