#pragma once

// Minimal binary digit sums of multiples: is n sturdy, swm(n), msw(n), mfw(n).
//
// Every solver below takes an odd modulus 3 <= n < 2^32. solve() accepts any
// n >= 1 and strips powers of two first; n = 1 and n = 2^a are sturdy with
// swm 1.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sturdy/biguint.hpp"

namespace sturdy {

enum class Character { Sturdy, Flimsy };

enum class Algorithm { Dp, Aut, Bfs01, OrderDegBfs, Auto };

std::string_view to_string(Character c);
std::string_view to_string(Algorithm a);
/// Accepts "dp", "aut", "bfs01", "order_deg_bfs", "auto".
Algorithm parse_algorithm(std::string_view name);

/// Thrown when an algorithm cannot compute a requested statistic.
class UnsupportedCombination : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct FieldSet {
  bool character = true;
  bool swm = true;
  bool msw = true;
  bool mfw = true;

  static FieldSet all() { return {}; }
  static FieldSet char_only() { return {true, false, false, false}; }
  static FieldSet char_swm() { return {true, true, false, false}; }
  static FieldSet without_mfw() { return {true, true, true, false}; }
};

struct SolveOptions {
  bool use_shortcuts = true;
  /// For char-only requests, try small odd multipliers before a full search.
  bool quick_witness = true;
};

struct SturdyReport {
  std::uint64_t n = 0;
  Character character = Character::Sturdy;
  std::uint32_t swm = 0;             // 0 when not requested
  std::optional<BigUint> msw;
  std::optional<BigUint> mfw;        // absent when sturdy or not requested
  std::optional<BigUint> witness_multiple;
  Algorithm algorithm = Algorithm::Auto;
};

/// Dispatching entry point. Fills the requested fields; throws
/// UnsupportedCombination for order_deg_bfs with mfw requested.
SturdyReport solve(std::uint64_t n, Algorithm algorithm, FieldSet wanted = FieldSet::all(),
                   const SolveOptions& options = {});

bool is_sturdy(std::uint64_t n, Algorithm algorithm = Algorithm::Auto);

// Shortcuts.

/// Least k >= 1 with 2^k = -1 (mod n), by baby-step giant-step.
std::optional<std::uint64_t> shortcut_swm2(std::uint32_t n);

/// Some (l, k) with l < k < ord_2(n) and 1 + 2^l + 2^k = 0 (mod n); the
/// returned pair minimises k, hence gives the least three-bit multiple.
std::optional<std::pair<std::uint32_t, std::uint32_t>> shortcut_swm3(std::uint32_t n);

/// Odd k <= limit with s2(kn) < s2(n), smallest first.
std::optional<std::uint64_t> quick_flimsy_witness(std::uint32_t n, std::uint64_t limit = 1025);

// Individual algorithms.

/// Subset-sum tables over (digit sum, residue) adding one power of two per round.
SturdyReport dp_solve(std::uint32_t n);

/// Radix-order search on divisibility DFA x (at most t ones) DFA, where t
/// defaults (0) to s2(n) - 1. A smaller t that finds nothing is inconclusive
/// and throws std::domain_error; mfw is reported only for t = s2(n) - 1.
SturdyReport aut_solve(std::uint32_t n, std::uint32_t t = 0);

/// Character only: the aut search stopped at its first accepting state.
Character aut_character(std::uint32_t n);

struct Bfs01Trace {
  std::vector<std::uint32_t> dequeued_distances;  // popped, finalising entries only
  std::vector<std::uint32_t> finalise_count;      // per residue
};

struct Bfs01Result {
  Character character = Character::Sturdy;
  std::uint32_t swm = 0;
  std::optional<BigUint> witness_multiple;
};

/// 0-1 BFS over residues: a 0-bit costs nothing, a 1-bit costs one. Without
/// a witness or trace it runs level by level over doubling orbits, using
/// two n-bit sets instead of a deque.
Bfs01Result bfs01_solve(std::uint32_t n, bool want_witness = false, Bfs01Trace* trace = nullptr);

/// bfs01 for char/swm, then radix-order passes for msw and mfw.
SturdyReport bfs01_then_least(std::uint32_t n, FieldSet wanted = FieldSet::all());

/// Layered BFS on residues with edges x -> x + 2^j; swm by meeting in the
/// middle, msw by a least-value layered pass. Throws UnsupportedCombination
/// if mfw is requested.
SturdyReport order_deg_bfs_solve(std::uint32_t n, FieldSet wanted = FieldSet::without_mfw());

}  // namespace sturdy
