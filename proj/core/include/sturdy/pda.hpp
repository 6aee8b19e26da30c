#pragma once

// One-counter pushdown automata recognising k-flimsy numbers (s2(kn) < s2(n))
// and k-equal numbers (s2(kn) = s2(n)). Input is (n)_2 read least
// significant bit first; acceptance is by empty stack.
//
// Main states are (sign, carry). With sign '-' the stack holds
// ones(kn so far) - ones(n so far) X's above the bottom marker Z; with sign
// '+' it holds ones(n so far) - ones(kn so far) - 1. The last input bit (which
// must be 1) is guessed, and epsilon pops then check the count against the
// ones still hidden in the final carry.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sturdy::census {

enum class StackSymbol : std::uint8_t { X = 0, Z = 1 };
enum class PdaMode { Flimsy, Equal };

struct PdaTransition {
  std::uint32_t from = 0;
  int input = -1;  // 0, 1, or -1 for epsilon
  StackSymbol top = StackSymbol::Z;
  std::uint32_t to = 0;
  /// Replaces the popped top symbol; front() ends up on top. Size 0..2.
  std::vector<StackSymbol> push;
};

struct OneCounterPda {
  std::uint32_t k = 0;
  PdaMode mode = PdaMode::Flimsy;
  std::vector<std::string> state_names;
  std::uint32_t start = 0;
  std::vector<PdaTransition> transitions;

  std::size_t num_states() const { return state_names.size(); }
};

OneCounterPda build_flimsy_pda(std::uint32_t k);
OneCounterPda build_equal_pda(std::uint32_t k);
OneCounterPda build_pda(std::uint32_t k, PdaMode mode);

struct Membership {
  bool accepted = false;
  std::uint64_t path_count = 0;  // accepting computations
};

/// Runs every computation on `word` ('0'/'1', least significant bit first).
/// Epsilon transitions must pop.
Membership pda_membership(const OneCounterPda& p, std::string_view word);

/// Number of accepting computations summed over all words of each length
/// 0..max_len, by dynamic programming over (state, stack height).
std::vector<std::uint64_t> pda_path_counts(const OneCounterPda& p, std::size_t max_len);

std::string to_dot(const OneCounterPda& p);

std::string_view to_string(PdaMode m);
PdaMode parse_mode(std::string_view name);

}  // namespace sturdy::census
