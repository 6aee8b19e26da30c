#pragma once

// Deterministic and nondeterministic finite automata over the alphabet {0,1}.
// Words are std::string of '0'/'1' characters.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sturdy::automata {

struct Dfa {
  std::vector<std::array<std::uint32_t, 2>> trans;  // total
  std::uint32_t start = 0;
  std::vector<std::uint8_t> accepting;

  std::size_t size() const { return trans.size(); }
  std::uint32_t add_state(bool accept = false);
  bool accepts(std::string_view word) const;
  /// Throws std::invalid_argument when a transition leaves the state set.
  void validate() const;
};

struct Nfa {
  std::vector<std::array<std::vector<std::uint32_t>, 2>> trans;
  std::vector<std::vector<std::uint32_t>> eps;
  std::vector<std::uint32_t> starts;
  std::vector<std::uint8_t> accepting;

  std::uint32_t add_state(bool accept = false);
  std::size_t size() const { return trans.size(); }
};

enum class ProductMode { Intersect, Union };

Dfa empty_language();
Dfa all_words();
/// Accepts exactly the given words (a trie plus a dead state).
Dfa finite_language(const std::vector<std::string>& words);

/// Reachable part of the direct product.
Dfa product(const Dfa& a, const Dfa& b, ProductMode mode);
Dfa complement(const Dfa& d);
Dfa difference(const Dfa& a, const Dfa& b);

bool is_empty(const Dfa& d);
/// Least accepted word in radix order (shorter first, then lexicographic).
std::optional<std::string> least_accepted(const Dfa& d);
/// Accepted words of length <= max_len in radix order, at most `limit` of them.
std::vector<std::string> enumerate(const Dfa& d, std::size_t max_len,
                                   std::size_t limit = static_cast<std::size_t>(-1));
bool is_finite(const Dfa& d);
/// Number of accepted words (only meaningful when is_finite).
std::size_t finite_count(const Dfa& d);

/// Least word in the symmetric difference, or nothing if the languages agree.
std::optional<std::string> distinguishing_word(const Dfa& a, const Dfa& b);
bool equivalent(const Dfa& a, const Dfa& b);

Nfa to_nfa(const Dfa& d);
Nfa reverse(const Dfa& d);
Dfa determinize(const Nfa& n);
/// Hopcroft minimisation of the reachable part.
Dfa minimize(const Dfa& d);
/// Minimal DFA for the reversed language.
Dfa reversed(const Dfa& d);

std::string to_dot(const Dfa& d, std::string_view name = "dfa");

// Factories. Words are read most significant bit first unless stated.

/// Binary representations (no leading zero) of positive multiples of n.
Dfa divisibility_dfa(std::uint64_t n);
Dfa at_most_ones_dfa(std::uint32_t t);
Dfa exactly_ones_dfa(std::uint32_t t);

/// Compiles a regular expression over {0,1} with |, *, +, ?, parentheses and
/// concatenation; whitespace is ignored. Throws std::invalid_argument.
Dfa compile_regex(std::string_view pattern);

}  // namespace sturdy::automata
