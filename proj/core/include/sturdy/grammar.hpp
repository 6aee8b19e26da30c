#pragma once

// Context-free grammars over the terminals {0, 1}.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sturdy/pda.hpp"

namespace sturdy::census {

struct GrammarSymbol {
  bool terminal = false;
  std::uint32_t id = 0;  // terminal digit or variable index

  static GrammarSymbol term(std::uint32_t digit) { return {true, digit}; }
  static GrammarSymbol var(std::uint32_t v) { return {false, v}; }
  friend bool operator==(const GrammarSymbol&, const GrammarSymbol&) = default;
  friend auto operator<=>(const GrammarSymbol&, const GrammarSymbol&) = default;
};

struct Production {
  std::uint32_t lhs = 0;
  std::vector<GrammarSymbol> rhs;  // empty = epsilon
  friend bool operator==(const Production&, const Production&) = default;
};

struct Grammar {
  std::vector<std::string> names;
  std::uint32_t start = 0;
  std::vector<Production> productions;

  std::size_t num_variables() const { return names.size(); }
  std::vector<std::vector<std::size_t>> productions_by_variable() const;
};

/// Raised when cleaning finds that the start variable derives nothing.
class EmptyLanguage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Variables [p A q]: from state p with A on top, the PDA eventually pops A
/// and reaches q. Start S -> [start Z q] for every q.
Grammar triple_construction(const OneCounterPda& p);

/// Removes non-generating then unreachable variables, then repeatedly inlines
/// every non-start variable with a single production. A start variable whose
/// only production is a single variable is replaced by that variable.
/// Throws EmptyLanguage when the start variable derives no terminal string.
Grammar clean_grammar(const Grammar& g);

/// `V -> 1 A | 0 B`, one variable per line, start first; "eps" for epsilon.
std::string to_text(const Grammar& g);
Grammar parse_grammar(std::string_view text);

/// Yield of every leftmost derivation of length at most max_len, sorted by
/// length then lexicographically; a repeated word means two derivations.
/// Brute force, for small grammars without epsilon or unit cycles.
std::vector<std::string> generate_words(const Grammar& g, std::size_t max_len);

/// Structural equality up to a renaming of variables (start maps to start).
bool isomorphic(const Grammar& a, const Grammar& b);

}  // namespace sturdy::census
