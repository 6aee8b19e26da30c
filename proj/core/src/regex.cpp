#include <stdexcept>
#include <string>

#include "sturdy/dfa.hpp"

namespace sturdy::automata {

namespace {

// Thompson construction. Each fragment has one entry and one exit state.
struct Fragment {
  std::uint32_t in;
  std::uint32_t out;
};

class RegexParser {
 public:
  explicit RegexParser(std::string_view text) {
    for (char c : text) {
      if (c != ' ' && c != '\t' && c != '\n') src_.push_back(c);
    }
  }

  Nfa compile() {
    const Fragment f = alternation();
    if (pos_ != src_.size()) fail("unexpected character");
    nfa_.starts = {f.in};
    nfa_.accepting[f.out] = 1;
    return std::move(nfa_);
  }

 private:
  [[noreturn]] void fail(const char* what) const {
    throw std::invalid_argument(std::string("regex: ") + what + " at offset " + std::to_string(pos_));
  }
  bool at(char c) const { return pos_ < src_.size() && src_[pos_] == c; }

  Fragment epsilon() {
    const std::uint32_t s = nfa_.add_state();
    return {s, s};
  }

  Fragment alternation() {
    Fragment left = concatenation();
    while (at('|')) {
      ++pos_;
      const Fragment right = concatenation();
      const std::uint32_t in = nfa_.add_state();
      const std::uint32_t out = nfa_.add_state();
      nfa_.eps[in] = {left.in, right.in};
      nfa_.eps[left.out].push_back(out);
      nfa_.eps[right.out].push_back(out);
      left = {in, out};
    }
    return left;
  }

  Fragment concatenation() {
    Fragment f = epsilon();
    while (pos_ < src_.size() && !at('|') && !at(')')) {
      const Fragment next = repetition();
      nfa_.eps[f.out].push_back(next.in);
      f.out = next.out;
    }
    return f;
  }

  Fragment repetition() {
    Fragment f = atom();
    while (at('*') || at('+') || at('?')) {
      const char op = src_[pos_++];
      const std::uint32_t in = nfa_.add_state();
      const std::uint32_t out = nfa_.add_state();
      nfa_.eps[in].push_back(f.in);
      nfa_.eps[f.out].push_back(out);
      if (op != '+') nfa_.eps[in].push_back(out);
      if (op != '?') nfa_.eps[f.out].push_back(f.in);
      f = {in, out};
    }
    return f;
  }

  Fragment atom() {
    if (at('0') || at('1')) {
      const int c = src_[pos_++] - '0';
      const std::uint32_t in = nfa_.add_state();
      const std::uint32_t out = nfa_.add_state();
      nfa_.trans[in][c].push_back(out);
      return {in, out};
    }
    if (at('(')) {
      ++pos_;
      const Fragment f = alternation();
      if (!at(')')) fail("missing ')'");
      ++pos_;
      return f;
    }
    fail(pos_ < src_.size() ? "unexpected character" : "unexpected end of pattern");
  }

  std::string src_;
  std::size_t pos_ = 0;
  Nfa nfa_;
};

}  // namespace

Dfa compile_regex(std::string_view pattern) { return minimize(determinize(RegexParser(pattern).compile())); }

}  // namespace sturdy::automata
