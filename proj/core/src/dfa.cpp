#include "sturdy/dfa.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace sturdy::automata {

namespace {

int symbol(char c) {
  if (c == '0') return 0;
  if (c == '1') return 1;
  throw std::invalid_argument("automaton words are over {0,1}");
}

std::vector<std::uint8_t> reachable_from_start(const Dfa& d) {
  std::vector<std::uint8_t> seen(d.size(), 0);
  std::vector<std::uint32_t> stack{d.start};
  seen[d.start] = 1;
  while (!stack.empty()) {
    const std::uint32_t q = stack.back();
    stack.pop_back();
    for (std::uint32_t r : d.trans[q]) {
      if (!seen[r]) {
        seen[r] = 1;
        stack.push_back(r);
      }
    }
  }
  return seen;
}

std::vector<std::uint8_t> coreachable(const Dfa& d) {
  std::vector<std::vector<std::uint32_t>> inv(d.size());
  for (std::uint32_t q = 0; q < d.size(); ++q) {
    for (std::uint32_t r : d.trans[q]) inv[r].push_back(q);
  }
  std::vector<std::uint8_t> seen(d.size(), 0);
  std::vector<std::uint32_t> stack;
  for (std::uint32_t q = 0; q < d.size(); ++q) {
    if (d.accepting[q]) {
      seen[q] = 1;
      stack.push_back(q);
    }
  }
  while (!stack.empty()) {
    const std::uint32_t q = stack.back();
    stack.pop_back();
    for (std::uint32_t p : inv[q]) {
      if (!seen[p]) {
        seen[p] = 1;
        stack.push_back(p);
      }
    }
  }
  return seen;
}

}  // namespace

std::uint32_t Dfa::add_state(bool accept) {
  const auto id = static_cast<std::uint32_t>(trans.size());
  trans.push_back({id, id});
  accepting.push_back(accept ? 1 : 0);
  return id;
}

bool Dfa::accepts(std::string_view word) const {
  std::uint32_t q = start;
  for (char c : word) q = trans[q][symbol(c)];
  return accepting[q] != 0;
}

void Dfa::validate() const {
  if (trans.empty() || start >= trans.size() || accepting.size() != trans.size()) {
    throw std::invalid_argument("Dfa: malformed state set");
  }
  for (const auto& t : trans) {
    if (t[0] >= trans.size() || t[1] >= trans.size()) throw std::invalid_argument("Dfa: transition out of range");
  }
}

std::uint32_t Nfa::add_state(bool accept) {
  const auto id = static_cast<std::uint32_t>(trans.size());
  trans.emplace_back();
  eps.emplace_back();
  accepting.push_back(accept ? 1 : 0);
  return id;
}

Dfa empty_language() {
  Dfa d;
  d.add_state(false);
  return d;
}

Dfa all_words() {
  Dfa d;
  d.add_state(true);
  return d;
}

Dfa finite_language(const std::vector<std::string>& words) {
  Dfa d;
  const std::uint32_t dead = d.add_state(false);
  d.start = d.add_state(false);
  d.trans[d.start] = {dead, dead};
  for (const auto& w : words) {
    std::uint32_t q = d.start;
    for (char c : w) {
      const int b = symbol(c);
      if (d.trans[q][b] == dead) {
        const std::uint32_t r = d.add_state(false);
        d.trans[r] = {dead, dead};
        d.trans[q][b] = r;
      }
      q = d.trans[q][b];
    }
    d.accepting[q] = 1;
  }
  return d;
}

Dfa product(const Dfa& a, const Dfa& b, ProductMode mode) {
  Dfa out;
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  auto intern = [&](std::uint32_t p, std::uint32_t q) {
    const std::uint64_t key = (static_cast<std::uint64_t>(p) << 32) | q;
    auto [it, inserted] = index.try_emplace(key, static_cast<std::uint32_t>(pairs.size()));
    if (inserted) {
      pairs.emplace_back(p, q);
      const bool fa = a.accepting[p] != 0;
      const bool fb = b.accepting[q] != 0;
      out.add_state(mode == ProductMode::Intersect ? (fa && fb) : (fa || fb));
    }
    return it->second;
  };
  out.start = intern(a.start, b.start);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [p, q] = pairs[i];
    for (int c = 0; c < 2; ++c) {
      const std::uint32_t r = intern(a.trans[p][c], b.trans[q][c]);
      out.trans[i][c] = r;
    }
  }
  return out;
}

Dfa complement(const Dfa& d) {
  Dfa out = d;
  for (auto& f : out.accepting) f = f ? 0 : 1;
  return out;
}

Dfa difference(const Dfa& a, const Dfa& b) { return product(a, complement(b), ProductMode::Intersect); }

bool is_empty(const Dfa& d) {
  const auto seen = reachable_from_start(d);
  for (std::size_t q = 0; q < d.size(); ++q) {
    if (seen[q] && d.accepting[q]) return false;
  }
  return true;
}

std::optional<std::string> least_accepted(const Dfa& d) {
  // BFS with 0-edges before 1-edges discovers each state by its least word.
  constexpr std::uint32_t kUnseen = 0xffffffffu;
  std::vector<std::uint32_t> parent(d.size(), kUnseen);
  std::vector<std::uint8_t> via(d.size(), 0);
  std::vector<std::uint32_t> queue{d.start};
  parent[d.start] = d.start;
  auto spell = [&](std::uint32_t q) {
    std::string w;
    while (q != d.start) {
      w.push_back(via[q] ? '1' : '0');
      q = parent[q];
    }
    std::reverse(w.begin(), w.end());
    return w;
  };
  if (d.accepting[d.start]) return std::string();
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const std::uint32_t q = queue[h];
    for (int c = 0; c < 2; ++c) {
      const std::uint32_t r = d.trans[q][c];
      if (parent[r] != kUnseen) continue;
      parent[r] = q;
      via[r] = static_cast<std::uint8_t>(c);
      if (d.accepting[r]) return spell(r);
      queue.push_back(r);
    }
  }
  return std::nullopt;
}

std::vector<std::string> enumerate(const Dfa& d, std::size_t max_len, std::size_t limit) {
  // live[r][q]: some word of length exactly r leads from q to acceptance.
  std::vector<std::vector<std::uint8_t>> live(max_len + 1, std::vector<std::uint8_t>(d.size(), 0));
  for (std::size_t q = 0; q < d.size(); ++q) live[0][q] = d.accepting[q];
  for (std::size_t r = 1; r <= max_len; ++r) {
    for (std::size_t q = 0; q < d.size(); ++q) {
      live[r][q] = live[r - 1][d.trans[q][0]] | live[r - 1][d.trans[q][1]];
    }
  }
  std::vector<std::string> out;
  std::string word;
  auto walk = [&](auto&& self, std::uint32_t q, std::size_t remaining) -> void {
    if (out.size() >= limit) return;
    if (remaining == 0) {
      out.push_back(word);
      return;
    }
    for (int c = 0; c < 2; ++c) {
      const std::uint32_t r = d.trans[q][c];
      if (!live[remaining - 1][r]) continue;
      word.push_back(static_cast<char>('0' + c));
      self(self, r, remaining - 1);
      word.pop_back();
    }
  };
  for (std::size_t len = 0; len <= max_len; ++len) {
    if (live[len][d.start]) walk(walk, d.start, len);
  }
  return out;
}

namespace {

std::vector<std::uint8_t> useful_states(const Dfa& d) {
  auto a = reachable_from_start(d);
  const auto b = coreachable(d);
  for (std::size_t q = 0; q < d.size(); ++q) a[q] = a[q] && b[q];
  return a;
}

}  // namespace

bool is_finite(const Dfa& d) {
  const auto useful = useful_states(d);
  // Iterative DFS cycle detection restricted to useful states.
  std::vector<std::uint8_t> colour(d.size(), 0);  // 0 new, 1 on stack, 2 done
  for (std::uint32_t root = 0; root < d.size(); ++root) {
    if (!useful[root] || colour[root] != 0) continue;
    std::vector<std::pair<std::uint32_t, int>> stack{{root, 0}};
    colour[root] = 1;
    while (!stack.empty()) {
      auto& [q, c] = stack.back();
      if (c == 2) {
        colour[q] = 2;
        stack.pop_back();
        continue;
      }
      const std::uint32_t r = d.trans[q][c++];
      if (!useful[r]) continue;
      if (colour[r] == 1) return false;
      if (colour[r] == 0) {
        colour[r] = 1;
        stack.emplace_back(r, 0);
      }
    }
  }
  return true;
}

std::size_t finite_count(const Dfa& d) {
  if (!is_finite(d)) throw std::domain_error("finite_count: language is infinite");
  const auto useful = useful_states(d);
  std::vector<std::optional<std::size_t>> memo(d.size());
  auto count = [&](auto&& self, std::uint32_t q) -> std::size_t {
    if (!useful[q]) return 0;
    if (memo[q]) return *memo[q];
    std::size_t c = d.accepting[q] ? 1 : 0;
    c += self(self, d.trans[q][0]) + self(self, d.trans[q][1]);
    memo[q] = c;
    return c;
  };
  return count(count, d.start);
}

std::optional<std::string> distinguishing_word(const Dfa& a, const Dfa& b) {
  // Pair automaton accepting where exactly one side accepts.
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  Dfa out;
  auto intern = [&](std::uint32_t p, std::uint32_t q) {
    const std::uint64_t key = (static_cast<std::uint64_t>(p) << 32) | q;
    auto [it, inserted] = index.try_emplace(key, static_cast<std::uint32_t>(pairs.size()));
    if (inserted) {
      pairs.emplace_back(p, q);
      out.add_state((a.accepting[p] != 0) != (b.accepting[q] != 0));
    }
    return it->second;
  };
  out.start = intern(a.start, b.start);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [p, q] = pairs[i];
    for (int c = 0; c < 2; ++c) out.trans[i][c] = intern(a.trans[p][c], b.trans[q][c]);
  }
  return least_accepted(out);
}

bool equivalent(const Dfa& a, const Dfa& b) { return !distinguishing_word(a, b).has_value(); }

Nfa to_nfa(const Dfa& d) {
  Nfa n;
  for (std::size_t q = 0; q < d.size(); ++q) n.add_state(d.accepting[q] != 0);
  for (std::uint32_t q = 0; q < d.size(); ++q) {
    for (int c = 0; c < 2; ++c) n.trans[q][c].push_back(d.trans[q][c]);
  }
  n.starts = {d.start};
  return n;
}

Nfa reverse(const Dfa& d) {
  Nfa n;
  for (std::size_t q = 0; q < d.size(); ++q) n.add_state(false);
  for (std::uint32_t q = 0; q < d.size(); ++q) {
    for (int c = 0; c < 2; ++c) n.trans[d.trans[q][c]][c].push_back(q);
    if (d.accepting[q]) n.starts.push_back(q);
  }
  n.accepting[d.start] = 1;
  return n;
}

Dfa determinize(const Nfa& n) {
  auto closure = [&](std::vector<std::uint32_t> set) {
    std::vector<std::uint8_t> in(n.size(), 0);
    for (auto q : set) in[q] = 1;
    for (std::size_t i = 0; i < set.size(); ++i) {
      for (auto r : n.eps[set[i]]) {
        if (!in[r]) {
          in[r] = 1;
          set.push_back(r);
        }
      }
    }
    std::sort(set.begin(), set.end());
    return set;
  };

  Dfa out;
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  std::vector<std::vector<std::uint32_t>> sets;
  auto intern = [&](std::vector<std::uint32_t> set) {
    auto [it, inserted] = index.try_emplace(set, static_cast<std::uint32_t>(sets.size()));
    if (inserted) {
      const bool acc = std::any_of(set.begin(), set.end(), [&](std::uint32_t q) { return n.accepting[q] != 0; });
      out.add_state(acc);
      sets.push_back(std::move(set));
    }
    return it->second;
  };
  out.start = intern(closure(n.starts));
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (int c = 0; c < 2; ++c) {
      std::vector<std::uint32_t> next;
      for (auto q : sets[i]) next.insert(next.end(), n.trans[q][c].begin(), n.trans[q][c].end());
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      const std::uint32_t r = intern(closure(std::move(next)));
      out.trans[i][c] = r;
    }
  }
  return out;
}

Dfa minimize(const Dfa& input) {
  // Restrict to reachable states first.
  const auto seen = reachable_from_start(input);
  std::vector<std::uint32_t> id(input.size(), 0xffffffffu);
  std::vector<std::uint32_t> old;
  for (std::uint32_t q = 0; q < input.size(); ++q) {
    if (seen[q]) {
      id[q] = static_cast<std::uint32_t>(old.size());
      old.push_back(q);
    }
  }
  const auto N = static_cast<std::uint32_t>(old.size());
  std::vector<std::array<std::uint32_t, 2>> tr(N);
  std::vector<std::array<std::vector<std::uint32_t>, 2>> inv(N);
  for (std::uint32_t i = 0; i < N; ++i) {
    for (int c = 0; c < 2; ++c) {
      tr[i][c] = id[input.trans[old[i]][c]];
      inv[tr[i][c]][c].push_back(i);
    }
  }

  std::vector<std::vector<std::uint32_t>> blocks;
  std::vector<std::uint32_t> block_of(N);
  {
    std::vector<std::uint32_t> acc, rej;
    for (std::uint32_t i = 0; i < N; ++i) (input.accepting[old[i]] ? acc : rej).push_back(i);
    for (auto* b : {&acc, &rej}) {
      if (b->empty()) continue;
      for (auto q : *b) block_of[q] = static_cast<std::uint32_t>(blocks.size());
      blocks.push_back(std::move(*b));
    }
  }
  std::vector<std::uint32_t> work;
  std::vector<std::uint8_t> in_work;
  for (std::uint32_t b = 0; b < blocks.size(); ++b) {
    work.push_back(b);
    in_work.push_back(1);
  }

  std::vector<std::uint32_t> stamp(N, 0);
  std::uint32_t epoch = 0;
  std::vector<std::uint32_t> hits(N, 0);
  while (!work.empty()) {
    const std::uint32_t a = work.back();
    work.pop_back();
    in_work[a] = 0;
    const std::vector<std::uint32_t> splitter = blocks[a];
    for (int c = 0; c < 2; ++c) {
      ++epoch;
      std::vector<std::uint32_t> touched;
      for (auto q : splitter) {
        for (auto p : inv[q][c]) {
          if (stamp[p] == epoch) continue;
          stamp[p] = epoch;
          const std::uint32_t y = block_of[p];
          if (hits[y]++ == 0) touched.push_back(y);
        }
      }
      for (auto y : touched) {
        const std::uint32_t h = hits[y];
        hits[y] = 0;
        if (h == blocks[y].size()) continue;
        std::vector<std::uint32_t> inside, outside;
        for (auto q : blocks[y]) (stamp[q] == epoch ? inside : outside).push_back(q);
        const auto z = static_cast<std::uint32_t>(blocks.size());
        blocks[y] = std::move(outside);
        for (auto q : inside) block_of[q] = z;
        blocks.push_back(std::move(inside));
        in_work.push_back(0);
        if (in_work[y] || blocks[z].size() <= blocks[y].size()) {
          work.push_back(z);
          in_work[z] = 1;
        } else {
          work.push_back(y);
          in_work[y] = 1;
        }
      }
    }
  }

  // Number blocks in BFS order from the start so equal languages give equal DFAs.
  Dfa out;
  std::vector<std::uint32_t> renum(blocks.size(), 0xffffffffu);
  std::vector<std::uint32_t> order;
  auto visit = [&](std::uint32_t b) {
    if (renum[b] == 0xffffffffu) {
      renum[b] = static_cast<std::uint32_t>(order.size());
      order.push_back(b);
      out.add_state(input.accepting[old[blocks[b].front()]] != 0);
    }
    return renum[b];
  };
  out.start = visit(block_of[id[input.start]]);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::uint32_t rep = blocks[order[i]].front();
    for (int c = 0; c < 2; ++c) out.trans[i][c] = visit(block_of[tr[rep][c]]);
  }
  return out;
}

Dfa reversed(const Dfa& d) { return minimize(determinize(reverse(d))); }

std::string to_dot(const Dfa& d, std::string_view name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n  rankdir=LR;\n  __start [shape=point];\n";
  for (std::size_t q = 0; q < d.size(); ++q) {
    os << "  q" << q << " [shape=" << (d.accepting[q] ? "doublecircle" : "circle") << "];\n";
  }
  os << "  __start -> q" << d.start << ";\n";
  for (std::size_t q = 0; q < d.size(); ++q) {
    if (d.trans[q][0] == d.trans[q][1]) {
      os << "  q" << q << " -> q" << d.trans[q][0] << " [label=\"0,1\"];\n";
    } else {
      for (int c = 0; c < 2; ++c) os << "  q" << q << " -> q" << d.trans[q][c] << " [label=\"" << c << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

Dfa divisibility_dfa(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisibility_dfa: n must be positive");
  if (n > 0xfffffff0u) throw std::overflow_error("divisibility_dfa: modulus too large");
  Dfa d;
  d.start = d.add_state(false);
  const std::uint32_t dead = d.add_state(false);
  for (std::uint64_t r = 0; r < n; ++r) d.add_state(r == 0);
  d.trans[d.start] = {dead, static_cast<std::uint32_t>(2 + 1 % n)};
  for (std::uint64_t r = 0; r < n; ++r) {
    d.trans[2 + r] = {static_cast<std::uint32_t>(2 + 2 * r % n), static_cast<std::uint32_t>(2 + (2 * r + 1) % n)};
  }
  return d;
}

Dfa at_most_ones_dfa(std::uint32_t t) {
  Dfa d;
  for (std::uint32_t c = 0; c <= t; ++c) d.add_state(true);
  const std::uint32_t dead = d.add_state(false);
  for (std::uint32_t c = 0; c <= t; ++c) d.trans[c] = {c, c == t ? dead : c + 1};
  return d;
}

Dfa exactly_ones_dfa(std::uint32_t t) {
  Dfa d = at_most_ones_dfa(t);
  for (std::uint32_t c = 0; c < t; ++c) d.accepting[c] = 0;
  return d;
}

}  // namespace sturdy::automata
