#include "sturdy/grammar.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace sturdy::census {

std::vector<std::vector<std::size_t>> Grammar::productions_by_variable() const {
  std::vector<std::vector<std::size_t>> out(names.size());
  for (std::size_t i = 0; i < productions.size(); ++i) out[productions[i].lhs].push_back(i);
  return out;
}

Grammar triple_construction(const OneCounterPda& p) {
  const std::size_t Q = p.num_states();
  Grammar g;
  auto var = [&](std::uint32_t a, StackSymbol s, std::uint32_t b) {
    return static_cast<std::uint32_t>(1 + (a * 2 + static_cast<std::uint32_t>(s)) * Q + b);
  };
  g.names.push_back("S");
  for (std::uint32_t a = 0; a < Q; ++a) {
    for (StackSymbol s : {StackSymbol::X, StackSymbol::Z}) {
      for (std::uint32_t b = 0; b < Q; ++b) {
        g.names.push_back("[" + p.state_names[a] + "," + (s == StackSymbol::X ? "X" : "Z") + "," + p.state_names[b] + "]");
      }
    }
  }
  g.start = 0;
  for (std::uint32_t q = 0; q < Q; ++q) g.productions.push_back({0, {GrammarSymbol::var(var(p.start, StackSymbol::Z, q))}});

  for (const auto& t : p.transitions) {
    std::vector<GrammarSymbol> head;
    if (t.input >= 0) head.push_back(GrammarSymbol::term(static_cast<std::uint32_t>(t.input)));
    switch (t.push.size()) {
      case 0:
        g.productions.push_back({var(t.from, t.top, t.to), head});
        break;
      case 1:
        for (std::uint32_t q = 0; q < Q; ++q) {
          auto rhs = head;
          rhs.push_back(GrammarSymbol::var(var(t.to, t.push[0], q)));
          g.productions.push_back({var(t.from, t.top, q), rhs});
        }
        break;
      case 2:
        for (std::uint32_t mid = 0; mid < Q; ++mid) {
          for (std::uint32_t q = 0; q < Q; ++q) {
            auto rhs = head;
            rhs.push_back(GrammarSymbol::var(var(t.to, t.push[0], mid)));
            rhs.push_back(GrammarSymbol::var(var(mid, t.push[1], q)));
            g.productions.push_back({var(t.from, t.top, q), rhs});
          }
        }
        break;
      default:
        throw std::invalid_argument("triple_construction: at most two pushed symbols");
    }
  }
  return g;
}

namespace {

// Keeps the variables flagged in `keep` (start must be kept) and drops every
// production that mentions another variable.
Grammar restrict_to(const Grammar& g, const std::vector<std::uint8_t>& keep) {
  std::vector<std::uint32_t> id(g.num_variables(), 0xffffffffu);
  Grammar out;
  for (std::uint32_t v = 0; v < g.num_variables(); ++v) {
    if (!keep[v]) continue;
    id[v] = static_cast<std::uint32_t>(out.names.size());
    out.names.push_back(g.names[v]);
  }
  out.start = id[g.start];
  for (const auto& p : g.productions) {
    if (!keep[p.lhs]) continue;
    bool ok = true;
    Production q{id[p.lhs], {}};
    for (const auto& s : p.rhs) {
      if (!s.terminal && !keep[s.id]) {
        ok = false;
        break;
      }
      q.rhs.push_back(s.terminal ? s : GrammarSymbol::var(id[s.id]));
    }
    if (ok) out.productions.push_back(std::move(q));
  }
  return out;
}

std::vector<std::uint8_t> generating(const Grammar& g) {
  std::vector<std::uint8_t> gen(g.num_variables(), 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : g.productions) {
      if (gen[p.lhs]) continue;
      if (std::all_of(p.rhs.begin(), p.rhs.end(), [&](const GrammarSymbol& s) { return s.terminal || gen[s.id]; })) {
        gen[p.lhs] = 1;
        changed = true;
      }
    }
  }
  return gen;
}

std::vector<std::uint8_t> reachable(const Grammar& g) {
  const auto by = g.productions_by_variable();
  std::vector<std::uint8_t> seen(g.num_variables(), 0);
  std::vector<std::uint32_t> stack{g.start};
  seen[g.start] = 1;
  while (!stack.empty()) {
    const std::uint32_t v = stack.back();
    stack.pop_back();
    for (auto i : by[v]) {
      for (const auto& s : g.productions[i].rhs) {
        if (!s.terminal && !seen[s.id]) {
          seen[s.id] = 1;
          stack.push_back(s.id);
        }
      }
    }
  }
  return seen;
}

}  // namespace

Grammar clean_grammar(const Grammar& input) {
  const auto gen = generating(input);
  if (!gen[input.start]) throw EmptyLanguage("grammar generates the empty language");
  Grammar g = restrict_to(input, gen);
  g = restrict_to(g, reachable(g));

  for (bool changed = true; changed;) {
    changed = false;
    const auto by = g.productions_by_variable();
    std::vector<std::uint8_t> keep(g.num_variables(), 1);
    for (std::uint32_t v = 0; v < g.num_variables(); ++v) {
      if (by[v].size() != 1) continue;
      const Production single = g.productions[by[v][0]];
      const bool recursive = std::any_of(single.rhs.begin(), single.rhs.end(),
                                         [&](const GrammarSymbol& s) { return !s.terminal && s.id == v; });
      if (recursive) continue;
      if (v == g.start) {
        if (single.rhs.size() == 1 && !single.rhs[0].terminal) {
          g.start = single.rhs[0].id;
          keep[v] = 0;
          g.productions.erase(g.productions.begin() + static_cast<std::ptrdiff_t>(by[v][0]));
          changed = true;
          break;
        }
        continue;
      }
      // Inline v everywhere and drop it.
      std::vector<Production> next;
      for (std::size_t i = 0; i < g.productions.size(); ++i) {
        if (i == by[v][0]) continue;
        Production p{g.productions[i].lhs, {}};
        for (const auto& s : g.productions[i].rhs) {
          if (!s.terminal && s.id == v) {
            p.rhs.insert(p.rhs.end(), single.rhs.begin(), single.rhs.end());
          } else {
            p.rhs.push_back(s);
          }
        }
        next.push_back(std::move(p));
      }
      g.productions = std::move(next);
      keep[v] = 0;
      changed = true;
      break;
    }
    if (changed) {
      g = restrict_to(g, keep);
      g = restrict_to(g, reachable(g));
    }
  }
  return g;
}

std::string to_text(const Grammar& g) {
  const auto by = g.productions_by_variable();
  std::vector<std::uint32_t> order{g.start};
  for (std::uint32_t v = 0; v < g.num_variables(); ++v) {
    if (v != g.start) order.push_back(v);
  }
  std::ostringstream os;
  for (auto v : order) {
    os << g.names[v] << " ->";
    bool first = true;
    for (auto i : by[v]) {
      os << (first ? " " : " | ");
      first = false;
      const auto& rhs = g.productions[i].rhs;
      if (rhs.empty()) os << "eps";
      for (std::size_t j = 0; j < rhs.size(); ++j) {
        if (j) os << ' ';
        if (rhs[j].terminal) {
          os << rhs[j].id;
        } else {
          os << g.names[rhs[j].id];
        }
      }
    }
    os << '\n';
  }
  return os.str();
}

Grammar parse_grammar(std::string_view text) {
  Grammar g;
  std::map<std::string, std::uint32_t> ids;
  auto variable = [&](const std::string& name) {
    auto [it, inserted] = ids.try_emplace(name, static_cast<std::uint32_t>(g.names.size()));
    if (inserted) g.names.push_back(name);
    return it->second;
  };
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_start = false;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto arrow = line.find("->");
    if (arrow == std::string::npos) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) {
        throw std::invalid_argument("grammar: missing '->' in line: " + line);
      }
      continue;
    }
    std::istringstream lhs_in(line.substr(0, arrow));
    std::string lhs;
    if (!(lhs_in >> lhs)) throw std::invalid_argument("grammar: missing left-hand side");
    const std::uint32_t v = variable(lhs);
    if (!have_start) {
      g.start = v;
      have_start = true;
    }
    std::istringstream rhs_in(line.substr(arrow + 2));
    std::string tok;
    Production p{v, {}};
    bool any = false;
    auto flush = [&] {
      if (!any) throw std::invalid_argument("grammar: empty alternative (write eps)");
      g.productions.push_back(p);
      p.rhs.clear();
      any = false;
    };
    while (rhs_in >> tok) {
      if (tok == "|") {
        flush();
      } else if (tok == "eps") {
        any = true;
      } else if (tok == "0" || tok == "1") {
        p.rhs.push_back(GrammarSymbol::term(static_cast<std::uint32_t>(tok[0] - '0')));
        any = true;
      } else {
        p.rhs.push_back(GrammarSymbol::var(variable(tok)));
        any = true;
      }
    }
    flush();
  }
  if (!have_start) throw std::invalid_argument("grammar: no productions");
  return g;
}

std::vector<std::string> generate_words(const Grammar& g, std::size_t max_len) {
  // Shortest yield per variable bounds the search.
  constexpr std::size_t kInf = static_cast<std::size_t>(-1) / 4;
  std::vector<std::size_t> shortest(g.num_variables(), kInf);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : g.productions) {
      std::size_t len = 0;
      for (const auto& s : p.rhs) len += s.terminal ? 1 : shortest[s.id];
      if (len < shortest[p.lhs]) {
        shortest[p.lhs] = len;
        changed = true;
      }
    }
  }
  const auto by = g.productions_by_variable();
  std::vector<std::string> out;
  const std::size_t depth_limit = 8 * (max_len + 2) * (g.num_variables() + 1);

  std::function<void(std::string&, std::vector<GrammarSymbol>&, std::size_t)> expand =
      [&](std::string& prefix, std::vector<GrammarSymbol>& rest, std::size_t depth) {
        if (depth > depth_limit) throw std::runtime_error("generate_words: derivation too deep");
        std::size_t bound = prefix.size();
        for (const auto& s : rest) bound += s.terminal ? 1 : shortest[s.id];
        if (bound > max_len) return;
        if (rest.empty()) {
          out.push_back(prefix);
          return;
        }
        // rest is kept reversed: back() is the leftmost symbol.
        const GrammarSymbol head = rest.back();
        rest.pop_back();
        if (head.terminal) {
          prefix.push_back(static_cast<char>('0' + head.id));
          expand(prefix, rest, depth + 1);
          prefix.pop_back();
        } else {
          for (auto i : by[head.id]) {
            const auto& rhs = g.productions[i].rhs;
            rest.insert(rest.end(), rhs.rbegin(), rhs.rend());
            expand(prefix, rest, depth + 1);
            rest.resize(rest.size() - rhs.size());
          }
        }
        rest.push_back(head);
      };
  std::string prefix;
  std::vector<GrammarSymbol> rest{GrammarSymbol::var(g.start)};
  expand(prefix, rest, 0);
  std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

bool isomorphic(const Grammar& a, const Grammar& b) {
  if (a.num_variables() != b.num_variables() || a.productions.size() != b.productions.size()) return false;
  const auto pa = a.productions_by_variable();
  const auto pb = b.productions_by_variable();
  const std::size_t V = a.num_variables();
  constexpr std::uint32_t kUnset = 0xffffffffu;

  struct State {
    std::vector<std::uint32_t> fwd, rev;
    std::vector<std::uint8_t> verified;
  };

  std::function<bool(State)> extend;
  // Matches productions of (u, v) from index i onward, then continues.
  std::function<bool(State, std::uint32_t, std::uint32_t, std::size_t, std::vector<std::uint8_t>)> match =
      [&](State st, std::uint32_t u, std::uint32_t v, std::size_t i, std::vector<std::uint8_t> used) -> bool {
    if (i == pa[u].size()) {
      st.verified[u] = 1;
      return extend(std::move(st));
    }
    const auto& ra = a.productions[pa[u][i]].rhs;
    for (std::size_t j = 0; j < pb[v].size(); ++j) {
      if (used[j]) continue;
      const auto& rb = b.productions[pb[v][j]].rhs;
      if (ra.size() != rb.size()) continue;
      State next = st;
      bool ok = true;
      for (std::size_t t = 0; t < ra.size() && ok; ++t) {
        if (ra[t].terminal != rb[t].terminal) {
          ok = false;
        } else if (ra[t].terminal) {
          ok = ra[t].id == rb[t].id;
        } else if (next.fwd[ra[t].id] != kUnset) {
          ok = next.fwd[ra[t].id] == rb[t].id;
        } else if (next.rev[rb[t].id] != kUnset) {
          ok = false;
        } else {
          next.fwd[ra[t].id] = rb[t].id;
          next.rev[rb[t].id] = ra[t].id;
        }
      }
      if (!ok) continue;
      used[j] = 1;
      if (match(std::move(next), u, v, i + 1, used)) return true;
      used[j] = 0;
    }
    return false;
  };
  extend = [&](State st) -> bool {
    for (std::uint32_t u = 0; u < V; ++u) {
      if (st.fwd[u] == kUnset || st.verified[u]) continue;
      const std::uint32_t v = st.fwd[u];
      if (pa[u].size() != pb[v].size()) return false;
      return match(std::move(st), u, v, 0, std::vector<std::uint8_t>(pb[v].size(), 0));
    }
    // Everything mapped so far checks out; unmapped variables are unreachable.
    return std::none_of(st.fwd.begin(), st.fwd.end(), [&](std::uint32_t x) { return x == kUnset; });
  };
  State st{std::vector<std::uint32_t>(V, kUnset), std::vector<std::uint32_t>(V, kUnset), std::vector<std::uint8_t>(V, 0)};
  st.fwd[a.start] = b.start;
  st.rev[b.start] = a.start;
  return extend(std::move(st));
}

}  // namespace sturdy::census
