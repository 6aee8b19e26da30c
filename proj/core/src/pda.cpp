#include "sturdy/pda.hpp"

#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace sturdy::census {

namespace {

using Sym = StackSymbol;

void require_odd_k(std::uint32_t k) {
  if (k < 3 || k % 2 == 0) throw std::invalid_argument("PDA multiplier k must be odd and at least 3");
  if (k > 1u << 16) throw std::invalid_argument("PDA multiplier k too large");
}

struct Builder {
  OneCounterPda p;

  std::uint32_t main(int sign, std::uint32_t c) const { return static_cast<std::uint32_t>(sign) * p.k + c; }

  std::uint32_t add(std::string name) {
    p.state_names.push_back(std::move(name));
    return static_cast<std::uint32_t>(p.state_names.size() - 1);
  }

  void edge(std::uint32_t from, int input, Sym top, std::uint32_t to, std::vector<Sym> push) {
    p.transitions.push_back({from, input, top, to, std::move(push)});
  }

  // Reading transitions shared by both machines.
  void add_main_states_and_reads() {
    for (int sign = 0; sign < 2; ++sign) {
      for (std::uint32_t c = 0; c < p.k; ++c) add(std::string(sign ? "+" : "-") + std::to_string(c));
    }
    p.start = main(0, 0);
    for (int sign = 0; sign < 2; ++sign) {
      for (std::uint32_t c = 0; c < p.k; ++c) {
        for (std::uint32_t d = 0; d < 2; ++d) {
          const std::uint32_t v = p.k * d + c;
          const int delta = static_cast<int>(d) - static_cast<int>(v & 1);
          const std::uint32_t c2 = v >> 1;
          for (Sym top : {Sym::X, Sym::Z}) {
            if (delta == 0) {
              edge(main(sign, c), static_cast<int>(d), top, main(sign, c2), {top});
            } else if ((sign == 0 && delta < 0) || (sign == 1 && delta > 0)) {
              edge(main(sign, c), static_cast<int>(d), top, main(sign, c2), {Sym::X, top});
            } else if (top == Sym::X) {
              edge(main(sign, c), static_cast<int>(d), top, main(sign, c2), {});
            } else {
              // The difference crosses zero: flip the sign, keep Z.
              edge(main(sign, c), static_cast<int>(d), top, main(1 - sign, c2), {Sym::Z});
            }
          }
        }
      }
    }
  }
};

}  // namespace

OneCounterPda build_flimsy_pda(std::uint32_t k) {
  require_odd_k(k);
  Builder b;
  b.p.k = k;
  b.p.mode = PdaMode::Flimsy;
  b.add_main_states_and_reads();

  // Guessing the final 1 from (+, c): the remaining carry c' adds s2(c')
  // ones to kn, so at least u = e + s2(c') - 1 X's must be on the stack.
  std::uint32_t u_max = 0;
  for (std::uint32_t c = 0; c < k; ++c) {
    const std::uint32_t v = k + c;
    u_max = std::max<std::uint32_t>(u_max, (v & 1) + std::popcount(v >> 1) - 1);
  }
  const std::uint32_t empty = b.add("E");
  std::vector<std::uint32_t> pop_more{empty};  // pop_more[r]: r more X's required, then empty
  for (std::uint32_t r = 1; r < u_max; ++r) pop_more.push_back(b.add("F" + std::to_string(r)));

  for (std::uint32_t c = 0; c < k; ++c) {
    const std::uint32_t v = k + c;
    const std::uint32_t u = (v & 1) + std::popcount(v >> 1) - 1;
    const std::uint32_t from = b.main(1, c);
    b.edge(from, 1, Sym::X, pop_more[u == 0 ? 0 : u - 1], {});
    if (u == 0) b.edge(from, 1, Sym::Z, empty, {});
  }
  b.edge(empty, -1, Sym::X, empty, {});
  b.edge(empty, -1, Sym::Z, empty, {});
  for (std::uint32_t r = 1; r < pop_more.size(); ++r) b.edge(pop_more[r], -1, Sym::X, pop_more[r - 1], {});
  return b.p;
}

OneCounterPda build_equal_pda(std::uint32_t k) {
  require_odd_k(k);
  Builder b;
  b.p.k = k;
  b.p.mode = PdaMode::Equal;
  b.add_main_states_and_reads();

  // Exactly h = s2(c') - 1 - delta X's must remain after the final 1.
  std::uint32_t h_max = 0;
  for (std::uint32_t c = 0; c < k; ++c) {
    const std::uint32_t v = k + c;
    const int delta = 1 - static_cast<int>(v & 1);
    h_max = std::max(h_max, static_cast<std::uint32_t>(std::max(0, std::popcount(v >> 1) - 1 - delta)));
  }
  const std::uint32_t accept = b.add("ACC");
  std::vector<std::uint32_t> exact;  // exact[r]: exactly r more X's, then Z
  for (std::uint32_t r = 0; r + 1 <= h_max; ++r) exact.push_back(b.add("Q" + std::to_string(r)));

  for (std::uint32_t c = 0; c < k; ++c) {
    const std::uint32_t v = k + c;
    const int delta = 1 - static_cast<int>(v & 1);
    const int m = std::popcount(v >> 1);
    if (delta == 1 && m == 1) b.edge(b.main(0, c), 1, Sym::Z, accept, {});
    const int h = m - 1 - delta;
    if (h == 0) b.edge(b.main(1, c), 1, Sym::Z, accept, {});
    if (h >= 1) b.edge(b.main(1, c), 1, Sym::X, exact[static_cast<std::size_t>(h - 1)], {});
  }
  for (std::uint32_t r = 0; r < exact.size(); ++r) {
    if (r == 0) {
      b.edge(exact[0], -1, Sym::Z, accept, {});
    } else {
      b.edge(exact[r], -1, Sym::X, exact[r - 1], {});
    }
  }
  return b.p;
}

OneCounterPda build_pda(std::uint32_t k, PdaMode mode) {
  return mode == PdaMode::Flimsy ? build_flimsy_pda(k) : build_equal_pda(k);
}

namespace {

// A one-counter stack: `x` X's above an optional Z.
struct Config {
  std::uint32_t state;
  std::uint32_t x;
  bool z;
  std::size_t size() const { return x + (z ? 1 : 0); }
  auto key() const { return std::make_tuple(-static_cast<long long>(size()), state, x, z); }
  bool operator<(const Config& o) const { return key() < o.key(); }
};

using ConfigCounts = std::map<Config, std::uint64_t>;

bool apply(const PdaTransition& t, const Config& c, Config& out) {
  if (c.size() == 0) return false;
  const Sym top = c.x > 0 ? Sym::X : Sym::Z;
  if (top != t.top) return false;
  out = c;
  out.state = t.to;
  if (top == Sym::X) {
    --out.x;
  } else {
    out.z = false;
  }
  for (auto it = t.push.rbegin(); it != t.push.rend(); ++it) {
    if (*it == Sym::X) {
      ++out.x;
    } else {
      if (out.x != 0 || out.z) throw std::logic_error("PDA pushes Z above other symbols");
      out.z = true;
    }
  }
  return true;
}

std::vector<std::vector<const PdaTransition*>> index_by_state(const OneCounterPda& p, bool epsilon) {
  std::vector<std::vector<const PdaTransition*>> out(p.num_states());
  for (const auto& t : p.transitions) {
    if ((t.input < 0) != epsilon) continue;
    if (epsilon && !t.push.empty()) throw std::invalid_argument("PDA epsilon transitions must pop");
    out[t.from].push_back(&t);
  }
  return out;
}

// Adds every configuration reachable by epsilon moves, with path multiplicity.
void epsilon_closure(ConfigCounts& configs, const std::vector<std::vector<const PdaTransition*>>& eps) {
  // Epsilon moves pop, so processing by decreasing stack size is a topological order.
  for (auto it = configs.begin(); it != configs.end(); ++it) {
    for (const PdaTransition* t : eps[it->first.state]) {
      Config next{};
      if (apply(*t, it->first, next)) configs[next] += it->second;
    }
  }
}

ConfigCounts step(const ConfigCounts& configs, int symbol, const std::vector<std::vector<const PdaTransition*>>& reads) {
  ConfigCounts out;
  for (const auto& [c, n] : configs) {
    for (const PdaTransition* t : reads[c.state]) {
      if (t->input != symbol) continue;
      Config next{};
      if (apply(*t, c, next)) out[next] += n;
    }
  }
  return out;
}

std::uint64_t accepted_paths(const ConfigCounts& configs) {
  std::uint64_t total = 0;
  for (const auto& [c, n] : configs) {
    if (c.size() == 0) total += n;
  }
  return total;
}

}  // namespace

Membership pda_membership(const OneCounterPda& p, std::string_view word) {
  const auto reads = index_by_state(p, false);
  const auto eps = index_by_state(p, true);
  ConfigCounts configs{{Config{p.start, 0, true}, 1}};
  epsilon_closure(configs, eps);
  for (char ch : word) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("PDA input must be over {0,1}");
    configs = step(configs, ch - '0', reads);
    epsilon_closure(configs, eps);
  }
  Membership m;
  m.path_count = accepted_paths(configs);
  m.accepted = m.path_count > 0;
  return m;
}

std::vector<std::uint64_t> pda_path_counts(const OneCounterPda& p, std::size_t max_len) {
  const auto reads = index_by_state(p, false);
  const auto eps = index_by_state(p, true);
  ConfigCounts configs{{Config{p.start, 0, true}, 1}};
  epsilon_closure(configs, eps);
  std::vector<std::uint64_t> out{accepted_paths(configs)};
  for (std::size_t len = 1; len <= max_len; ++len) {
    ConfigCounts next = step(configs, 0, reads);
    for (const auto& [c, n] : step(configs, 1, reads)) next[c] += n;
    // Configurations with an empty stack cannot move again.
    configs = std::move(next);
    epsilon_closure(configs, eps);
    out.push_back(accepted_paths(configs));
  }
  return out;
}

std::string to_dot(const OneCounterPda& p) {
  std::ostringstream os;
  os << "digraph pda {\n  rankdir=LR;\n  __start [shape=point];\n";
  for (std::size_t q = 0; q < p.num_states(); ++q) os << "  s" << q << " [label=\"" << p.state_names[q] << "\"];\n";
  os << "  __start -> s" << p.start << ";\n";
  for (const auto& t : p.transitions) {
    std::string push;
    for (Sym s : t.push) push += s == Sym::X ? 'X' : 'Z';
    if (push.empty()) push = "e";
    os << "  s" << t.from << " -> s" << t.to << " [label=\"" << (t.input < 0 ? std::string("e") : std::to_string(t.input))
       << "," << (t.top == Sym::X ? 'X' : 'Z') << "/" << push << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string_view to_string(PdaMode m) { return m == PdaMode::Flimsy ? "flimsy" : "equal"; }

PdaMode parse_mode(std::string_view name) {
  if (name == "flimsy") return PdaMode::Flimsy;
  if (name == "equal") return PdaMode::Equal;
  throw std::invalid_argument("unknown census mode: " + std::string(name));
}

}  // namespace sturdy::census
