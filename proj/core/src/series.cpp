#include "sturdy/series.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace sturdy::census {

SeriesSystem grammar_to_system(const Grammar& g) {
  const std::size_t V = g.num_variables();
  SeriesSystem sys;
  sys.names = g.names;
  sys.start = g.start;
  sys.equations.assign(V, {});

  std::vector<std::uint8_t> nullable(V, 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : g.productions) {
      if (nullable[p.lhs]) continue;
      if (std::all_of(p.rhs.begin(), p.rhs.end(), [&](const GrammarSymbol& s) { return !s.terminal && nullable[s.id]; })) {
        nullable[p.lhs] = 1;
        changed = true;
      }
    }
  }
  for (std::uint32_t v = 0; v < V; ++v) {
    if (nullable[v]) throw NotProper("variable " + g.names[v] + " derives the empty word");
  }

  for (const auto& p : g.productions) {
    Monomial m;
    for (const auto& s : p.rhs) {
      if (s.terminal) {
        ++m.x_power;
      } else {
        m.vars.push_back(s.id);
      }
    }
    std::sort(m.vars.begin(), m.vars.end());
    auto& eq = sys.equations[p.lhs];
    auto it = std::find_if(eq.begin(), eq.end(),
                           [&](const Monomial& o) { return o.x_power == m.x_power && o.vars == m.vars; });
    if (it != eq.end()) {
      ++it->coefficient;
    } else {
      eq.push_back(std::move(m));
    }
  }
  return sys;
}

namespace {

// Variables ordered so that every unit monomial (x^0 times one variable)
// refers to an earlier variable.
std::vector<std::uint32_t> unit_order(const SeriesSystem& sys) {
  const std::size_t V = sys.equations.size();
  std::vector<std::uint8_t> mark(V, 0);  // 0 new, 1 in progress, 2 done
  std::vector<std::uint32_t> order;
  std::vector<std::pair<std::uint32_t, std::size_t>> stack;
  for (std::uint32_t root = 0; root < V; ++root) {
    if (mark[root]) continue;
    stack.push_back({root, 0});
    mark[root] = 1;
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      const auto& eq = sys.equations[v];
      if (i == eq.size()) {
        mark[v] = 2;
        order.push_back(v);
        stack.pop_back();
        continue;
      }
      const Monomial& m = eq[i++];
      if (m.x_power != 0 || m.vars.size() != 1) continue;
      const std::uint32_t w = m.vars[0];
      if (mark[w] == 1) throw NotProper("unit productions form a cycle through " + sys.names[w]);
      if (mark[w] == 0) {
        mark[w] = 1;
        stack.push_back({w, 0});
      }
    }
  }
  return order;
}

std::vector<BigUint> to_big(const std::vector<mpz_class>& v) {
  std::vector<BigUint> out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

}  // namespace

std::string to_text(const SeriesSystem& sys) {
  std::ostringstream os;
  std::vector<std::uint32_t> order{sys.start};
  for (std::uint32_t v = 0; v < sys.equations.size(); ++v) {
    if (v != sys.start) order.push_back(v);
  }
  for (auto v : order) {
    os << sys.names[v] << " =";
    bool first = true;
    for (const auto& m : sys.equations[v]) {
      os << (first ? " " : " + ");
      first = false;
      std::vector<std::string> parts;
      if (m.coefficient != 1 || (m.x_power == 0 && m.vars.empty())) parts.push_back(std::to_string(m.coefficient));
      if (m.x_power == 1) parts.push_back("x");
      if (m.x_power > 1) parts.push_back("x^" + std::to_string(m.x_power));
      for (auto w : m.vars) parts.push_back(sys.names[w]);
      for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? " " : "") << parts[i];
    }
    if (first) os << " 0";
    os << '\n';
  }
  return os.str();
}

Coefficients extract_coefficients(const SeriesSystem& sys, std::size_t n_max) {
  const std::size_t V = sys.equations.size();
  const auto order = unit_order(sys);

  // Series table: variables first, then binary products of earlier series.
  struct Product {
    std::uint32_t a, b;
  };
  std::vector<Product> products;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> product_id;
  auto product_of = [&](std::uint32_t a, std::uint32_t b) {
    if (a > b) std::swap(a, b);
    auto [it, inserted] = product_id.try_emplace({a, b}, static_cast<std::uint32_t>(V + products.size()));
    if (inserted) products.push_back({a, b});
    return it->second;
  };
  struct Term {
    mpz_class coefficient;
    std::uint32_t x_power;
    std::uint32_t series;
  };
  std::vector<std::vector<Term>> terms(V);
  std::vector<std::vector<std::pair<std::uint64_t, std::uint32_t>>> pure(V);
  for (std::uint32_t v = 0; v < V; ++v) {
    for (const auto& m : sys.equations[v]) {
      if (m.vars.empty()) {
        pure[v].push_back({m.coefficient, m.x_power});
        continue;
      }
      std::uint32_t s = m.vars[0];
      for (std::size_t i = 1; i < m.vars.size(); ++i) s = product_of(s, m.vars[i]);
      terms[v].push_back({mpz_class(static_cast<unsigned long>(m.coefficient)), m.x_power, s});
    }
  }

  std::vector<std::vector<mpz_class>> c(V + products.size(), std::vector<mpz_class>(n_max + 1));
  mpz_class acc;
  for (std::size_t n = 0; n <= n_max; ++n) {
    // Every series has a zero constant term, so products at degree n only
    // need degrees 1..n-1 of their factors.
    for (std::size_t p = 0; p < products.size(); ++p) {
      const auto& A = c[products[p].a];
      const auto& B = c[products[p].b];
      acc = 0;
      if (products[p].a == products[p].b) {
        for (std::size_t i = 1; 2 * i < n; ++i) mpz_addmul(acc.get_mpz_t(), A[i].get_mpz_t(), A[n - i].get_mpz_t());
        acc *= 2;
        if (n % 2 == 0 && n > 0) mpz_addmul(acc.get_mpz_t(), A[n / 2].get_mpz_t(), A[n / 2].get_mpz_t());
      } else {
        for (std::size_t i = 1; i < n; ++i) mpz_addmul(acc.get_mpz_t(), A[i].get_mpz_t(), B[n - i].get_mpz_t());
      }
      c[V + p][n] = acc;
    }
    for (auto v : order) {
      acc = 0;
      for (const auto& [coef, power] : pure[v]) {
        if (power == n) acc += static_cast<unsigned long>(coef);
      }
      for (const auto& t : terms[v]) {
        if (t.x_power > n) continue;
        const auto& src = c[t.series][n - t.x_power];
        if (src != 0) mpz_addmul(acc.get_mpz_t(), t.coefficient.get_mpz_t(), src.get_mpz_t());
      }
      c[v][n] = acc;
    }
    if (n == 0) {
      for (std::uint32_t v = 0; v < V; ++v) {
        if (c[v][0] != 0) throw NotProper("variable " + sys.names[v] + " has a nonzero constant term");
      }
    }
  }
  Coefficients out;
  out.reserve(V);
  for (std::uint32_t v = 0; v < V; ++v) out.push_back(to_big(c[v]));
  return out;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

namespace {

IntPoly truncated_mul(const IntPoly& a, const IntPoly& b, std::size_t len) {
  IntPoly out(len);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return out;
}

}  // namespace

Coefficients iterate_system(const SeriesSystem& sys, std::size_t n_max, std::size_t iterations) {
  const std::size_t V = sys.equations.size();
  const std::size_t len = n_max + 1;
  std::vector<IntPoly> cur(V, IntPoly(len));
  for (std::size_t it = 0; it < iterations; ++it) {
    std::vector<IntPoly> next(V, IntPoly(len));
    for (std::uint32_t v = 0; v < V; ++v) {
      for (const auto& m : sys.equations[v]) {
        if (m.x_power >= len) continue;
        IntPoly term(len);
        term[m.x_power] = static_cast<unsigned long>(m.coefficient);
        for (auto w : m.vars) term = truncated_mul(term, cur[w], len);
        for (std::size_t i = 0; i < len; ++i) next[v][i] += term[i];
      }
    }
    cur = std::move(next);
  }
  Coefficients out;
  out.reserve(V);
  for (const auto& p : cur) out.push_back(to_big(p));
  return out;
}

IntPoly quadratic_residual(const std::vector<BigUint>& s, const IntPoly& a2, const IntPoly& a1, const IntPoly& a0,
                           std::size_t order) {
  if (s.size() < order) throw std::invalid_argument("quadratic_residual: series shorter than requested order");
  IntPoly S(order);
  for (std::size_t i = 0; i < order; ++i) S[i] = s[i].mpz();
  const IntPoly S2 = truncated_mul(S, S, order);
  IntPoly out = truncated_mul(a2, S2, order);
  const IntPoly lin = truncated_mul(a1, S, order);
  for (std::size_t i = 0; i < order; ++i) {
    out[i] += lin[i];
    if (i < a0.size()) out[i] += a0[i];
  }
  return out;
}

Quadratic flimsy3_quadratic() {
  const IntPoly x{0, 1};
  const IntPoly two_x_minus_1{-1, 2};
  const IntPoly x_plus_1{1, 1};
  const IntPoly x_minus_1{-1, 1};
  const IntPoly quad{1, -1, 2};  // 2x^2 - x + 1
  const IntPoly common = poly_mul(x_plus_1, quad);
  Quadratic q;
  q.a2 = poly_mul(poly_mul(x, poly_mul(two_x_minus_1, two_x_minus_1)), common);
  q.a1 = poly_mul(poly_mul(two_x_minus_1, poly_mul(x_minus_1, x_minus_1)), common);
  q.a0 = poly_mul(IntPoly{0, 0, 0, 0, 1}, IntPoly{1, -1, 1});
  return q;
}

}  // namespace sturdy::census
