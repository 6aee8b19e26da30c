// Acceptance checks, one PASS/FAIL line each. Arguments select checks by
// name; no arguments runs all of them.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sturdy/asymptotics.hpp"
#include "sturdy/census.hpp"
#include "sturdy/few_zeros.hpp"
#include "sturdy/numeric.hpp"
#include "sturdy/report_io.hpp"
#include "sturdy/series.hpp"
#include "sturdy/solvers.hpp"
#include "sturdy/sweeps.hpp"

using namespace sturdy;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Check {
  std::string name;
  double budget_seconds;
  std::function<Outcome()> run;
};

constexpr Algorithm kAll[] = {Algorithm::Dp, Algorithm::Aut, Algorithm::Bfs01, Algorithm::OrderDegBfs};

SolveOptions raw_options() {
  SolveOptions o;
  o.use_shortcuts = false;
  o.quick_witness = false;
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome golden_table() {
  const auto want = parse_csv(read_file(std::string(STURDY_TEST_DATA) + "/small_odd_table.csv"));
  if (want.size() != 64) return {false, "reference table has " + std::to_string(want.size()) + " rows"};
  for (auto a : kAll) {
    SweepOptions o;
    o.algorithm = a;
    o.solve = raw_options();
    const bool no_mfw = a == Algorithm::OrderDegBfs;
    const auto got = table_sweep(3, 129, no_mfw ? FieldSet::without_mfw() : FieldSet::all(), o);
    for (std::size_t i = 0; i < want.size(); ++i) {
      TableRow w = want[i];
      if (no_mfw) w.mfw.reset();
      if (i >= got.size() || !(got[i] == w)) {
        return {false, std::string(to_string(a)) + " differs at n = " + std::to_string(w.n)};
      }
    }
  }
  return {true, "64 rows x 4 algorithms"};
}

Outcome cross_sweep() {
  std::map<Algorithm, std::vector<TableRow>> rows;
  for (auto a : kAll) {
    SweepOptions o;
    o.algorithm = a;
    o.solve = raw_options();
    rows[a] = table_sweep(3, 10000, a == Algorithm::OrderDegBfs ? FieldSet::without_mfw() : FieldSet::all(), o);
  }
  const auto& ref = rows[Algorithm::Bfs01];
  for (auto a : kAll) {
    const auto& r = rows[a];
    if (r.size() != ref.size()) return {false, "row count differs"};
    for (std::size_t i = 0; i < r.size(); ++i) {
      const bool same = r[i].character == ref[i].character && r[i].swm == ref[i].swm && r[i].msw == ref[i].msw &&
                        (a == Algorithm::OrderDegBfs || r[i].mfw == ref[i].mfw);
      if (!same) return {false, std::string(to_string(a)) + " differs at n = " + std::to_string(r[i].n)};
    }
  }
  return {true, std::to_string(ref.size()) + " odd n, 4 algorithms"};
}

Outcome sturdy_counts() {
  SweepOptions o;
  o.algorithm = Algorithm::Bfs01;
  const auto got = sturdy_counts_below_powers_of_ten(6, o);
  const std::vector<std::uint64_t> want{5, 22, 81, 292, 995, 3438};
  std::string d;
  for (auto v : got) d += (d.empty() ? "" : ",") + std::to_string(v);
  return {got == want, d};
}

Outcome histogram() {
  const std::map<std::uint32_t, std::uint64_t> want = {
      {2, 115931}, {3, 286681}, {4, 83895}, {5, 19287}, {6, 9903}, {7, 4246}, {8, 2274},
      {9, 1027},   {10, 529},   {11, 256},  {12, 130},  {13, 64},  {14, 32},  {15, 16},
      {16, 8},     {17, 4},     {18, 2},    {19, 1},    {20, 1}};
  SweepOptions o;
  o.algorithm = Algorithm::Bfs01;
  const auto got = swm_histogram(1, std::uint64_t{1} << 20, o);
  for (const auto& [swm, count] : want) {
    const auto it = got.find(swm);
    const std::uint64_t have = it == got.end() ? 0 : it->second;
    if (have != count) return {false, "swm " + std::to_string(swm) + ": " + std::to_string(have)};
  }
  return {true, "19 rows, swm 2..20"};
}

Outcome sturdy_primes_small() {
  SweepOptions o;
  o.algorithm = Algorithm::Bfs01;
  const auto got = sturdy_primes(0, std::uint64_t{1} << 22, o);
  const std::vector<std::uint64_t> want{2,    3,    5,    7,     17,     31,     73,     89,     127,   257,
                                        1801, 2089, 8191, 65537, 131071, 178481, 262657, 524287, 2099863};
  return {got == want, std::to_string(got.size()) + " primes below 2^22"};
}

Outcome big_number() {
  const BigUint n = (BigUint::pow2(83) - BigUint(1)) / BigUint(167);
  const auto r = numeric::is_flimsy_by_divisor_criterion_with_order(n, 2, 83);
  return {!r.flimsy && r.multipliers_scanned == BigUint(167),
          "scanned " + r.multipliers_scanned.to_string() + " multiples, " + (r.flimsy ? "flimsy" : "sturdy")};
}

Outcome census_exact() {
  for (std::uint32_t k : {3u, 5u}) {
    for (auto mode : {census::PdaMode::Flimsy, census::PdaMode::Equal}) {
      const auto counts = census::census_counts(census::build_census(k, mode), 20);
      const auto brute = census::brute_force_census(k, mode, 20);
      for (std::size_t n = 1; n <= 20; ++n) {
        if (counts[n] != BigUint(brute[n])) {
          return {false, std::to_string(k) + "-" + std::string(census::to_string(mode)) + " N = " + std::to_string(n)};
        }
      }
    }
  }
  return {true, "4 grammars, N = 1..20"};
}

Outcome algebraic() {
  const auto counts = census::census_counts(census::build_census(3, census::PdaMode::Flimsy), 200);
  const census::Quadratic q = census::flimsy3_quadratic();
  const auto res = census::quadratic_residual(counts, q.a2, q.a1, q.a0, 201);
  for (std::size_t i = 0; i < res.size(); ++i) {
    if (res[i] != 0) return {false, "nonzero coefficient of x^" + std::to_string(i)};
  }
  return {true, "residual 0 mod x^201"};
}

Outcome asymptotic() {
  using census::PdaMode;
  std::ostringstream d;
  bool ok = true;
  {
    const auto counts = census::census_counts(census::build_census(3, PdaMode::Flimsy), 4000);
    const auto rep = census::asymptotic_check(counts, census::leading_model(3, PdaMode::Flimsy), {1000, 4000});
    const auto& a = rep.points[0];
    const auto& b = rep.points[1];
    const bool bounded = a.scaled_residual <= 1 && b.scaled_residual <= 1;
    const bool decreasing = boost::multiprecision::abs(b.residual) < boost::multiprecision::abs(a.residual);
    ok = ok && bounded && decreasing;
    d << "3-flimsy scaled " << census::format_real(a.scaled_residual, 6) << " -> "
      << census::format_real(b.scaled_residual, 6) << ", |residual| " << census::format_real(abs(a.residual), 4)
      << " -> " << census::format_real(abs(b.residual), 4);
  }
  for (const auto& [k, mode] : std::vector<std::pair<std::uint32_t, PdaMode>>{
           {5, PdaMode::Flimsy}, {3, PdaMode::Equal}, {5, PdaMode::Equal}}) {
    const auto counts = census::census_counts(census::build_census(k, mode), 2000);
    const auto rep = census::asymptotic_check(counts, census::leading_model(k, mode), {2000});
    const auto err = rep.points[0].relative_error;
    ok = ok && err <= census::Real("0.05");
    d << "; " << k << "-" << census::to_string(mode) << " rel err " << census::format_real(err, 3);
  }
  return {ok, d.str()};
}

Outcome few_zeros() {
  std::ostringstream d;
  bool ok = true;
  for (std::uint32_t j = 0; j <= 4; ++j) {
    const auto v = automata::verify_few_zeros_theorem(j, automata::known_sporadic_exceptions(j),
                                                      automata::mirrored_family_patterns(j));
    ok = ok && v.ok();
    d << "j=" << j << (v.ok() ? " exact" : " MISMATCH") << "; ";
  }
  for (std::uint32_t j = 5; j <= 9; ++j) {
    const auto r = automata::brute_force_few_zeros(j, 40, automata::known_sporadic_exceptions(j));
    ok = ok && r.ok();
    d << "j=" << j << (r.ok() ? " ok" : " MISMATCH") << " (" << r.scanned << " odd n < 2^40)" << (j < 9 ? "; " : "");
  }
  return {ok, d.str()};
}

Outcome unambiguity() {
  std::uint64_t words = 0;
  for (std::uint32_t k : {3u, 5u}) {
    for (auto mode : {census::PdaMode::Flimsy, census::PdaMode::Equal}) {
      const auto pda = census::build_pda(k, mode);
      for (std::uint64_t n = 1; n < (std::uint64_t{1} << 16); ++n) {
        std::string w;
        for (std::uint64_t v = n; v; v >>= 1) w.push_back((v & 1) ? '1' : '0');
        const auto m = census::pda_membership(pda, w);
        if (m.accepted != census::in_census_set(n, k, mode)) return {false, "membership wrong at n = " + std::to_string(n)};
        if (m.accepted && m.path_count != 1) {
          return {false, std::to_string(m.path_count) + " paths at n = " + std::to_string(n)};
        }
        words += m.accepted;
      }
    }
  }
  return {true, std::to_string(words) + " accepted words, one path each"};
}

Outcome bench_ordering() {
  const auto time_sweep = [](Algorithm a) {
    const SolveOptions o = raw_options();
    const auto t0 = std::chrono::steady_clock::now();
    for (std::uint64_t n = 1; n <= 10000; ++n) solve(n, a, FieldSet::char_only(), o);
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  };
  time_sweep(Algorithm::Bfs01);  // warm up
  const double b = time_sweep(Algorithm::Bfs01);
  const double a = time_sweep(Algorithm::Aut);
  std::ostringstream d;
  d.precision(1);
  d << std::fixed << "bfs01 " << b << " ms, aut " << a << " ms";
  return {b < a, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Check> checks = {
      {"golden_table", 10, golden_table},
      {"cross_algorithm_sweep", 300, cross_sweep},
      {"sturdy_counts", 600, sturdy_counts},
      {"swm_histogram", 1800, histogram},
      {"sturdy_primes_2_22", 600, sturdy_primes_small},
      {"big_number_2_83", 1, big_number},
      {"census_exactness", 300, census_exact},
      {"algebraic_regression", 10, algebraic},
      {"asymptotic_regression", 600, asymptotic},
      {"few_zeros", 900, few_zeros},
      {"unambiguity", 120, unambiguity},
      {"benchmark_ordering", 600, bench_ordering},
  };
  std::set<std::string> wanted(argv + 1, argv + argc);
  if (wanted.count("--list")) {
    for (const auto& c : checks) std::cout << c.name << '\n';
    return 0;
  }
  int failures = 0;
  std::size_t ran = 0;
  for (const auto& c : checks) {
    if (!wanted.empty() && !wanted.count(c.name)) continue;
    ++ran;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.budget_seconds;
    const bool pass = out.pass && in_time;
    failures += !pass;
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs;
    std::cout << (pass ? "PASS " : "FAIL ") << c.name << " (" << out.detail << "; " << t.str() << " s"
              << (in_time ? "" : ", over budget") << ")" << std::endl;
  }
  if (ran != (wanted.empty() ? checks.size() : wanted.size())) {
    std::cerr << "unknown check name\n";
    return 2;
  }
  return failures == 0 ? 0 : 1;
}
