// sturdy: command-line front end for the sturdy-number library.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sturdy/asymptotics.hpp"
#include "sturdy/census.hpp"
#include "sturdy/few_zeros.hpp"
#include "sturdy/report_io.hpp"
#include "sturdy/solvers.hpp"
#include "sturdy/sweeps.hpp"

namespace {

using namespace sturdy;

constexpr int kExitSturdy = 0;
constexpr int kExitFlimsy = 1;
constexpr int kExitError = 2;

std::uint64_t parse_positive(const std::string& text, const char* what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw CLI::ValidationError(what, "expected a positive integer, got '" + text + "'");
  }
  const BigUint v(text);
  if (v.is_zero()) throw CLI::ValidationError(what, "must be at least 1");
  if (!v.fits_u64()) throw CLI::ValidationError(what, "value too large");
  return v.to_u64();
}

FieldSet parse_fields(const std::string& text, Algorithm algorithm) {
  if (text.empty()) return algorithm == Algorithm::OrderDegBfs ? FieldSet::without_mfw() : FieldSet::all();
  FieldSet f{true, false, false, false};
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "char") {
      f.character = true;
    } else if (item == "swm") {
      f.swm = true;
    } else if (item == "msw") {
      f.msw = true;
    } else if (item == "mfw") {
      f.mfw = true;
    } else {
      throw CLI::ValidationError("--fields", "unknown field '" + item + "' (char, swm, msw, mfw)");
    }
  }
  return f;
}

struct Common {
  std::string algo = "auto";
  std::string format = "plain";
  bool no_shortcut = false;
  unsigned jobs = 1;

  void add_to(CLI::App* cmd, bool with_format = true) {
    cmd->add_option("--algo", algo, "dp, aut, bfs01, order_deg_bfs or auto")->capture_default_str();
    if (with_format) cmd->add_option("--format", format, "plain, csv or json")->capture_default_str();
    cmd->add_flag("--no-shortcut", no_shortcut, "skip the swm = 2 and swm = 3 shortcuts");
    cmd->add_option("--jobs,-j", jobs, "worker threads")->capture_default_str()->check(CLI::Range(1u, 1024u));
  }
  SweepOptions sweep() const {
    SweepOptions o;
    o.algorithm = parse_algorithm(algo);
    o.solve.use_shortcuts = !no_shortcut;
    o.solve.quick_witness = !no_shortcut;
    o.jobs = jobs;
    return o;
  }
};

int cmd_check(const std::string& n_text, const Common& c, const std::string& fields_text) {
  const std::uint64_t n = parse_positive(n_text, "n");
  const SweepOptions o = c.sweep();
  const FieldSet fields = parse_fields(fields_text, o.algorithm);
  const SturdyReport rep = solve(n, o.algorithm, fields, o.solve);
  const TableRow row = to_row(rep);
  switch (parse_format(c.format)) {
    case OutputFormat::Plain:
      std::cout << "n         " << rep.n << '\n';
      std::cout << "char      " << (rep.character == Character::Sturdy ? "Sturdy" : "Flimsy") << '\n';
      if (fields.swm) std::cout << "swm       " << rep.swm << '\n';
      if (fields.msw && rep.msw) std::cout << "msw       " << *rep.msw << '\n';
      if (fields.mfw) std::cout << "mfw       " << (rep.mfw ? rep.mfw->to_string() : "-") << '\n';
      if (rep.witness_multiple) std::cout << "multiple  " << rep.witness_multiple->to_binary() << " (binary)\n";
      std::cout << "algorithm " << to_string(rep.algorithm) << '\n';
      break;
    case OutputFormat::Csv:
      write_rows(std::cout, {row}, OutputFormat::Csv);
      break;
    case OutputFormat::Json:
      write_rows(std::cout, {row}, OutputFormat::Json);
      break;
  }
  return rep.character == Character::Sturdy ? kExitSturdy : kExitFlimsy;
}

int cmd_table(std::uint64_t from, std::uint64_t to, const Common& c, const std::string& fields_text) {
  const SweepOptions o = c.sweep();
  const auto rows = table_sweep(from, to, parse_fields(fields_text, o.algorithm), o);
  write_rows(std::cout, rows, parse_format(c.format));
  return 0;
}

int cmd_sturdy_count(std::uint64_t limit, const Common& c) {
  unsigned exponent = 0;
  for (std::uint64_t p = 10; p <= limit; p *= 10) ++exponent;
  if (exponent == 0) throw CLI::ValidationError("--limit", "must be at least 10");
  const auto counts = sturdy_counts_below_powers_of_ten(exponent, c.sweep());
  std::cout << "below,count\n";
  std::uint64_t p = 10;
  for (auto v : counts) {
    std::cout << p << ',' << v << '\n';
    p *= 10;
  }
  return 0;
}

// Checkpoint file: first line is the next unscanned value, then one prime per line.
struct Checkpoint {
  std::uint64_t next = 0;
  std::vector<std::uint64_t> found;
};

Checkpoint load_checkpoint(const std::string& path) {
  Checkpoint cp;
  std::ifstream in(path);
  if (!in) return cp;
  std::string line;
  if (std::getline(in, line)) cp.next = std::stoull(line);
  while (std::getline(in, line)) {
    if (!line.empty()) cp.found.push_back(std::stoull(line));
  }
  return cp;
}

void save_checkpoint(const std::string& path, const Checkpoint& cp) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << cp.next << '\n';
    for (auto p : cp.found) out << p << '\n';
  }
  std::filesystem::rename(tmp, path);
}

int cmd_sturdy_primes(std::uint64_t from, std::uint64_t limit, bool long_run, const std::string& checkpoint,
                      const Common& c) {
  if (long_run) limit = std::uint64_t{1} << 32;
  if (limit > (std::uint64_t{1} << 32)) {
    throw CLI::ValidationError("--limit", "at most 2^32 (use --long for the full range)");
  }
  Checkpoint cp;
  if (!checkpoint.empty()) cp = load_checkpoint(checkpoint);
  const std::uint64_t start = std::max(from, cp.next);
  if (cp.next == 0) cp.next = start;
  const auto t0 = std::chrono::steady_clock::now();
  sturdy_primes(start, limit, c.sweep(), [&](std::uint64_t next, const std::vector<std::uint64_t>& found) {
    cp.next = next;
    cp.found.insert(cp.found.end(), found.begin(), found.end());
    if (!checkpoint.empty()) save_checkpoint(checkpoint, cp);
    if (long_run) {
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::cerr << "scanned to " << next << " (" << std::fixed << std::setprecision(0) << secs << " s)\n";
    }
  });
  if (from <= 2 && limit > 2 && (cp.found.empty() || cp.found.front() != 2)) cp.found.insert(cp.found.begin(), 2);
  for (auto p : cp.found) std::cout << p << '\n';
  return 0;
}

int cmd_swm_histogram(std::uint64_t lo, std::uint64_t hi, const Common& c) {
  const auto hist = swm_histogram(lo, hi, c.sweep());
  std::cout << "swm,count\n";
  std::uint64_t total = 0;
  for (const auto& [swm, count] : hist) {
    std::cout << swm << ',' << count << '\n';
    total += count;
  }
  std::cerr << "odd n scanned: " << total << '\n';
  return 0;
}

int cmd_census(std::uint32_t k, const std::string& mode_text, std::size_t max_n, bool asymptotic, bool brute,
               bool show_grammar, bool show_system, bool show_dot) {
  if (k < 3 || k % 2 == 0) throw CLI::ValidationError("--k", "must be odd and at least 3");
  const census::PdaMode mode = census::parse_mode(mode_text);
  const census::CensusPipeline pipe = census::build_census(k, mode);
  if (show_dot) std::cout << census::to_dot(pipe.pda);
  if (show_grammar) std::cout << census::to_text(pipe.cleaned);
  if (show_system) std::cout << census::to_text(pipe.system);

  std::vector<std::size_t> ns;
  if (asymptotic) {
    for (std::size_t n : {250u, 500u, 1000u, 2000u, 4000u}) {
      if (n <= std::max<std::size_t>(max_n, 1000)) ns.push_back(n);
    }
    max_n = std::max(max_n, ns.back());
  }
  const auto counts = census::census_counts(pipe, max_n);
  int status = 0;
  if (!asymptotic || brute) {
    std::vector<std::uint64_t> oracle;
    if (brute) oracle = census::brute_force_census(k, mode, std::min<std::size_t>(max_n, 28));
    std::cout << (brute ? "N,count,brute_force\n" : "N,count\n");
    for (std::size_t n = 1; n <= max_n; ++n) {
      std::cout << n << ',' << counts[n];
      if (brute && n < oracle.size()) {
        std::cout << ',' << oracle[n];
        if (counts[n] != BigUint(oracle[n])) status = 1;
      }
      std::cout << '\n';
    }
    if (brute) std::cerr << (status == 0 ? "brute force agrees\n" : "brute force MISMATCH\n");
  }
  if (asymptotic) {
    std::cout << "constant c = " << census::format_real(census::leading_constant(k, mode), 10) << '\n';
    std::vector<census::AsymptoticModel> models;
    try {
      models.push_back(census::leading_model(k, mode));
    } catch (const std::invalid_argument&) {
      std::cout << "no leading constant known for this k\n";
    }
    if (k == 3 && mode == census::PdaMode::Flimsy) models.push_back(census::flimsy3_expansion());
    for (const auto& m : models) {
      const auto rep = census::asymptotic_check(counts, m, ns);
      std::cout << "model: " << rep.model << '\n';
      std::cout << "N,ratio,model,residual,scaled_residual,relative_error\n";
      for (const auto& p : rep.points) {
        std::cout << p.n << ',' << census::format_real(p.ratio, 15) << ',' << census::format_real(p.model, 15) << ','
                  << census::format_real(p.residual, 6) << ',' << census::format_real(p.scaled_residual, 6) << ','
                  << census::format_real(p.relative_error, 6) << '\n';
      }
    }
  }
  return status;
}

int cmd_few_zeros(std::uint32_t j, std::uint64_t max_multiplier, std::uint32_t max_bits, const std::string& method,
                  const std::string& format) {
  if (j > 9) throw CLI::ValidationError("--zeros", "reference exceptions cover 0..9 zeros");
  const auto& sporadic = automata::known_sporadic_exceptions(j);
  const bool use_automata = method == "automata" || (method == "auto" && j <= 4);
  if (!use_automata && method != "brute" && method != "auto") {
    throw CLI::ValidationError("--method", "automata, brute or auto");
  }
  const bool json = format == "json";
  if (use_automata) {
    automata::FewZerosOptions opt;
    opt.max_multiplier = max_multiplier;
    const auto v = automata::verify_few_zeros_theorem(j, sporadic, automata::mirrored_family_patterns(j), opt);
    if (json) {
      std::cout << automata::to_json(v) << '\n';
    } else {
      std::cout << "zeros " << j << ", multipliers up to " << v.max_multiplier << ", union DFA " << v.union_states
                << " states\n";
      std::cout << "families:";
      for (const auto& p : automata::mirrored_family_patterns(j)) std::cout << "  " << p;
      std::cout << (automata::mirrored_family_patterns(j).empty() ? "  (none)\n" : "\n");
      std::cout << "left over" << (v.leftover_finite ? "" : " (infinite, listing truncated)") << ":";
      for (const auto& w : v.leftover) std::cout << ' ' << BigUint::from_binary(w);
      std::cout << (v.leftover.empty() ? " (none)\n" : "\n");
      std::cout << "  flimsy by solver:";
      for (const auto& w : v.leftover_flimsy) std::cout << ' ' << BigUint::from_binary(w);
      std::cout << (v.leftover_flimsy.empty() ? " (none)\n" : "\n");
      std::cout << "sporadic exceptions:";
      for (const auto& w : v.leftover) {
        if (std::find(v.leftover_flimsy.begin(), v.leftover_flimsy.end(), w) == v.leftover_flimsy.end()) {
          std::cout << ' ' << BigUint::from_binary(w);
        }
      }
      std::cout << (v.leftover.size() == v.leftover_flimsy.size() ? " (none)\n" : "\n");
      for (const auto& w : v.unexpected) std::cout << "unexpected exception " << w << '\n';
      for (const auto& w : v.missing) std::cout << "missing exception " << w << '\n';
      std::cout << "verdict " << (v.ok() ? "OK" : "FAIL") << '\n';
    }
    return v.ok() ? 0 : 1;
  }
  const auto r = automata::brute_force_few_zeros(j, max_bits, sporadic);
  if (json) {
    nlohmann::json out;
    out["zeros"] = j;
    out["max_bits"] = max_bits;
    out["scanned"] = r.scanned;
    out["family_members"] = r.family_members;
    out["solver_decided"] = r.solver_decided;
    out["exceptions"] = r.without_witness;
    out["ok"] = r.ok();
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "zeros " << j << ", odd n below 2^" << max_bits << ": scanned " << r.scanned << ", family "
              << r.family_members << ", solver-decided " << r.solver_decided << '\n';
    std::cout << "sporadic exceptions:";
    for (auto n : r.without_witness) std::cout << ' ' << n;
    std::cout << (r.without_witness.empty() ? " (none)\n" : "\n");
    std::cout << "verdict " << (r.ok() ? "OK" : "FAIL") << '\n';
  }
  return r.ok() ? 0 : 1;
}

int cmd_bench(std::uint64_t to, const std::string& algos_text, const std::string& functions_text,
              std::uint64_t dp_limit, const Common& c) {
  std::vector<Algorithm> algos;
  {
    std::stringstream in(algos_text);
    std::string item;
    while (std::getline(in, item, ',')) algos.push_back(parse_algorithm(item));
  }
  std::vector<std::string> functions;
  {
    std::stringstream in(functions_text);
    std::string item;
    while (std::getline(in, item, ',')) functions.push_back(item);
  }
  SolveOptions opt;
  opt.use_shortcuts = !c.no_shortcut;
  opt.quick_witness = false;  // time the algorithms, not the prefilter

  std::map<std::pair<std::string, std::string>, double> ms;
  std::cout << "algorithm,function,to,milliseconds\n";
  for (const auto& fn : functions) {
    FieldSet wanted;
    if (fn == "is_sturdy") {
      wanted = FieldSet::char_only();
    } else if (fn == "swm") {
      wanted = FieldSet::char_swm();
    } else if (fn == "msw") {
      wanted = FieldSet::without_mfw();
    } else if (fn == "mfw") {
      wanted = FieldSet{true, false, false, true};
    } else {
      throw CLI::ValidationError("--functions", "is_sturdy, swm, msw or mfw");
    }
    for (Algorithm a : algos) {
      if (a == Algorithm::OrderDegBfs && wanted.mfw) continue;
      const std::uint64_t upto = a == Algorithm::Dp ? std::min(to, dp_limit) : to;
      const auto t0 = std::chrono::steady_clock::now();
      for (std::uint64_t n = 1; n <= upto; ++n) solve(n, a, wanted, opt);
      const double elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      ms[{std::string(to_string(a)), fn}] = elapsed;
      std::cout << to_string(a) << ',' << fn << ',' << upto << ',' << std::fixed << std::setprecision(1) << elapsed
                << '\n';
    }
  }
  const auto b = ms.find({"bfs01", "is_sturdy"});
  const auto a = ms.find({"aut", "is_sturdy"});
  if (b != ms.end() && a != ms.end()) {
    const bool ok = b->second <= a->second;
    std::cerr << "ordering bfs01 <= aut on is_sturdy: " << (ok ? "holds" : "VIOLATED") << '\n';
    return ok ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sturdy and flimsy numbers: minimal binary digit sums of multiples"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "sturdy 0.1.0");

  Common check_opts;
  std::string check_n;
  std::string check_fields;
  auto* check = app.add_subcommand("check", "decide one n; exit code 0 sturdy, 1 flimsy, 2 error");
  check->add_option("n", check_n, "positive integer")->required();
  check->add_option("--fields", check_fields, "comma list of char, swm, msw, mfw (default all)");
  check_opts.add_to(check);

  Common table_opts;
  std::uint64_t table_from = 3, table_to = 129;
  std::string table_fields;
  auto* table = app.add_subcommand("table", "one row n,char,swm,msw,mfw per odd n in [from, to]");
  table->add_option("--from", table_from)->capture_default_str()->check(CLI::PositiveNumber);
  table->add_option("--to", table_to)->capture_default_str()->check(CLI::PositiveNumber);
  table->add_option("--fields", table_fields, "comma list of char, swm, msw, mfw (default all)");
  table_opts.add_to(table);

  Common count_opts;
  std::uint64_t count_limit = 1000000;
  auto* count = app.add_subcommand("sturdy-count", "sturdy numbers (1 and odd n) below each power of ten");
  count->add_option("--limit", count_limit, "largest power of ten")->capture_default_str();
  count_opts.add_to(count, false);

  Common primes_opts;
  std::uint64_t primes_limit = std::uint64_t{1} << 22, primes_from = 2;
  bool primes_long = false;
  std::string primes_checkpoint;
  auto* primes = app.add_subcommand("sturdy-primes", "sturdy primes below a limit");
  primes->add_option("--limit", primes_limit, "exclusive upper bound (default 2^22)")->capture_default_str();
  primes->add_option("--from", primes_from, "inclusive lower bound")->capture_default_str();
  primes->add_flag("--long", primes_long, "scan all primes below 2^32 (many hours)");
  primes->add_option("--checkpoint", primes_checkpoint, "resumable progress file");
  primes_opts.add_to(primes, false);

  Common hist_opts;
  std::uint64_t hist_lo = 1, hist_hi = std::uint64_t{1} << 20;
  auto* hist = app.add_subcommand("swm-histogram", "frequency of swm over odd n with lo < n < hi");
  hist->add_option("--lo", hist_lo)->capture_default_str();
  hist->add_option("--hi", hist_hi)->capture_default_str();
  hist_opts.add_to(hist, false);

  std::uint32_t census_k = 3;
  std::string census_mode = "flimsy";
  std::size_t census_max = 20;
  bool census_asym = false, census_brute = false, census_grammar = false, census_system = false, census_dot = false;
  auto* census_cmd = app.add_subcommand("census", "count k-flimsy or k-equal numbers per bit length");
  census_cmd->add_option("--k", census_k, "odd multiplier")->capture_default_str();
  census_cmd->add_option("--mode", census_mode, "flimsy or equal")->capture_default_str();
  census_cmd->add_option("--max-n", census_max, "largest bit length")->capture_default_str();
  census_cmd->add_flag("--asymptotic", census_asym, "compare with the asymptotic densities");
  census_cmd->add_flag("--brute-force", census_brute, "cross-check counts by testing every n (N <= 28)");
  census_cmd->add_flag("--grammar", census_grammar, "print the cleaned grammar");
  census_cmd->add_flag("--system", census_system, "print the equation system");
  census_cmd->add_flag("--dot", census_dot, "print the PDA in DOT format");

  std::uint32_t fz_j = 1;
  std::uint64_t fz_max_mult = 0;
  std::uint32_t fz_bits = 40;
  std::string fz_method = "auto", fz_format = "plain";
  auto* fz = app.add_subcommand("few-zeros", "classify flimsy numbers with exactly j zeros in binary");
  fz->add_option("--zeros", fz_j, "number of zeros j")->capture_default_str();
  fz->add_option("--max-multiplier", fz_max_mult, "largest odd multiplier (default 2^(j+1)+1)");
  fz->add_option("--max-bits", fz_bits, "bit bound for brute force")->capture_default_str();
  fz->add_option("--method", fz_method, "automata, brute or auto (automata for j <= 4)")->capture_default_str();
  fz->add_option("--format", fz_format, "plain or json")->capture_default_str();

  Common bench_opts;
  std::uint64_t bench_to = 10000, bench_dp_limit = 2000;
  std::string bench_algos = "bfs01,aut,order_deg_bfs,dp", bench_functions = "is_sturdy,swm,msw,mfw";
  auto* bench = app.add_subcommand("bench", "wall-clock time of each algorithm over n = 1..to (csv)");
  bench->add_option("--to", bench_to)->capture_default_str();
  bench->add_option("--algos", bench_algos)->capture_default_str();
  bench->add_option("--functions", bench_functions)->capture_default_str();
  bench->add_option("--dp-limit", bench_dp_limit, "dp runs only up to this n")->capture_default_str();
  bench->add_flag("--no-shortcut", bench_opts.no_shortcut, "skip the swm = 2 and swm = 3 shortcuts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*check) return cmd_check(check_n, check_opts, check_fields);
    if (*table) return cmd_table(table_from, table_to, table_opts, table_fields);
    if (*count) return cmd_sturdy_count(count_limit, count_opts);
    if (*primes) return cmd_sturdy_primes(primes_from, primes_limit, primes_long, primes_checkpoint, primes_opts);
    if (*hist) return cmd_swm_histogram(hist_lo, hist_hi, hist_opts);
    if (*census_cmd) {
      return cmd_census(census_k, census_mode, census_max, census_asym, census_brute, census_grammar, census_system,
                        census_dot);
    }
    if (*fz) return cmd_few_zeros(fz_j, fz_max_mult, fz_bits, fz_method, fz_format);
    if (*bench) return cmd_bench(bench_to, bench_algos, bench_functions, bench_dp_limit, bench_opts);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
