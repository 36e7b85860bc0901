#include "psg/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "psg/apery.hpp"
#include "psg/cache.hpp"
#include "psg/conjectures.hpp"
#include "psg/io.hpp"

namespace psg {

namespace fs = std::filesystem;

const std::vector<std::string> kAllChecks = {"wilf",   "prop1",  "c1",   "c2",
                                             "c3",     "pi-bounds", "lemma4", "twin",
                                             "selmer", "rs-bounds", "lambda2"};

namespace {

std::string usage_problem(const RunConfig& cfg) {
  if (cfg.n_from < 1) return "index range must start at 1";
  if (cfg.n_from > cfg.n_to) return "empty index range (--from > --to)";
  if (cfg.window_factor.num <= 0 || cfg.window_factor.den <= 0)
    return "window factor must be positive";
  if (cfg.jobs < 0) return "jobs must be positive";
  for (const auto& c : cfg.checks)
    if (std::find(kAllChecks.begin(), kAllChecks.end(), c) == kAllChecks.end())
      return "unknown check: " + c;
  return {};
}

PrimeTable sieve_for_sweep(const RunConfig& cfg) {
  return PrimeTable::sieve_upto(sieve_limit_for(cfg.n_to, cfg.window_factor));
}

// Sweep [n_from, n_to], consulting and updating the cache when configured.
// Returns false (with FAIL lines on out) when a cache audit fails.
bool sweep_with_cache(const RunConfig& cfg, const PrimeTable& table,
                      std::vector<SemigroupSummary>& rows, std::ostream& out,
                      std::ostream& diag) {
  rows.clear();
  if (cfg.cache_dir.empty()) {
    rows = compute_range(cfg.n_from, cfg.n_to, table, cfg.jobs, cfg.window_factor);
    return true;
  }

  SummaryCache cache(cfg.cache_dir, decimal_string(cfg.window_factor));
  std::map<i64, SemigroupSummary> known = cache.load(diag);

  std::vector<i64> hits;
  for (i64 n = cfg.n_from; n <= cfg.n_to; ++n)
    if (known.count(n)) hits.push_back(n);

  // compute the gaps as contiguous runs
  i64 n = cfg.n_from;
  while (n <= cfg.n_to) {
    if (known.count(n)) {
      ++n;
      continue;
    }
    i64 run_end = n;
    while (run_end + 1 <= cfg.n_to && !known.count(run_end + 1)) ++run_end;
    for (auto& s : compute_range(n, run_end, table, cfg.jobs, cfg.window_factor))
      known[s.n] = std::move(s);
    n = run_end + 1;
  }

  // sampled audit: cached rows must be bit-identical to recomputation
  std::vector<i64> sample;
  if (!hits.empty()) {
    for (std::size_t q = 0; q <= 4; ++q)
      sample.push_back(hits[std::min(hits.size() - 1, q * hits.size() / 4)]);
    std::sort(sample.begin(), sample.end());
    sample.erase(std::unique(sample.begin(), sample.end()), sample.end());
  }
  bool audit_ok = true;
  for (i64 a : sample) {
    SemigroupSummary fresh = compute_summary(a, table, cfg.window_factor);
    if (!(fresh == known.at(a))) {
      out << "FAIL check=cache-audit n=" << a << " cached row differs from recomputation\n";
      audit_ok = false;
    }
  }
  if (!audit_ok) return false;

  cache.store(known);
  for (i64 k = cfg.n_from; k <= cfg.n_to; ++k) rows.push_back(known.at(k));
  return true;
}

int write_table(const RunConfig& cfg, std::span<const SemigroupSummary> rows, std::ostream& out,
                std::ostream& diag) {
  auto emit = [&](std::ostream& os) {
    if (cfg.format == RunConfig::Format::csv) write_summary_csv(os, rows);
    else write_summary_json(os, rows);
  };
  if (cfg.out_path == "-") {
    emit(out);
    return kExitOk;
  }
  std::ofstream file(cfg.out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    diag << "error: cannot open " << cfg.out_path << " for writing\n";
    return kExitInternal;
  }
  emit(file);
  if (!file.good()) {
    diag << "error: short write to " << cfg.out_path << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

struct CheckTally {
  std::string name;
  i64 applicable = 0;
  i64 passed = 0;
  i64 inconclusive = 0;
  std::vector<std::string> failures;

  void count(bool ok, const std::string& fail_line) {
    ++applicable;
    if (ok) ++passed;
    else failures.push_back(fail_line);
  }
};

std::string fail_line(const char* check, i64 n, i64 margin) {
  std::ostringstream os;
  os << "FAIL check=" << check << " n=" << n << " margin=" << margin;
  return os.str();
}

}  // namespace

int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  if (auto p = usage_problem(cfg); !p.empty()) {
    diag << "usage error: " << p << "\n";
    return kExitUsage;
  }
  const PrimeTable table = sieve_for_sweep(cfg);
  std::vector<SemigroupSummary> rows;
  if (!sweep_with_cache(cfg, table, rows, out, diag)) return kExitCheckFailed;
  return write_table(cfg, rows, out, diag);
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  if (auto p = usage_problem(cfg); !p.empty()) {
    diag << "usage error: " << p << "\n";
    return kExitUsage;
  }
  const std::vector<std::string>& selected = cfg.checks.empty() ? kAllChecks : cfg.checks;
  auto wants = [&selected](const char* name) {
    return std::find(selected.begin(), selected.end(), name) != selected.end();
  };

  const PrimeTable table = sieve_for_sweep(cfg);
  std::vector<SemigroupSummary> rows;
  if (!sweep_with_cache(cfg, table, rows, out, diag)) return kExitCheckFailed;

  std::vector<CheckTally> tallies;
  auto add_tally = [&tallies](const std::string& name) -> CheckTally& {
    tallies.push_back({name});
    return tallies.back();
  };

  if (wants("wilf")) {
    auto& t = add_tally("wilf");
    for (const auto& s : rows) {
      i64 margin = (1 + s.f) * (s.e - 1) - s.g * s.e;
      t.count(margin >= 0, fail_line("wilf", s.n, margin));
    }
  }
  if (wants("prop1")) {
    auto& t = add_tally("prop1");
    for (const auto& s : rows) {
      i64 margin = s.f - (3 * s.p - 6);
      t.count(margin >= 0, fail_line("prop1", s.n, margin));
    }
  }
  if (wants("c1")) {
    // trend check: decade-window mean of f/p near the top of the range must
    // sit inside the asymptotic bracket [2.8, 3.6]; below n=200 the window is
    // too short to judge and the check reports inconclusive.
    auto& t = add_tally("c1");
    if (cfg.n_to >= 200) {
      TrendSeries fp{"f/p", 3.0, {}};
      for (const auto& s : rows) fp.points.push_back({s.n, {s.f, s.p}});
      auto mean = decade_mean(fp, cfg.n_to);
      ++t.applicable;
      if (mean && *mean >= 2.8 && *mean <= 3.6) ++t.passed;
      else
        t.failures.push_back("FAIL check=c1 n=" + std::to_string(cfg.n_to) +
                             " decade_mean=" + std::to_string(mean ? *mean : 0.0));
    } else {
      ++t.applicable;
      ++t.passed;
      ++t.inconclusive;
    }
  }
  if (wants("c2")) {
    auto& t = add_tally("c2");
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
      const auto& s = rows[i];
      const auto& nx = rows[i + 1];
      i64 margin = 4 * s.p - nx.f;
      t.count(margin > 0, fail_line("c2", s.n, margin));
      if (s.n >= 3) {
        i64 margin_b = nx.f - 3 * s.p;
        t.count(margin_b > 0, fail_line("c2-lower", s.n, margin_b));
      }
    }
  }
  if (wants("c3")) {
    auto& t = add_tally("c3");
    for (const auto& s : rows)
      if (s.n >= 5) t.count(s.f % 2 != 0, fail_line("c3", s.n, s.f % 2));
  }
  if (wants("pi-bounds")) {
    auto& t = add_tally("pi-bounds");
    for (const auto& s : rows) {
      i64 pi3 = table.prime_count(3 * s.p);
      if (s.n > 8) t.count(pi3 > 2 * s.n, fail_line("pi-lower", s.n, pi3 - 2 * s.n));
      if (s.n > 1) t.count(pi3 < 3 * s.n, fail_line("pi-upper", s.n, 3 * s.n - pi3));
    }
  }
  if (wants("lemma4")) {
    auto& t = add_tally("lemma4");
    for (const auto& s : rows) {
      i64 margin = s.n * s.n - s.f;
      if (s.n >= 429) t.count(margin > 0, fail_line("lemma4", s.n, margin));
      else if (s.n != 5) t.count(margin >= 0, fail_line("lemma4", s.n, margin));
    }
  }
  if (wants("twin")) {
    auto& t = add_tally("twin");
    for (const auto& s : rows)
      if (s.f < 3 * s.p)
        t.count(table.twin_pair_in(s.p, 3 * s.p + 4).has_value(),
                fail_line("twin", s.n, s.f - 3 * s.p));
  }
  if (wants("selmer")) {
    auto& t = add_tally("selmer");
    for (const auto& s : rows) {
      if (s.n < 429) continue;
      SelmerBound b = selmer_bound(s.n, table);
      i64 margin = b.bound - s.f;
      t.count(!b.hypothesis_violated && margin >= 0, fail_line("selmer", s.n, margin));
    }
  }
  if (wants("rs-bounds")) {
    auto& t = add_tally("rs-bounds");
    const i64 hi = std::min<i64>(table.limit(), 10'000'000);
    const i64 step = std::max<i64>(1, (hi - 5) / 20000);
    BoundReport rep = check_rs_bounds(table, 5, hi, step);
    t.applicable = rep.checked;
    t.passed = rep.checked - static_cast<i64>(rep.violations.size());
    t.inconclusive = static_cast<i64>(rep.inconclusive.size());
    for (const auto& v : rep.violations)
      t.failures.push_back("FAIL check=rs-bounds bound=" + v.bound + " at=" + std::to_string(v.at));
  }
  if (wants("lambda2")) {
    auto& t = add_tally("lambda2");
    BoundReport rep = check_lambda2(429, 1'000'000, 97);
    t.applicable = rep.checked;
    t.passed = rep.checked - static_cast<i64>(rep.violations.size());
    t.inconclusive = static_cast<i64>(rep.inconclusive.size());
    for (const auto& v : rep.violations)
      t.failures.push_back("FAIL check=lambda2 at=" + std::to_string(v.at));
  }

  bool any_failure = false;
  for (const auto& t : tallies) {
    out << "check " << t.name << ": " << t.passed << "/" << t.applicable << " pass";
    if (t.inconclusive > 0) out << " (" << t.inconclusive << " inconclusive)";
    out << "\n";
    for (const auto& f : t.failures) {
      out << f << "\n";
      any_failure = true;
    }
  }
  return any_failure ? kExitCheckFailed : kExitOk;
}

int cmd_goldbach(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  if (cfg.goldbach_max < 4) {
    diag << "usage error: --max must be at least 4\n";
    return kExitUsage;
  }
  if (cfg.with_prop3) {
    if (auto p = usage_problem(cfg); !p.empty()) {
      diag << "usage error: " << p << "\n";
      return kExitUsage;
    }
  }
  i64 limit = cfg.goldbach_max;
  if (cfg.with_prop3) limit = std::max(limit, sieve_limit_for(cfg.n_to, {4, 1}) + 8);
  const PrimeTable table = PrimeTable::sieve_upto(limit);

  const i64 max_even = cfg.goldbach_max - cfg.goldbach_max % 2;
  std::vector<i64> missing = goldbach_gaps_in_range(max_even, table);
  bool failed = false;
  for (i64 x : missing) {
    out << "FAIL check=goldbach x=" << x << "\n";
    failed = true;
  }
  if (missing.empty())
    out << "goldbach: witnesses found for every even x in [4, " << max_even << "]\n";

  if (cfg.with_prop3) {
    i64 bad = 0;
    for (i64 n = cfg.n_from; n <= cfg.n_to; ++n) {
      try {
        check_prop3(n, table);
      } catch (const CounterexampleFound& e) {
        out << "FAIL check=prop3 n=" << n << " x=" << e.at() << "\n";
        failed = true;
        ++bad;
      }
    }
    if (bad == 0)
      out << "prop3: witnesses found for every n in [" << cfg.n_from << ", " << cfg.n_to << "]\n";
  }
  return failed ? kExitCheckFailed : kExitOk;
}

int cmd_progression(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  if (auto p = usage_problem(cfg); !p.empty()) {
    diag << "usage error: " << p << "\n";
    return kExitUsage;
  }
  ProgressionSpec spec;
  try {
    spec = ProgressionSpec::normalized(
        cfg.prog_a, cfg.prog_d, cfg.n_from,
        cfg.window_factor_set ? cfg.window_factor : Rational{0, 1});
  } catch (const std::invalid_argument& e) {
    diag << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  // size the sieve so the k_hi-th progression prime and its window fit;
  // progression primes ≡ a (mod d) are roughly phi(d) times sparser
  i64 phi = 0;
  for (i64 r = 1; r <= spec.d; ++r)
    if (std::gcd(r, spec.d) == 1) ++phi;
  const i64 dense_index = cfg.n_to * std::max<i64>(phi, 1) + 8;
  Rational wf = spec.effective_window_factor();
  PrimeTable table = PrimeTable::sieve_upto(sieve_limit_for(dense_index, wf));

  ProgressionSweep sweep;
  for (int attempt = 0;; ++attempt) {
    try {
      sweep = progression_sweep(spec, cfg.n_from, cfg.n_to, table,
                                cfg.jobs < 1 ? 0 : cfg.jobs);
      break;
    } catch (const ResieveNeeded& e) {
      if (attempt >= 8) throw;
      table = PrimeTable::sieve_upto(std::max(e.needed_limit(), table.limit() * 2));
    }
  }

  auto emit = [&](std::ostream& os) { write_progression_csv(os, sweep); };
  if (cfg.out_path == "-") {
    emit(out);
    return kExitOk;
  }
  std::ofstream file(cfg.out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    diag << "error: cannot open " << cfg.out_path << " for writing\n";
    return kExitInternal;
  }
  emit(file);
  return kExitOk;
}

int cmd_figures(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  if (auto p = usage_problem(cfg); !p.empty()) {
    diag << "usage error: " << p << "\n";
    return kExitUsage;
  }
  if (cfg.out_path == "-") {
    diag << "usage error: figures needs --out <directory>\n";
    return kExitUsage;
  }
  fs::create_directories(cfg.out_path);

  const PrimeTable table = sieve_for_sweep(cfg);
  std::vector<SemigroupSummary> rows;
  if (!sweep_with_cache(cfg, table, rows, out, diag)) return kExitCheckFailed;

  auto write_file = [&](const std::string& name, auto&& writer) -> bool {
    std::ofstream file(fs::path(cfg.out_path) / name, std::ios::binary | std::ios::trunc);
    if (!file) {
      diag << "error: cannot write " << name << "\n";
      return false;
    }
    writer(file);
    return true;
  };

  // figures 1 and 2 share the margin data; 4 plots the gap offset
  if (!write_file("fig1.csv", [&](std::ostream& os) { write_margin_figure(os, rows); }))
    return kExitInternal;
  if (!write_file("fig2.csv", [&](std::ostream& os) { write_margin_figure(os, rows); }))
    return kExitInternal;
  if (!write_file("fig4.csv", [&](std::ostream& os) { write_gap_offset_figure(os, rows); }))
    return kExitInternal;

  std::vector<FigureSeries> series = cfg.fig3_series;
  if (series.empty())
    series = {{1, 3, 1, 60}, {2, 3, 1, 60}, {1, 4, 1, 60}, {3, 4, 1, 60}};
  for (const auto& fsr : series) {
    RunConfig sub = cfg;
    sub.prog_a = fsr.a;
    sub.prog_d = fsr.d;
    sub.n_from = fsr.k_lo;
    sub.n_to = fsr.k_hi;
    ProgressionSpec spec = ProgressionSpec::normalized(fsr.a, fsr.d, fsr.k_lo);
    i64 phi = 0;
    for (i64 r = 1; r <= spec.d; ++r)
      if (std::gcd(r, spec.d) == 1) ++phi;
    PrimeTable prog_table = PrimeTable::sieve_upto(
        sieve_limit_for(fsr.k_hi * std::max<i64>(phi, 1) + 8, spec.effective_window_factor()));
    ProgressionSweep sweep;
    for (int attempt = 0;; ++attempt) {
      try {
        sweep = progression_sweep(spec, fsr.k_lo, fsr.k_hi, prog_table,
                                  cfg.jobs < 1 ? 0 : cfg.jobs);
        break;
      } catch (const ResieveNeeded& e) {
        if (attempt >= 8) throw;
        prog_table = PrimeTable::sieve_upto(std::max(e.needed_limit(), prog_table.limit() * 2));
      }
    }
    std::string name =
        "fig3_a" + std::to_string(spec.a) + "_d" + std::to_string(spec.d) + ".csv";
    if (!write_file(name, [&](std::ostream& os) { write_progression_figure(os, sweep); }))
      return kExitInternal;
  }
  out << "figures written to " << cfg.out_path << "\n";
  return kExitOk;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  if (auto p = usage_problem(cfg); !p.empty()) {
    diag << "usage error: " << p << "\n";
    return kExitUsage;
  }
  const PrimeTable table = sieve_for_sweep(cfg);
  bool all_ok = true;
  for (i64 n = cfg.n_from; n <= cfg.n_to; ++n) {
    SemigroupSummary s = compute_summary(n, table, cfg.window_factor);
    const i64 window = (s.window_factor.num * s.p + s.window_factor.den - 1) / s.window_factor.den;
    auto gens = table.primes_in_span(s.p, window);

    const MembershipMap m = build_membership(s.p, gens, window);
    const AperyTable apery = compute_apery(s.p, gens);
    const std::vector<char> naive = naive_reachability_oracle(gens, window);

    bool ok = apery_frobenius(apery) == s.f && apery_genus(apery) == s.g;
    i64 naive_f = -1;
    i64 naive_g = 0;
    for (i64 x = 1; x < window; ++x) {
      if (!naive[static_cast<std::size_t>(x)]) naive_f = x;
    }
    for (i64 x = 1; x <= naive_f; ++x)
      if (!naive[static_cast<std::size_t>(x)]) ++naive_g;
    ok = ok && naive_f == s.f && naive_g == s.g;
    for (i64 x = 0; ok && x < window; ++x) {
      const bool member = naive[static_cast<std::size_t>(x)] != 0;
      if (m.contains(x) != member || apery_contains(apery, x) != member) ok = false;
    }

    if (!ok) {
      out << "FAIL check=oracle n=" << n << "\n";
      all_ok = false;
    }
  }
  if (all_ok)
    out << "oracle: engine, Apery table and naive reachability agree on [" << cfg.n_from << ", "
        << cfg.n_to << "]\n";
  return all_ok ? kExitOk : kExitCheckFailed;
}

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& diag) {
  switch (cfg.command) {
    case RunConfig::Command::compute: return cmd_compute(cfg, out, diag);
    case RunConfig::Command::verify: return cmd_verify(cfg, out, diag);
    case RunConfig::Command::goldbach: return cmd_goldbach(cfg, out, diag);
    case RunConfig::Command::progression: return cmd_progression(cfg, out, diag);
    case RunConfig::Command::figures: return cmd_figures(cfg, out, diag);
    case RunConfig::Command::oracle: return cmd_oracle(cfg, out, diag);
  }
  return kExitInternal;
}

}  // namespace psg
