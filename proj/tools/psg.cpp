// psg: invariants of prime-generated numerical semigroups, plus the
// verification sweeps and figure data around them.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "psg/commands.hpp"
#include "psg/errors.hpp"

namespace {

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using psg::RunConfig;
  RunConfig cfg;
  std::string window_factor = "4.5";
  std::string format = "csv";
  std::string checks;
  std::vector<std::string> series;

  if (const char* env = std::getenv("PSG_CACHE_DIR")) cfg.cache_dir = env;

  CLI::App app{"prime-generated numerical semigroups: exact invariants and checks"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool with_range) {
    if (with_range) {
      sub->add_option("--from", cfg.n_from, "first index");
      sub->add_option("--to", cfg.n_to, "last index");
    }
    sub->add_option("--jobs", cfg.jobs, "worker threads (default: hardware)");
    sub->add_option("--window-factor", window_factor, "initial window as a multiple of p");
    sub->add_option("--cache-dir", cfg.cache_dir, "summary cache directory (env PSG_CACHE_DIR)");
  };

  CLI::App* compute = app.add_subcommand("compute", "sweep and write the invariant table");
  add_common(compute, true);
  compute->add_option("--out", cfg.out_path, "output file (default: stdout)");
  compute->add_option("--format", format, "csv or json");

  CLI::App* verify = app.add_subcommand("verify", "run inequality and conjecture checks");
  add_common(verify, true);
  verify->add_option("--checks", checks, "comma-separated subset (default: all)");

  CLI::App* goldbach = app.add_subcommand("goldbach", "two-prime witness sweep");
  goldbach->add_option("--max", cfg.goldbach_max, "check every even x up to this bound");
  goldbach->add_flag("--prop3", cfg.with_prop3, "also verify 4p_n = p+q with p >= p_{n+1}");
  add_common(goldbach, true);

  CLI::App* progression = app.add_subcommand("progression", "restricted-progression family sweep");
  progression->add_option("--a", cfg.prog_a, "residue")->required();
  progression->add_option("--d", cfg.prog_d, "modulus")->required();
  add_common(progression, true);
  progression->add_option("--out", cfg.out_path, "output file (default: stdout)");

  CLI::App* figures = app.add_subcommand("figures", "emit plot-ready figure data");
  add_common(figures, true);
  figures->add_option("--out", cfg.out_path, "output directory")->required();
  figures->add_option("--series", series,
                      "progression series a:d:k_lo:k_hi (repeatable; default built-in set)");

  CLI::App* oracle = app.add_subcommand("oracle", "triple agreement audit: engine/Apery/naive");
  add_common(oracle, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : psg::kExitUsage;
  }

  try {
    cfg.window_factor = psg::parse_decimal(window_factor);
    cfg.window_factor_set = !window_factor.empty() && window_factor != "4.5";
    cfg.checks = split_commas(checks);
    for (const auto& s : series) {
      auto parts = split_commas(s);
      if (parts.size() == 1) parts = [&] {  // accept a:d:k_lo:k_hi
        std::vector<std::string> p;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ':')) p.push_back(item);
        return p;
      }();
      if (parts.size() != 4) {
        std::cerr << "usage error: --series wants a:d:k_lo:k_hi\n";
        return psg::kExitUsage;
      }
      cfg.fig3_series.push_back({std::stoll(parts[0]), std::stoll(parts[1]),
                                 std::stoll(parts[2]), std::stoll(parts[3])});
    }

    if (compute->parsed()) cfg.command = RunConfig::Command::compute;
    else if (verify->parsed()) cfg.command = RunConfig::Command::verify;
    else if (goldbach->parsed()) cfg.command = RunConfig::Command::goldbach;
    else if (progression->parsed()) cfg.command = RunConfig::Command::progression;
    else if (figures->parsed()) cfg.command = RunConfig::Command::figures;
    else cfg.command = RunConfig::Command::oracle;

    if (format == "json") cfg.format = RunConfig::Format::json;
    else if (format != "csv") {
      std::cerr << "usage error: --format must be csv or json\n";
      return psg::kExitUsage;
    }

    return psg::run_command(cfg, std::cout, std::cerr);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return psg::kExitUsage;
  } catch (const psg::CounterexampleFound& e) {
    std::cerr << "counterexample: " << e.what() << "\n";
    return psg::kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return psg::kExitInternal;
  }
}
