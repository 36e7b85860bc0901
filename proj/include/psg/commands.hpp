#ifndef PSG_COMMANDS_HPP
#define PSG_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "psg/rational.hpp"

namespace psg {

struct FigureSeries {
  i64 a = 1, d = 3;
  i64 k_lo = 1, k_hi = 60;
};

struct RunConfig {
  enum class Command { compute, verify, goldbach, progression, figures, oracle };
  enum class Format { csv, json };

  Command command = Command::compute;
  i64 n_from = 1;
  i64 n_to = 1;
  Rational window_factor{9, 2};
  bool window_factor_set = false;  // true when given on the command line
  int jobs = 0;                    // 0 = hardware concurrency
  std::string out_path = "-";      // "-" = stdout; a directory for figures
  Format format = Format::csv;
  std::vector<std::string> checks;  // empty = all, for verify
  std::string cache_dir;            // empty = no cache
  i64 goldbach_max = 1'000'000;
  bool with_prop3 = false;
  i64 prog_a = 1;
  i64 prog_d = 2;
  std::vector<FigureSeries> fig3_series;  // empty = built-in default set
};

// Exit codes: 0 success, 1 check failure or counterexample, 2 usage error,
// 3 internal or computation failure.
constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

extern const std::vector<std::string> kAllChecks;

int cmd_compute(const RunConfig&, std::ostream& out, std::ostream& diag);
int cmd_verify(const RunConfig&, std::ostream& out, std::ostream& diag);
int cmd_goldbach(const RunConfig&, std::ostream& out, std::ostream& diag);
int cmd_progression(const RunConfig&, std::ostream& out, std::ostream& diag);
int cmd_figures(const RunConfig&, std::ostream& out, std::ostream& diag);
int cmd_oracle(const RunConfig&, std::ostream& out, std::ostream& diag);

int run_command(const RunConfig&, std::ostream& out, std::ostream& diag);

}  // namespace psg

#endif  // PSG_COMMANDS_HPP
