#ifndef PSG_CACHE_HPP
#define PSG_CACHE_HPP

#include <iosfwd>
#include <map>
#include <string>

#include "psg/family.hpp"

namespace psg {

// Engine identity baked into every cache row; bump it when the computation
// changes so stale rows are ignored rather than trusted.
extern const char* kEngineVersion;

// JSON-lines store of certified summaries, keyed by (engine version, window
// factor, n). Writes are temp-then-rename; corrupt or foreign lines are
// skipped with a warning and recomputed.
class SummaryCache {
 public:
  SummaryCache(std::string dir, std::string window_factor_key);

  std::string file_path() const;

  // Certified rows matching this cache's key. diag receives one warning per
  // skipped line.
  std::map<i64, SemigroupSummary> load(std::ostream& diag) const;

  // Atomic rewrite with rows in ascending n order.
  void store(const std::map<i64, SemigroupSummary>& rows) const;

 private:
  std::string dir_;
  std::string wf_key_;
};

}  // namespace psg

#endif  // PSG_CACHE_HPP
