#ifndef PSG_IO_HPP
#define PSG_IO_HPP

#include <iosfwd>
#include <span>
#include <string>

#include "psg/family.hpp"
#include "psg/progressions.hpp"

namespace psg {

// Canonical table file: header + one row per n, comma separated, LF endings.
// Rationals appear as numerator/denominator integer column pairs so nothing
// is ever rounded in the canonical output.
extern const char* kSummaryCsvHeader;

void write_summary_csv(std::ostream&, std::span<const SemigroupSummary>);
void write_summary_json(std::ostream&, std::span<const SemigroupSummary>);

// Figure data: two-column CSVs.
//   margins:      (p_n, 4 p_n - f_{n+1})
//   gap offsets:  (n, f_n - 3 p_n)
//   progressions: (p, f) per spec
void write_margin_figure(std::ostream&, std::span<const SemigroupSummary>);
void write_gap_offset_figure(std::ostream&, std::span<const SemigroupSummary>);
void write_progression_figure(std::ostream&, const ProgressionSweep&);

void write_progression_csv(std::ostream&, const ProgressionSweep&);

}  // namespace psg

#endif  // PSG_IO_HPP
