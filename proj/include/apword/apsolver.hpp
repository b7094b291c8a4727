// Lengths of monochromatic arithmetic progressions in the colorings g_v:
// A(n,d) by direct search from a start index, exact global suprema A_v(d)
// via substitution-window scanning (with staged threshold escalation), the
// brute-force scan oracle used for cross-validation, even-difference
// reductions, and table generation with bit-exact CSV serialization.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apword/morphism.hpp"
#include "apword/patseq.hpp"

namespace apword {

// Upper bound on the length of any monochromatic progression of difference d
// in the handle's coloring: 2^{ell(d)+|v|-nu2(d)-1} for |v| >= 2,
// 2^{ell(d)} + 4 for the two length-1 patterns, and the |v|=2 bound applied
// to difference 2d for the odd-indexed subsequence. The bound is proven for
// patterns containing a 1 and empirical for the all-zeros pattern; searches
// never trust it silently (exceeding it raises internal_error).
uint64_t ap_cap(const SequenceHandle& h, uint64_t d);

// Least l >= 1 with color(n + l d) != color(n).
uint64_t ap_from(const SequenceHandle& h, uint64_t n, uint64_t d);

// Longest monochromatic progression of difference d inside a finite word,
// counted in elements: max L such that w_i = w_{i+d} = ... = w_{i+(L-1)d}
// for some i. Empty word gives 0.
uint64_t max_ap_in_word(const BinaryWord& w, uint64_t d);

// Escalation thresholds for the staged global solver; the third stage is
// always d (d+5 for length-1 patterns) and the final stage is the proven
// length cap, so results do not depend on these defaults.
struct StageThresholds {
  uint64_t first = 20;
  uint64_t second = 35;
};

// Exact A_v(d) = sup_n A(n,d) via the substitution window: the maximum
// progression length over the projected words gamma_v^s(GH) for all adjacent
// letter pairs GH of the fixed point, starting at a small window exponent
// and enlarging until the result self-certifies:
// (max+1)*d must fit inside one level-s block span, so any longer
// progression would have been visible in some scanned window. Each result's
// witness is re-verified by direct evaluation at an absolute index.
uint64_t ap_global(const Pattern& v, uint64_t d);

// Same value as ap_global, computed with staged windows: thresholds 20, 35,
// d (d+5 for length-1 patterns), then the length cap; a stage's result is
// accepted iff it is below the stage threshold.
uint64_t ap_global_staged(const Pattern& v, uint64_t d);
uint64_t ap_global_staged(const Pattern& v, uint64_t d, const StageThresholds& st);

// The odd part d / 2^{nu2(d)}, licensing A(d) = A(odd part). Supported
// exactly for the sequences where that equality is established: t (pattern
// 1), r (pattern 11), and pattern 0; anything else is a domain error.
uint64_t reduce_even(const SequenceHandle& h, uint64_t d);

// max over 0 <= n < n_max of ap_from(pattern v, n, d), computed from
// definition-level color evaluations only (no substitution machinery), so it
// can serve as an independent check of ap_global. oracle_scan runs the
// per-residue scan with OpenMP; oracle_scan_serial is the plain reference
// implementation of the same maximum.
uint64_t oracle_scan(const Pattern& v, uint64_t d, uint64_t n_max);
uint64_t oracle_scan_serial(const Pattern& v, uint64_t d, uint64_t n_max);

// A table of values A_v(0,d) (from_zero) or A_v(d) (global) for d = 1..d_max
// over a list of patterns.
struct ApTable {
  std::vector<std::string> patterns;           // header cells, raw pattern strings
  bool global = false;                         // false: from-zero values
  std::vector<std::vector<uint64_t>> values;   // values[p][d-1]

  friend bool operator==(const ApTable&, const ApTable&) = default;
};

// Builds the table; global tables use the staged solver. threads <= 0 uses
// the OpenMP default. Every stored value is checked against ap_cap.
ApTable build_table(const std::vector<Pattern>& pats, bool global, uint64_t d_max,
                    int threads);
// Reference implementation without OpenMP; identical output.
ApTable build_table_serial(const std::vector<Pattern>& pats, bool global, uint64_t d_max);

// CSV: header row of pattern strings, then one row per difference,
// comma separated, LF line endings, no trailing separator.
std::string table_to_csv(const ApTable& t);
ApTable table_from_csv(const std::string& text);

}  // namespace apword
