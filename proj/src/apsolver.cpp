#include "apword/apsolver.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <utility>

#include "apword/errors.hpp"

namespace apword {
namespace {

// Indices handed to color() stay below this, keeping n + l*d far from
// uint64 overflow for every supported (v, d).
constexpr uint64_t kIndexGuard = uint64_t{1} << 62;
// Largest projected pair-window size, in letters.
constexpr uint64_t kMaxWindowBits = uint64_t{1} << 28;

void check_difference(uint64_t d) {
  if (d == 0) throw domain_error("difference must be >= 1");
  if (d >= (uint64_t{1} << 32)) {
    throw capacity_error("differences of 2^32 and above are not supported");
  }
}

uint32_t ceil_log2(uint64_t x) {
  return x <= 1 ? 0 : static_cast<uint32_t>(std::bit_width(x - 1));
}

// One scanned window: the projected word gamma^s(GH) for a letter pair GH
// whose first occurrence in the fixed point starts at letter position q
// covers absolute indices [q * block_len * 2^s, (q+2) * block_len * 2^s).
struct WindowBest {
  uint64_t max_len = 0;
  size_t pair_idx = 0;
  uint64_t offset = 0;         // start index of the best run within its word
  bool flip_observed = false;  // the run ends at an observed color change
};

void consider_run(WindowBest& best, uint64_t len, size_t pair_idx, uint64_t offset,
                  bool flip) {
  if (len > best.max_len ||
      (len == best.max_len && flip && !best.flip_observed)) {
    best.max_len = len;
    best.pair_idx = pair_idx;
    best.offset = offset;
    best.flip_observed = flip;
  }
}

WindowBest scan_windows(const BlockMorphism& m,
                        const std::vector<std::pair<uint32_t, uint32_t>>& pairs,
                        uint32_t s, uint64_t d) {
  if (s > 40) throw capacity_error("substitution window exceeds the supported size");
  const uint64_t word_bits = (uint64_t{2} * m.block_len) << s;
  if (word_bits > kMaxWindowBits) {
    throw capacity_error("substitution window exceeds the supported size");
  }
  WindowBest best;
  for (size_t pi = 0; pi < pairs.size(); ++pi) {
    const std::vector<uint32_t> letters =
        iterate(m, {pairs[pi].first, pairs[pi].second}, s);
    const BinaryWord w = project(m, letters);
    const uint64_t n = w.size();
    for (uint64_t r = 0; r < d && r < n; ++r) {
      uint64_t run_start = r;
      uint64_t run = 1;
      uint8_t prev = w.at(r);
      for (uint64_t i = r + d; i < n; i += d) {
        const uint8_t c = w.at(i);
        if (c == prev) {
          ++run;
        } else {
          consider_run(best, run, pi, run_start, true);
          run_start = i;
          run = 1;
          prev = c;
        }
      }
      consider_run(best, run, pi, run_start, false);
    }
  }
  return best;
}

// Keeps one representative of each {GH, negation(GH)} orbit; the two windows
// are letterwise negations of each other and carry identical progressions.
std::vector<std::pair<uint32_t, uint32_t>> scan_pair_list(const BlockMorphism& m) {
  std::vector<std::pair<uint32_t, uint32_t>> pairs = subword_pairs(m);
  std::sort(pairs.begin(), pairs.end());
  if (!m.negation_closed) return pairs;
  std::vector<std::pair<uint32_t, uint32_t>> kept;
  for (const auto& [a, b] : pairs) {
    const std::pair<uint32_t, uint32_t> neg{m.negation[a], m.negation[b]};
    // Keep the pair unless its negation partner is also an occurring pair
    // and precedes it; partners carry identical progression structure.
    if (std::pair<uint32_t, uint32_t>{a, b} <= neg ||
        !std::binary_search(pairs.begin(), pairs.end(), neg)) {
      kept.push_back({a, b});
    }
  }
  return kept;
}

// Confirms the window finding at an absolute index of the actual coloring:
// max_len equal colors in steps of d, and the observed change after them.
void verify_witness(const Pattern& v, const BlockMorphism& m,
                    const std::vector<std::pair<uint32_t, uint32_t>>& pairs,
                    const WindowBest& best, uint32_t s, uint64_t d) {
  const auto first_pos = pair_first_positions(m, {pairs[best.pair_idx]});
  const uint64_t q = first_pos.at(pairs[best.pair_idx]);
  const uint64_t base = q * (uint64_t{m.block_len} << s);
  const uint64_t n0 = base + best.offset;
  const SequenceHandle h = SequenceHandle::pattern(v);
  if (n0 >= kIndexGuard || best.max_len * d >= kIndexGuard - n0) {
    throw capacity_error("witness index exceeds the supported range");
  }
  const uint8_t c0 = h.color(n0);
  for (uint64_t l = 1; l < best.max_len; ++l) {
    if (h.color(n0 + l * d) != c0) {
      throw internal_error("window witness disagrees with direct evaluation");
    }
  }
  if (best.flip_observed && h.color(n0 + best.max_len * d) == c0) {
    throw internal_error("window witness flip disagrees with direct evaluation");
  }
}

uint64_t cap_for_pattern(const Pattern& v, uint64_t d) {
  return ap_cap(SequenceHandle::pattern(v), d);
}

// Scans at window exponent s and certifies the maximum when any longer
// progression (max+1 elements, span at most (max+1)*d) would fit inside a
// single level-s block span of block_len * 2^s letters and hence inside
// some scanned pair window. In-window runs are genuine runs of the
// coloring, so the scanned maximum never overshoots; exceeding the length
// bound therefore means the bound itself is violated.
struct CertifiedScan {
  bool certified;
  uint64_t value;
};

CertifiedScan certified_window(const Pattern& v, const BlockMorphism& m,
                               const std::vector<std::pair<uint32_t, uint32_t>>& pairs,
                               uint32_t s, uint64_t d) {
  const WindowBest best = scan_windows(m, pairs, s, d);
  if (best.max_len > cap_for_pattern(v, d)) {
    throw internal_error("progression exceeds the length bound for " + v.str());
  }
  const uint64_t block_span = uint64_t{m.block_len} << s;
  if ((best.max_len + 1) * d > block_span) return {false, best.max_len};
  verify_witness(v, m, pairs, best, s, d);
  return {true, best.max_len};
}

// A_t(2^k - 1) in closed form: 2^k + 4 for even k, 2^k for odd k. The
// standard window prescription excludes these differences, so the value is
// cross-checked against a window enlarged by one doubling.
uint64_t thue_morse_all_ones(const Pattern& v, uint64_t d) {
  const DigitStats st = digit_stats(d);
  const uint64_t expected =
      (st.ell % 2 == 0) ? (uint64_t{1} << st.ell) + 4 : uint64_t{1} << st.ell;
  const BlockMorphism m = derive(v);
  const auto pairs = scan_pair_list(m);
  const uint32_t s = 2 * st.ell - st.nu2 + 1;
  const CertifiedScan scan = certified_window(v, m, pairs, s, d);
  if (!scan.certified || scan.value != expected) {
    throw internal_error("enlarged window disagrees with the closed form at d = " +
                         std::to_string(d));
  }
  return expected;
}

bool is_all_ones_difference(uint64_t d) {
  return (d & (d + 1)) == 0;  // d = 2^k - 1, k >= 1 (d >= 1 checked earlier)
}

uint64_t global_via_window(const Pattern& v, uint64_t d, const BlockMorphism& m,
                           const std::vector<std::pair<uint32_t, uint32_t>>& pairs) {
  // Growing by 2 quadruples the window, so the failed levels cost at most
  // a third of the certifying one. Terminates: once the block span reaches
  // (cap+1)*d, a result of at most cap certifies, and exceeding cap raises
  // internal_error inside the scan.
  for (uint32_t s = 2;; s += 2) {
    const CertifiedScan scan = certified_window(v, m, pairs, s, d);
    if (scan.certified) return scan.value;
  }
}

uint64_t global_staged_impl(const Pattern& v, uint64_t d, const StageThresholds& st,
                            const BlockMorphism& m,
                            const std::vector<std::pair<uint32_t, uint32_t>>& pairs) {
  const uint64_t cap = cap_for_pattern(v, d);
  const uint64_t third = v.length() == 1 ? d + 5 : d;
  std::vector<uint64_t> thresholds;
  for (uint64_t f : {st.first, st.second, third, cap + 1}) {
    if (f >= 2 && (thresholds.empty() || f > thresholds.back())) {
      thresholds.push_back(f);
    }
  }
  uint64_t f = 0;
  for (size_t k = 0;; ++k) {
    if (k < thresholds.size()) {
      f = thresholds[k];
    } else if (v.contains_one()) {
      // The last threshold exceeds the proven cap, so escalation past it
      // means the bound was violated.
      throw internal_error("staged windows failed to certify for " + v.str());
    }
    if (std::bit_width(f) + std::bit_width(d) > 62) {
      throw capacity_error("substitution window exceeds the supported size");
    }
    const uint32_t s = static_cast<uint32_t>(
        std::max<int64_t>(1, static_cast<int64_t>(ceil_log2(f * d)) -
                                 int64_t{v.length()} + 1));
    const WindowBest best = scan_windows(m, pairs, s, d);
    if (best.max_len < f) {
      if (best.max_len > cap) {
        throw internal_error("progression exceeds the length bound for " + v.str());
      }
      verify_witness(v, m, pairs, best, s, d);
      return best.max_len;
    }
    if (k >= thresholds.size()) f = best.max_len + 2;  // all-zeros patterns only
  }
}

}  // namespace

uint64_t ap_cap(const SequenceHandle& h, uint64_t d) {
  check_difference(d);
  const DigitStats st = digit_stats(d);
  if (h.is_odd_subsequence()) {
    // A run of difference d in the odd subsequence is a run of difference 2d
    // in the base coloring, so the |v| = 2 bound applies at 2d.
    return uint64_t{1} << (st.ell - st.nu2 + 1);
  }
  const uint32_t len = h.base_pattern().length();
  if (len >= 2) return uint64_t{1} << (st.ell + len - st.nu2 - 1);
  return (uint64_t{1} << st.ell) + 4;
}

uint64_t ap_from(const SequenceHandle& h, uint64_t n, uint64_t d) {
  const uint64_t cap = ap_cap(h, d);  // validates d
  if (n >= kIndexGuard || cap + 1 > (kIndexGuard - n) / d) {
    throw capacity_error("progression indices exceed the supported range");
  }
  const uint8_t c0 = h.color(n);
  for (uint64_t l = 1; l <= cap; ++l) {
    if (h.color(n + l * d) != c0) return l;
  }
  throw internal_error("no color change within the length bound from n = " +
                       std::to_string(n) + ", d = " + std::to_string(d));
}

uint64_t max_ap_in_word(const BinaryWord& w, uint64_t d) {
  if (d == 0) throw domain_error("difference must be >= 1");
  const uint64_t n = w.size();
  if (n == 0) return 0;
  uint64_t best = 1;
  for (uint64_t r = 0; r < d && r < n; ++r) {
    uint64_t run = 1;
    uint8_t prev = w.at(r);
    for (uint64_t i = r + d; i < n; i += d) {
      const uint8_t c = w.at(i);
      run = (c == prev) ? run + 1 : 1;
      prev = c;
      best = std::max(best, run);
    }
  }
  return best;
}

uint64_t ap_global(const Pattern& v, uint64_t d) {
  check_difference(d);
  if (v.length() == 1 && v.contains_one() && is_all_ones_difference(d)) {
    return thue_morse_all_ones(v, d);
  }
  const BlockMorphism m = derive(v);
  const auto pairs = scan_pair_list(m);
  return global_via_window(v, d, m, pairs);
}

uint64_t ap_global_staged(const Pattern& v, uint64_t d) {
  return ap_global_staged(v, d, StageThresholds{});
}

uint64_t ap_global_staged(const Pattern& v, uint64_t d, const StageThresholds& st) {
  check_difference(d);
  if (st.first < 2 || st.second <= st.first) {
    throw domain_error("stage thresholds must be increasing and >= 2");
  }
  if (v.length() == 1 && v.contains_one() && is_all_ones_difference(d)) {
    return thue_morse_all_ones(v, d);
  }
  const BlockMorphism m = derive(v);
  const auto pairs = scan_pair_list(m);
  return global_staged_impl(v, d, st, m, pairs);
}

uint64_t reduce_even(const SequenceHandle& h, uint64_t d) {
  check_difference(d);
  const std::string label = h.is_odd_subsequence() ? "s" : h.base_pattern().str();
  if (h.is_odd_subsequence() || (label != "1" && label != "11" && label != "0")) {
    throw domain_error("even-difference reduction is not established for " + label);
  }
  return d >> digit_stats(d).nu2;
}

namespace {

// Shared engine: per-residue run scanning over a directly evaluated color
// prefix long enough that every run starting below n_max meets its color
// change (guaranteed by the length cap).
uint64_t oracle_scan_impl(const Pattern& v, uint64_t d, uint64_t n_max,
                          bool use_parallel) {
  check_difference(d);
  if (n_max == 0) return 0;
  const SequenceHandle h = SequenceHandle::pattern(v);
  const uint64_t cap = ap_cap(h, d);
  if (n_max >= kIndexGuard || cap + 2 > (kIndexGuard - n_max) / d) {
    throw capacity_error("scan range exceeds the supported range");
  }
  const uint64_t len = n_max + (cap + 1) * d + 1;
  std::vector<uint8_t> colors(len);
  if (use_parallel) {
#pragma omp parallel for schedule(static)
    for (int64_t n = 0; n < static_cast<int64_t>(len); ++n) {
      colors[static_cast<uint64_t>(n)] = v.parity(static_cast<uint64_t>(n));
    }
  } else {
    for (uint64_t n = 0; n < len; ++n) colors[n] = v.parity(n);
  }

  uint64_t best = 0;
  const int64_t d_signed = static_cast<int64_t>(std::min(d, n_max));
#pragma omp parallel for schedule(dynamic) reduction(max : best) if (use_parallel)
  for (int64_t r = 0; r < d_signed; ++r) {
    uint64_t run_start = static_cast<uint64_t>(r);
    uint64_t run = 1;
    uint8_t prev = colors[run_start];
    uint64_t local = 0;
    for (uint64_t i = run_start + d; i < len; i += d) {
      if (colors[i] == prev) {
        ++run;
        continue;
      }
      if (run_start < n_max) local = std::max(local, run);
      run_start = i;
      run = 1;
      prev = colors[i];
    }
    if (run_start < n_max) {
      // The cap guarantees every run from below n_max ends inside the prefix.
      throw internal_error("run extends past the scan prefix; length bound violated");
    }
    best = std::max(best, local);
  }
  return best;
}

}  // namespace

uint64_t oracle_scan(const Pattern& v, uint64_t d, uint64_t n_max) {
  return oracle_scan_impl(v, d, n_max, /*use_parallel=*/true);
}

uint64_t oracle_scan_serial(const Pattern& v, uint64_t d, uint64_t n_max) {
  return oracle_scan_impl(v, d, n_max, /*use_parallel=*/false);
}

namespace {

uint64_t table_cell(const Pattern& v, const SequenceHandle& h, const BlockMorphism* m,
                    const std::vector<std::pair<uint32_t, uint32_t>>* pairs,
                    bool global, uint64_t d) {
  uint64_t value;
  if (!global) {
    value = ap_from(h, 0, d);
  } else if (v.length() == 1 && v.contains_one() && is_all_ones_difference(d)) {
    value = thue_morse_all_ones(v, d);
  } else {
    value = global_staged_impl(v, d, StageThresholds{}, *m, *pairs);
  }
  if (value < 1 || value > ap_cap(h, d)) {
    throw internal_error("table value violates the length bound at d = " +
                         std::to_string(d));
  }
  return value;
}

ApTable build_table_impl(const std::vector<Pattern>& pats, bool global, uint64_t d_max,
                         int threads, bool use_parallel) {
  if (d_max == 0) throw domain_error("d_max must be >= 1");
  check_difference(d_max);
  if (pats.empty()) throw domain_error("at least one pattern is required");
  ApTable t;
  t.global = global;
  for (const Pattern& v : pats) t.patterns.push_back(v.str());
  t.values.assign(pats.size(), std::vector<uint64_t>(d_max, 0));
  for (size_t p = 0; p < pats.size(); ++p) {
    const Pattern& v = pats[p];
    const SequenceHandle h = SequenceHandle::pattern(v);
    BlockMorphism m{v};
    std::vector<std::pair<uint32_t, uint32_t>> pairs;
    if (global) {
      m = derive(v);
      pairs = scan_pair_list(m);
    }
    std::vector<uint64_t>& row = t.values[p];
    if (use_parallel) {
      if (threads > 0) omp_set_num_threads(threads);
#pragma omp parallel for schedule(dynamic)
      for (int64_t d = 1; d <= static_cast<int64_t>(d_max); ++d) {
        row[static_cast<uint64_t>(d) - 1] =
            table_cell(v, h, &m, &pairs, global, static_cast<uint64_t>(d));
      }
    } else {
      for (uint64_t d = 1; d <= d_max; ++d) {
        row[d - 1] = table_cell(v, h, &m, &pairs, global, d);
      }
    }
  }
  return t;
}

}  // namespace

ApTable build_table(const std::vector<Pattern>& pats, bool global, uint64_t d_max,
                    int threads) {
  return build_table_impl(pats, global, d_max, threads, true);
}

ApTable build_table_serial(const std::vector<Pattern>& pats, bool global,
                           uint64_t d_max) {
  return build_table_impl(pats, global, d_max, 0, false);
}

std::string table_to_csv(const ApTable& t) {
  std::string out;
  for (size_t p = 0; p < t.patterns.size(); ++p) {
    if (p > 0) out += ',';
    out += t.patterns[p];
  }
  out += '\n';
  const uint64_t d_max = t.values.empty() ? 0 : t.values.front().size();
  for (uint64_t d = 1; d <= d_max; ++d) {
    for (size_t p = 0; p < t.values.size(); ++p) {
      if (p > 0) out += ',';
      out += std::to_string(t.values[p][d - 1]);
    }
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  cells.push_back(cur);
  return cells;
}

}  // namespace

ApTable table_from_csv(const std::string& text) {
  ApTable t;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.empty()) {
    throw domain_error("table text lacks a header row");
  }
  t.patterns = split_csv_line(line);
  t.values.assign(t.patterns.size(), {});
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> cells = split_csv_line(line);
    if (cells.size() != t.patterns.size()) {
      throw domain_error("table row width disagrees with the header");
    }
    for (size_t p = 0; p < cells.size(); ++p) {
      uint64_t value = 0;
      try {
        size_t used = 0;
        value = std::stoull(cells[p], &used);
        if (used != cells[p].size()) throw domain_error("malformed table value");
      } catch (const domain_error&) {
        throw;
      } catch (const std::exception&) {
        throw domain_error("malformed table value");
      }
      t.values[p].push_back(value);
    }
  }
  return t;
}

}  // namespace apword
