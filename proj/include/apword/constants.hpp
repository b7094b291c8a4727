#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apword/binwords.hpp"
#include "apword/patseq.hpp"

namespace apword {

// Exact dyadic rational num / 2^log2_den, always kept in lowest terms:
// num is odd unless the value is an integer (log2_den == 0), and zero is
// stored as 0/2^0. All arithmetic is exact; overflowing int64 range
// raises capacity_error.
struct Dyadic {
  int64_t num = 0;
  uint32_t log2_den = 0;

  friend bool operator==(const Dyadic&, const Dyadic&) = default;

  bool is_integer() const { return log2_den == 0; }
};

// Builds the reduced form of num / 2^log2_den.
Dyadic dyadic(int64_t num, uint32_t log2_den);
Dyadic operator+(Dyadic a, Dyadic b);
Dyadic operator-(Dyadic a, Dyadic b);
Dyadic operator*(Dyadic a, Dyadic b);
bool operator<(Dyadic a, Dyadic b);
bool operator<=(Dyadic a, Dyadic b);

// Renders "5" for integers and "3/8" otherwise.
std::string to_string(const Dyadic& q);

// The linear-growth data attached to a pattern v with |v| >= 2 containing
// a 1: the lexicographically minimal word pair (x_min, y_min) of length
// |v|-1 satisfying the parity condition
//   |0^i x|_v + |y x|_v + |y 0^j|_v odd,
// where v = 0^i u 0^j with u starting and ending in 1 and |w|_v counts
// occurrences of v inside the word w, together with the derived slope and
// intercept
//   C = [x_min]_2 / 2^{j+|v|-1},   B = [y_min]_2 - 2^j C.
// Along d_k = 2^{l+j} (2^k + 1) the progression length from zero equals
// (C / 2^l) d_k + B for all k >= 2|v|-2.
struct LimitConstants {
  Pattern v;
  BinaryWord x_min;  // length |v|-1
  BinaryWord y_min;  // length |v|-1
  Dyadic C;          // slope, 0 < C < 1
  Dyadic B;          // intercept, positive
};

// All patterns of length 2..max_len containing a 1, ordered by length and
// then by numeric value of the (leading-zero padded) word.
std::vector<Pattern> eligible_patterns(uint32_t max_len);

// Exhaustively scans pairs (x, y) in {0,1}^{|v|-1} x {0,1}^{|v|-1} in
// lexicographic order (x major, then y) and returns the first pair with
// the parity condition above, plus the derived C and B. Rejects patterns
// outside the eligible set (length < 2 or all zeros) with domain_error;
// an exhausted scan raises internal_error (a solution always exists).
LimitConstants solve_congruence(const Pattern& v);

// Direct formula for patterns ending in 1: write v = ps with s the
// lexicographically minimal proper nonempty suffix of v; then
//   x_min = s 0^{|p|-1},
//   y_min = 0^{|s|-1} p   (or 0^{|v|-2} 1 when p = 0),
//   C = [s]_2 / 2^{|s|},  B = max{[p]_2, 1} - C.
// Rejects patterns not ending in 1 or shorter than 2 with domain_error.
LimitConstants closed_form(const Pattern& v);

// Whether the computed slope satisfies C <= 1/2 when v ends in 1 and
// C <= 2^{-2j} when v ends in j >= 1 zeros. (It always should.)
bool check_bound(const Pattern& v);

struct DkRow {
  uint32_t k = 0;
  uint64_t d = 0;        // 2^{l+j} (2^k + 1)
  bool applicable = false;  // k >= 2|v|-2, the range the formula covers
  uint64_t expected = 0;    // (C / 2^l) d + B, only when applicable
  uint64_t actual = 0;      // progression length from zero, computed
  bool pass = false;
};

struct DkReport {
  Pattern v;
  uint32_t l = 0;
  std::vector<DkRow> rows;  // one row per k = 0..k_max

  // True when every applicable row matches (an integral expected value
  // equal to the computed progression length).
  bool all_pass() const;
};

// Evaluates the linear formula along d_k = 2^{l+j} (2^k + 1) for
// k = 0..k_max: rows with k >= 2|v|-2 compare the exact rational
// (C / 2^l) d_k + B (which must come out an integer) against the directly
// computed progression length from zero; smaller k are reported
// not-applicable and left unevaluated.
DkReport check_dk_formula(const Pattern& v, uint32_t l, uint32_t k_max);

}  // namespace apword
