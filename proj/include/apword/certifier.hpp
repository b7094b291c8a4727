// Symbolic certification that A(0,d) < d/2 for the pattern-11 coloring over
// whole families of differences at once: differences are grouped into
// prefix/suffix classes, each class is either certified by an admissible
// exponent pair (i,j), split into subclasses, or its single member is
// checked numerically and recorded as an exception. Certificates are
// self-contained and replayable.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "apword/binwords.hpp"

namespace apword {

// The class D(p,s): all d whose binary expansion starts with p and ends
// with s. p starts with 1 (expansions have no leading zeros) and s ends
// with 1 (all class members are odd).
struct ClassKey {
  BinaryWord p;
  BinaryWord s;

  friend bool operator==(const ClassKey&, const ClassKey&) = default;
  friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
};

// A proof object for one class: the pair (i,j) together with the derived
// words sigma (the length-|s| suffix of (j[s]_2)_2, leading zeros kept) and
// gamma (the sum p + sigma 0^{|p|-i}). All certificate conditions can be
// re-checked from these fields alone.
struct AdmissibleCertificate {
  ClassKey key;
  uint64_t i = 0;
  uint64_t j = 0;
  BinaryWord sigma;
  BinaryWord gamma;

  friend bool operator==(const AdmissibleCertificate&,
                         const AdmissibleCertificate&) = default;
};

// First failed admissibility condition, in evaluation order.
enum class AdmissibleReject {
  none,           // admissible
  preconditions,  // j even, i out of range, or |p| > |s|
  condition_a,    // j too large relative to i and p
  overflow,       // p + sigma 0^{|p|-i} does not fit in |s|+|p|-i digits
  condition_c,    // carry reaches sigma's leftmost digit
  condition_b,    // |p|_11 + |sigma|_11 + |gamma|_11 is even
};

struct AdmissibleCheck {
  AdmissibleReject reject = AdmissibleReject::none;
  AdmissibleCertificate cert;  // populated iff reject == none

  bool ok() const { return reject == AdmissibleReject::none; }
};

// Evaluates the admissibility conditions for (i,j) on the class (p,s):
// (a) ell(j) < i-1, or ell(j) = i-1 and j 2^{|p|} < [p]_2 2^{ell(j)};
// (b) |p|_11 + |sigma|_11 + |gamma|_11 is odd;
// (c) the addition forming gamma carries nothing into sigma's leftmost
//     digit. Rejections report the first failed condition.
AdmissibleCheck check_admissible(const ClassKey& key, uint64_t i, uint64_t j);

enum class BranchVariant {
  // Split into (p0,s), (p1,s) while |p| < |s|, else into the four
  // (pa, bs) extensions; the default.
  prefix_only_when_shorter,
  // Always split into the four (pa, bs) extensions.
  quad,
};

struct RunConfig {
  std::vector<ClassKey> skip;          // classes excluded on pop, exact match
  uint64_t max_iter = 12;
  std::optional<uint64_t> max_s2j;     // cap on s_2(j); nullopt = unbounded
  BranchVariant branch = BranchVariant::prefix_only_when_shorter;
};

struct RunResult {
  std::vector<AdmissibleCertificate> certificates;  // discovery order
  std::set<uint64_t> exceptions;                    // single d with 2 A(0,d) >= d
  std::vector<ClassKey> unresolved;                 // classes still open at cutoff
  uint64_t iterations = 0;                          // iterations executed
  std::map<uint64_t, uint64_t> step1_values;        // d -> A(0,d), evaluated once
};

// Breadth-first certification run from the input class. Each iteration pops
// the frontier in order: skipped classes are dropped; when p is a prefix of
// s the single difference [s]_2 is evaluated numerically (once per run) and
// recorded as an exception if 2 A(0,d) >= d; candidate pairs are tried with
// i ascending, then j odd ascending (s_2(j) <= max_s2j) below the condition
// (a) cutoff, accepting the first admissible hit; classes without a hit are
// split per the branch variant. With max_iter = 0 nothing runs and the
// input itself is unresolved. Classes that failed their search during the
// final executed iteration are reported unresolved when the frontier is
// still nonempty afterwards.
RunResult run_certifier(const ClassKey& input, const RunConfig& cfg);

// The standard exclusion list for the full run from (1,1): the two classes
// handled separately plus the sixteen (1u, 11111) classes for u in {0,1}^4.
std::vector<ClassKey> main_skip_set();

// The members of D(p,s) with ell(d) <= ell_max, ascending, at most
// count_max of them.
std::vector<uint64_t> class_members(const ClassKey& key, uint32_t ell_max,
                                    size_t count_max);

struct ReplayResult {
  bool ok = false;
  std::string reason;  // failing condition when !ok

  explicit operator bool() const { return ok; }
};

// Re-verifies a stored certificate without re-running any search: condition
// (b) directly on the stored words, then structural consistency (sigma and
// gamma recomputed from p, s, i, j), then conditions (a) and (c), and
// finally a numeric spot check on the 50 smallest class members with
// ell(d) <= 24: writing f = 2^{ell(d)-i} j + 1, at least one of the colors
// at d, jd, fd is 1. Members with 2f >= d are skipped: condition (a)
// rules this out except for the full-overlap member d = [s]_2 of a p = s
// class, which the certification run verifies directly instead.
ReplayResult replay(const AdmissibleCertificate& cert);

struct CoverageReport {
  uint64_t class_covered = 0;     // matched by a certified class, A verified
  uint64_t directly_verified = 0; // unmatched but 2 A(0,d) < d holds
  std::vector<uint64_t> gaps;     // neither applies

  bool ok() const { return gaps.empty(); }
};

// Checks that every odd d <= d_max outside the exceptions and the skip
// classes satisfies 2 A(0,d) < d, with the class certificates accounting
// for (nearly) all of them. Skip classes match by expansion prefix/suffix
// here, mirroring how certified classes match.
CoverageReport coverage_check(const std::vector<AdmissibleCertificate>& certs,
                              const std::set<uint64_t>& exceptions,
                              const std::vector<ClassKey>& skip, uint64_t d_max);

// Line-oriented serialization: one `p=.. s=.. i=.. j=.. sigma=.. gamma=..`
// record per certificate, then the exceptional differences under
// `[exceptions]` and the open classes under `[unresolved]` (`p=.. s=..`
// lines). ASCII, LF line endings. Parsing restores certificates,
// exceptions, and unresolved classes (iteration count and step-1 values are
// not serialized).
std::string certificates_to_text(const RunResult& result);
RunResult certificates_from_text(const std::string& text);

}  // namespace apword
