#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace apword {

// Outcome of one acceptance check: pass/fail plus a short human-readable
// account (counts on success, the first mismatches on failure).
struct CheckResult {
  bool pass = false;
  std::string detail;
};

struct AcceptanceCheck {
  int number;        // 1-based position in the published order
  const char* name;  // what the check verifies
  CheckResult (*run)();
};

// The thirteen acceptance checks in their published order.
const std::vector<AcceptanceCheck>& acceptance_checks();

// 1: from-zero progression lengths of the pair pattern follow the
//    trichotomy (equality cases at 2^k-1 / 39 and 2^k+1, otherwise < d/2)
//    for every odd 3 <= d <= 2^16.
CheckResult check_pair_from_zero_trichotomy();
// 2: from-zero progression lengths of the single-1 pattern follow the
//    five-case characterization (d+4 at even 2^k-1, never d+3 or d+2, d+1
//    only at 6, d only at 1 and 2^k+1, else < d) for all d <= 2^14, plus
//    the existence of n <= d+4 with t_{dn} = 1 and three binary ones in n.
CheckResult check_thue_morse_from_zero_cases();
// 3: global pair-pattern values at d = 2^k+1 and 2^k-1 for k <= 10 match
//    the closed expressions (5,6,9 then 2^{k-1}+2; 4,5,9,10 then
//    2^{k-1}+3 odd / 2^{k-1}+1 even).
CheckResult check_pair_global_near_powers();
// 4: global single-1 values at 2^k-1 (2^k+4 even k / 2^k odd k <= 10) and
//    2^k+1 (2^k+2, k <= 9), and max over 1 <= d <= 2^k-2 stays <= 2^k for
//    k <= 9.
CheckResult check_thue_morse_global();
// 5: each tabulated witness progression exists at its stated start and no
//    longer progression of that difference occurs in the stated prefix.
CheckResult check_witness_progressions();
// 6: every global value for patterns of length 2 and 3, d <= 2^10,
//    respects the cap 2^{ell(d)+|v|-nu2(d)-1}.
CheckResult check_global_cap_bound();
// 7: the window solver agrees with the direct bounded-start scan at
//    n_max = 2^{2 ell(d)+|v|+3} for all |v| <= 3, d <= 64.
CheckResult check_window_vs_scan();
// 8: halving invariance A(2d) = A(d) for the pair and single-1 patterns
//    (d <= 256), and all-zeros vs single-1 global equality (d <= 512).
CheckResult check_reductions();
// 9: the certifier main run terminates within 12 iterations with
//    exceptions {1,5,7,39}, at least 500 certificates, and full coverage
//    of odd d <= 2^13.
CheckResult check_certifier_main_run();
// 10: the four suffix-family runs resolve 28 classes and leave exactly
//     the known 8 unresolved.
CheckResult check_certifier_suffix_families();
// 11: the 25-row limit-constant table, closed-form agreement for patterns
//     ending in 1 (|v| <= 6), and the slope bound.
CheckResult check_limit_constant_table();
// 12: the linear formula along d_k = 2^{l+j}(2^k+1) holds for |v| <= 4,
//     l in {0,1}, 2|v|-2 <= k <= 16.
CheckResult check_family_formula();
// 13: subword structure of the pair coloring and its odd subsequence:
//     localization in a short prefix, unique in-block positions, reversal
//     duality, longest common factor length, block-substitution reversal
//     identities.
CheckResult check_subword_structure();

}  // namespace apword
