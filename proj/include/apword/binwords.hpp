// Exact binary-word and integer-digit primitives shared by all other modules.
//
// Words are finite sequences over {0,1}, stored most significant letter
// first. The empty word is a valid value and denotes the integer 0; the
// canonical expansion of 0 is the empty word, so ell(0) = 0 and every
// counting function evaluates to 0 at 0.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apword/errors.hpp"

namespace apword {

struct BinaryWord {
  std::vector<uint8_t> letters;  // each 0 or 1, most significant first

  BinaryWord() = default;
  explicit BinaryWord(std::vector<uint8_t> l);
  // Parses a string of '0'/'1' characters; "" gives the empty word.
  static BinaryWord parse(const std::string& text);

  size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  uint8_t at(size_t k) const { return letters.at(k); }

  std::string str() const;

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend auto operator<=>(const BinaryWord& a, const BinaryWord& b) {
    return a.letters <=> b.letters;
  }
};

// Carry indicators of a binary addition, indexed by digit position from the
// least significant end; bits[k] tells whether a carry entered position k.
// Length is max operand length + 1, the last slot being the overflow
// indicator.
struct CarryProfile {
  std::vector<uint8_t> bits;
};

// [w]_2; leading zeros do not affect the result. Words whose value would not
// fit in 64 bits raise capacity_error.
uint64_t to_value(const BinaryWord& w);

// (n)_2, the canonical expansion without leading zeros; to_word(0) is the
// empty word.
BinaryWord to_word(uint64_t n);

struct DigitStats {
  uint32_t ell;  // length of the canonical expansion; 0 for n = 0
  uint32_t nu2;  // 2-adic valuation; querying it for n = 0 is a domain error
  uint32_t s2;   // number of 1 digits
};

// ell / nu_2 / digit-sum of n. nu2 of 0 is undefined: digit_stats(0) returns
// ell = s2 = 0 and a poisoned nu2; use nu2_checked for a checked read.
DigitStats digit_stats(uint64_t n);
uint32_t ell(uint64_t n);
uint32_t nu2_checked(uint64_t n);  // domain_error for n = 0

// |w|_v, the number of possibly overlapping occurrences of v in w.
// Empty v is an invalid pattern.
uint64_t count_subword(const BinaryWord& w, const BinaryWord& v);

BinaryWord negate(const BinaryWord& w);
BinaryWord reverse(const BinaryWord& w);

// Binary addition with full carry tracking. sum is the canonical expansion
// of to_value(a) + to_value(b).
struct AddResult {
  BinaryWord sum;
  CarryProfile carries;
};
AddResult add_words(const BinaryWord& a, const BinaryWord& b);

// a left-padded with zeros to exactly `width` letters; domain_error if a is
// already longer.
BinaryWord pad_left(const BinaryWord& a, size_t width);

}  // namespace apword
