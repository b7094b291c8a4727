// Pattern-counting functions e_v, their parity colorings g_v, the named
// sequences t (parity of the digit sum, v = 1), r (parity of the count of 11
// blocks, v = 11), s (the odd-indexed subsequence s_n = r_{2n+1}), and
// aligned-block extraction.
//
// Counting convention: e_v(n) counts possibly overlapping occurrences of v in
// the canonical expansion of n, preceded by i zeros when v starts with i >= 1
// zeros but contains a 1. For v consisting of zeros only, occurrences are
// counted in the bare expansion (nothing is prepended).
#pragma once

#include <cstdint>
#include <memory>

#include "apword/binwords.hpp"

namespace apword {

class Pattern {
 public:
  explicit Pattern(const BinaryWord& word);
  static Pattern parse(const std::string& text) { return Pattern(BinaryWord::parse(text)); }

  const BinaryWord& word() const { return word_; }
  uint32_t length() const { return len_; }
  uint32_t leading_zeros() const { return leading_zeros_; }
  bool contains_one() const { return contains_one_; }
  std::string str() const { return word_.str(); }

  // e_v(n): the occurrence count defined above.
  uint64_t count(uint64_t n) const;
  // g_v(n) = e_v(n) mod 2.
  uint8_t parity(uint64_t n) const { return static_cast<uint8_t>(count(n) & 1); }

  friend bool operator==(const Pattern& a, const Pattern& b) { return a.word_ == b.word_; }
  friend bool operator<(const Pattern& a, const Pattern& b) { return a.word_.letters < b.word_.letters; }

 private:
  BinaryWord word_;
  uint32_t len_;
  uint32_t leading_zeros_;
  bool contains_one_;
  uint64_t bits_;  // pattern letters packed into an integer, MSB-first
  uint64_t mask_;
};

// A 2-coloring of the nonnegative integers: either g_v directly, or the
// odd-indexed subsequence n -> base(2n+1) (used for s with base r).
class SequenceHandle {
 public:
  static SequenceHandle pattern(Pattern v);
  static SequenceHandle thue_morse();    // v = 1
  static SequenceHandle rudin_shapiro();  // v = 11
  static SequenceHandle odd_subsequence();  // s_n = r_{2n+1}

  uint8_t color(uint64_t n) const;
  bool is_odd_subsequence() const { return odd_sub_; }
  const Pattern& base_pattern() const { return pat_; }
  std::string label() const;

 private:
  SequenceHandle(Pattern p, bool odd_sub) : pat_(std::move(p)), odd_sub_(odd_sub) {}
  Pattern pat_;
  bool odd_sub_;
};

// First `length` colors of the sequence as a word. Long prefixes
// (length >= 2^16) are produced by iterating the block substitution from the
// morphism module; both paths agree (tested).
BinaryWord prefix(const SequenceHandle& h, uint64_t length);

// G_v(n), the aligned factor g_v(2^{|v|-1} n) ... g_v(2^{|v|-1}(n+1) - 1).
BinaryWord aligned_block(const Pattern& v, uint64_t n);

}  // namespace apword
