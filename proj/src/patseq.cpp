#include "apword/patseq.hpp"

#include <bit>

#include "apword/morphism.hpp"

namespace apword {

Pattern::Pattern(const BinaryWord& word) : word_(word) {
  if (word_.empty()) throw domain_error("pattern must be nonempty");
  if (word_.size() > 63) throw capacity_error("pattern longer than 63 letters");
  len_ = static_cast<uint32_t>(word_.size());
  leading_zeros_ = 0;
  contains_one_ = false;
  for (uint8_t b : word_.letters) {
    if (b) {
      contains_one_ = true;
      break;
    }
    ++leading_zeros_;
  }
  bits_ = 0;
  for (uint8_t b : word_.letters) bits_ = (bits_ << 1) | b;
  mask_ = len_ == 64 ? ~uint64_t{0} : (uint64_t{1} << len_) - 1;
}

uint64_t Pattern::count(uint64_t n) const {
  if (n == 0) return 0;
  uint32_t width = 64 - static_cast<uint32_t>(std::countl_zero(n));
  if (contains_one_) {
    // Prepended zeros only widen the window; they leave the value of n
    // unchanged, so the shifted comparisons below see them as zero bits.
    width += leading_zeros_;
  }
  if (width < len_) return 0;
  if (width > 63) throw capacity_error("index too large for pattern counting");
  uint64_t count = 0;
  for (uint32_t shift = 0; shift + len_ <= width; ++shift) {
    count += ((n >> shift) & mask_) == bits_;
  }
  return count;
}

SequenceHandle SequenceHandle::pattern(Pattern v) { return SequenceHandle(std::move(v), false); }
SequenceHandle SequenceHandle::thue_morse() { return pattern(Pattern::parse("1")); }
SequenceHandle SequenceHandle::rudin_shapiro() { return pattern(Pattern::parse("11")); }
SequenceHandle SequenceHandle::odd_subsequence() {
  return SequenceHandle(Pattern::parse("11"), true);
}

uint8_t SequenceHandle::color(uint64_t n) const {
  if (!odd_sub_) return pat_.parity(n);
  if (n >= (uint64_t{1} << 62)) throw capacity_error("odd-subsequence index too large");
  return pat_.parity(2 * n + 1);
}

std::string SequenceHandle::label() const {
  if (odd_sub_) return "s";
  return pat_.str();
}

BinaryWord prefix(const SequenceHandle& h, uint64_t length) {
  if (length >= (uint64_t{1} << 32)) throw capacity_error("prefix length too large");
  BinaryWord out;
  if (length < (uint64_t{1} << 16)) {
    out.letters.resize(length);
    for (uint64_t n = 0; n < length; ++n) out.letters[n] = h.color(n);
    return out;
  }
  const BlockMorphism m = h.is_odd_subsequence() ? derive_sigma() : derive(h.base_pattern());
  return project_prefix(m, length);
}

BinaryWord aligned_block(const Pattern& v, uint64_t n) {
  const uint64_t block_len = uint64_t{1} << (v.length() - 1);
  BinaryWord out;
  out.letters.resize(block_len);
  for (uint64_t k = 0; k < block_len; ++k) out.letters[k] = v.parity(block_len * n + k);
  return out;
}

}  // namespace apword
