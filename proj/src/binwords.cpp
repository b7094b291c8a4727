#include "apword/binwords.hpp"

#include <algorithm>
#include <bit>

namespace apword {

BinaryWord::BinaryWord(std::vector<uint8_t> l) : letters(std::move(l)) {
  for (uint8_t b : letters) {
    if (b > 1) throw domain_error("binary word letter out of range");
  }
}

BinaryWord BinaryWord::parse(const std::string& text) {
  BinaryWord w;
  w.letters.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw domain_error("binary word may contain only 0 and 1");
    w.letters.push_back(static_cast<uint8_t>(c - '0'));
  }
  return w;
}

std::string BinaryWord::str() const {
  std::string out;
  out.reserve(letters.size());
  for (uint8_t b : letters) out.push_back(static_cast<char>('0' + b));
  return out;
}

uint64_t to_value(const BinaryWord& w) {
  uint64_t value = 0;
  bool seen_one = false;
  size_t significant = 0;
  for (uint8_t b : w.letters) {
    if (seen_one) ++significant;
    if (b) {
      if (!seen_one) {
        seen_one = true;
        significant = 1;
      }
    }
    if (significant > 63) throw capacity_error("word value exceeds 63 bits");
    value = (value << 1) | b;
  }
  return value;
}

BinaryWord to_word(uint64_t n) {
  BinaryWord w;
  if (n == 0) return w;
  uint32_t bits = 64 - static_cast<uint32_t>(std::countl_zero(n));
  w.letters.resize(bits);
  for (uint32_t k = 0; k < bits; ++k) {
    w.letters[k] = static_cast<uint8_t>((n >> (bits - 1 - k)) & 1);
  }
  return w;
}

DigitStats digit_stats(uint64_t n) {
  DigitStats st{};
  if (n == 0) {
    st.ell = 0;
    st.s2 = 0;
    st.nu2 = UINT32_MAX;
    return st;
  }
  st.ell = 64 - static_cast<uint32_t>(std::countl_zero(n));
  st.nu2 = static_cast<uint32_t>(std::countr_zero(n));
  st.s2 = static_cast<uint32_t>(std::popcount(n));
  return st;
}

uint32_t ell(uint64_t n) { return digit_stats(n).ell; }

uint32_t nu2_checked(uint64_t n) {
  if (n == 0) throw domain_error("nu_2(0) is undefined");
  return static_cast<uint32_t>(std::countr_zero(n));
}

uint64_t count_subword(const BinaryWord& w, const BinaryWord& v) {
  if (v.empty()) throw domain_error("empty pattern in count_subword");
  if (w.size() < v.size()) return 0;
  uint64_t count = 0;
  const size_t last = w.size() - v.size();
  for (size_t start = 0; start <= last; ++start) {
    bool match = true;
    for (size_t k = 0; k < v.size(); ++k) {
      if (w.letters[start + k] != v.letters[k]) {
        match = false;
        break;
      }
    }
    if (match) ++count;
  }
  return count;
}

BinaryWord negate(const BinaryWord& w) {
  BinaryWord out = w;
  for (uint8_t& b : out.letters) b = static_cast<uint8_t>(1 - b);
  return out;
}

BinaryWord reverse(const BinaryWord& w) {
  BinaryWord out = w;
  std::reverse(out.letters.begin(), out.letters.end());
  return out;
}

AddResult add_words(const BinaryWord& a, const BinaryWord& b) {
  const size_t width = std::max(a.size(), b.size());
  AddResult res;
  res.carries.bits.assign(width + 1, 0);
  std::vector<uint8_t> sum_lsb(width + 1, 0);
  uint8_t carry = 0;
  for (size_t pos = 0; pos < width; ++pos) {
    // Letter at digit position `pos` counted from the least significant end.
    const uint8_t da = pos < a.size() ? a.letters[a.size() - 1 - pos] : 0;
    const uint8_t db = pos < b.size() ? b.letters[b.size() - 1 - pos] : 0;
    res.carries.bits[pos] = carry;
    const uint8_t total = static_cast<uint8_t>(da + db + carry);
    sum_lsb[pos] = total & 1;
    carry = total >> 1;
  }
  res.carries.bits[width] = carry;
  sum_lsb[width] = carry;
  // Strip leading zeros for the canonical result.
  size_t top = width + 1;
  while (top > 0 && sum_lsb[top - 1] == 0) --top;
  res.sum.letters.resize(top);
  for (size_t k = 0; k < top; ++k) res.sum.letters[k] = sum_lsb[top - 1 - k];
  return res;
}

BinaryWord pad_left(const BinaryWord& a, size_t width) {
  if (a.size() > width) throw domain_error("pad_left: word longer than target width");
  BinaryWord out;
  out.letters.assign(width - a.size(), 0);
  out.letters.insert(out.letters.end(), a.letters.begin(), a.letters.end());
  return out;
}

}  // namespace apword
