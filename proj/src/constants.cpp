#include "apword/constants.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "apword/apsolver.hpp"
#include "apword/errors.hpp"

namespace apword {
namespace {

int64_t narrow(__int128 x) {
  if (x > std::numeric_limits<int64_t>::max() ||
      x < std::numeric_limits<int64_t>::min()) {
    throw capacity_error("dyadic arithmetic exceeds 64-bit range");
  }
  return static_cast<int64_t>(x);
}

Dyadic reduce(__int128 num, uint32_t log2_den) {
  if (num == 0) return {0, 0};
  while (log2_den > 0 && (num & 1) == 0) {
    num >>= 1;
    --log2_den;
  }
  return {narrow(num), log2_den};
}

BinaryWord concat(const BinaryWord& a, const BinaryWord& b) {
  std::vector<uint8_t> letters = a.letters;
  letters.insert(letters.end(), b.letters.begin(), b.letters.end());
  return BinaryWord(std::move(letters));
}

BinaryWord zeros(size_t n) { return pad_left(BinaryWord{}, n); }

uint32_t trailing_zeros(const BinaryWord& w) {
  uint32_t t = 0;
  while (t < w.size() && w.at(w.size() - 1 - t) == 0) ++t;
  return t;
}

void require_eligible(const Pattern& v) {
  if (v.length() < 2 || !v.contains_one()) {
    throw domain_error("pattern must have length >= 2 and contain a 1");
  }
}

}  // namespace

Dyadic dyadic(int64_t num, uint32_t log2_den) {
  return reduce(num, log2_den);
}

Dyadic operator+(Dyadic a, Dyadic b) {
  const uint32_t den = std::max(a.log2_den, b.log2_den);
  const __int128 sum = (static_cast<__int128>(a.num) << (den - a.log2_den)) +
                       (static_cast<__int128>(b.num) << (den - b.log2_den));
  return reduce(sum, den);
}

Dyadic operator-(Dyadic a, Dyadic b) {
  return a + Dyadic{-b.num, b.log2_den};
}

Dyadic operator*(Dyadic a, Dyadic b) {
  const __int128 prod = static_cast<__int128>(a.num) * b.num;
  const uint32_t den = a.log2_den + b.log2_den;
  return reduce(prod, den);
}

bool operator<(Dyadic a, Dyadic b) {
  return (static_cast<__int128>(a.num) << b.log2_den) <
         (static_cast<__int128>(b.num) << a.log2_den);
}

bool operator<=(Dyadic a, Dyadic b) { return !(b < a); }

std::string to_string(const Dyadic& q) {
  if (q.is_integer()) return std::to_string(q.num);
  if (q.log2_den <= 62) {
    return std::to_string(q.num) + "/" +
           std::to_string(uint64_t(1) << q.log2_den);
  }
  return std::to_string(q.num) + "/2^" + std::to_string(q.log2_den);
}

std::vector<Pattern> eligible_patterns(uint32_t max_len) {
  std::vector<Pattern> out;
  for (uint32_t len = 2; len <= max_len; ++len) {
    for (uint64_t b = 1; b < (uint64_t(1) << len); ++b) {
      out.push_back(Pattern(pad_left(to_word(b), len)));
    }
  }
  return out;
}

LimitConstants solve_congruence(const Pattern& v) {
  require_eligible(v);
  const uint32_t m = v.length() - 1;
  if (m > 16) {
    throw capacity_error("pattern too long for the exhaustive pair scan");
  }
  const uint32_t j = trailing_zeros(v.word());
  const BinaryWord head_zeros = zeros(v.leading_zeros());
  const BinaryWord tail_zeros = zeros(j);
  std::vector<BinaryWord> words;
  words.reserve(size_t(1) << m);
  for (uint64_t b = 0; b < (uint64_t(1) << m); ++b) {
    words.push_back(pad_left(to_word(b), m));
  }
  for (uint64_t x = 0; x < words.size(); ++x) {
    const uint64_t head = count_subword(concat(head_zeros, words[x]), v.word());
    for (uint64_t y = 0; y < words.size(); ++y) {
      const uint64_t total = head +
                             count_subword(concat(words[y], words[x]), v.word()) +
                             count_subword(concat(words[y], tail_zeros), v.word());
      if (total % 2 == 1) {
        const Dyadic c = dyadic(static_cast<int64_t>(x), j + v.length() - 1);
        const Dyadic b = dyadic(static_cast<int64_t>(y), 0) -
                         dyadic(int64_t(1) << j, 0) * c;
        return {v, words[x], words[y], c, b};
      }
    }
  }
  throw internal_error("parity condition has no solution for pattern " +
                       v.str());
}

LimitConstants closed_form(const Pattern& v) {
  if (v.length() < 2 || v.word().at(v.length() - 1) != 1) {
    throw domain_error("closed form needs a pattern of length >= 2 ending in 1");
  }
  const std::vector<uint8_t>& letters = v.word().letters;
  size_t best = 1;
  for (size_t k = 2; k < letters.size(); ++k) {
    if (std::lexicographical_compare(letters.begin() + k, letters.end(),
                                     letters.begin() + best, letters.end())) {
      best = k;
    }
  }
  const BinaryWord s(std::vector<uint8_t>(letters.begin() + best, letters.end()));
  const BinaryWord p(std::vector<uint8_t>(letters.begin(), letters.begin() + best));
  const uint64_t p_value = to_value(p);
  const BinaryWord x_min = concat(s, zeros(p.size() - 1));
  const BinaryWord y_min = (p.size() == 1 && p.at(0) == 0)
                               ? concat(zeros(v.length() - 2), to_word(1))
                               : concat(zeros(s.size() - 1), p);
  const Dyadic c = dyadic(static_cast<int64_t>(to_value(s)), s.size());
  const Dyadic b = dyadic(static_cast<int64_t>(std::max<uint64_t>(p_value, 1)), 0) - c;
  return {v, x_min, y_min, c, b};
}

bool check_bound(const Pattern& v) {
  const LimitConstants lc = solve_congruence(v);
  const uint32_t j = trailing_zeros(v.word());
  const Dyadic bound = (j == 0) ? dyadic(1, 1) : dyadic(1, 2 * j);
  return lc.C <= bound;
}

bool DkReport::all_pass() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const DkRow& r) { return !r.applicable || r.pass; });
}

DkReport check_dk_formula(const Pattern& v, uint32_t l, uint32_t k_max) {
  const LimitConstants lc = solve_congruence(v);
  const uint32_t j = trailing_zeros(v.word());
  const SequenceHandle h = SequenceHandle::pattern(v);
  DkReport report{v, l, {}};
  const uint32_t k_min = 2 * v.length() - 2;
  for (uint32_t k = 0; k <= k_max; ++k) {
    DkRow row;
    row.k = k;
    if (l + j + k + 1 > 62) {
      throw capacity_error("difference exceeds the supported range");
    }
    row.d = (uint64_t(1) << (l + j)) * ((uint64_t(1) << k) + 1);
    row.applicable = k >= k_min;
    if (row.applicable) {
      const Dyadic expect = lc.C * dyadic(static_cast<int64_t>(row.d), l) + lc.B;
      row.actual = ap_from(h, 0, row.d);
      if (expect.is_integer() && expect.num >= 0) {
        row.expected = static_cast<uint64_t>(expect.num);
        row.pass = row.expected == row.actual;
      }
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace apword
