#include "apword/morphism.hpp"

#include <algorithm>
#include <set>

namespace apword {

namespace {

constexpr uint64_t kMaxIterateLetters = uint64_t{1} << 28;

std::string block_name(const BinaryWord& b) { return b.str(); }

}  // namespace

uint32_t BlockMorphism::letter_by_name(const std::string& name) const {
  for (uint32_t id = 0; id < names.size(); ++id) {
    if (names[id] == name) return id;
  }
  throw domain_error("no letter named " + name);
}

BlockMorphism derive(const Pattern& v) {
  if (v.length() > 8) throw capacity_error("patterns longer than 8 are not supported");
  BlockMorphism m{v};
  m.block_len = uint32_t{1} << (v.length() - 1);
  const bool needs_x = !v.contains_one();
  const uint64_t scan = uint64_t{1} << (3 * v.length());
  const uint64_t lower_half = scan / 2;

  std::map<std::vector<uint8_t>, uint32_t> id_by_block;
  std::vector<uint32_t> ids(scan);

  // For n >= block_len the digits of block_len*n + j split as (n)_2 followed
  // by the fixed-width residue j, so the letters of block n equal a boundary
  // profile depending only on l = n mod block_len, xor-ed with a constant.
  // Blocks sharing a residue therefore form a two-element orbit {B_l, ~B_l};
  // we take the representative from index block_len + l (where the boundary
  // window has full width) and pick the orientation by probing one letter
  // directly. This costs one counting call per block instead of block_len.
  // The equivalence with direct evaluation is spot-checked below.
  std::vector<BinaryWord> base(m.block_len);
  for (uint32_t l = 0; l < m.block_len; ++l) {
    base[l] = aligned_block(v, uint64_t{m.block_len} + l);
  }

  auto block_at = [&](uint64_t n) -> BinaryWord {
    if (!v.contains_one() || n < m.block_len) return aligned_block(v, n);
    BinaryWord b = base[n % m.block_len];
    if (v.parity(uint64_t{m.block_len} * n) != b.at(0)) b = negate(b);
    return b;
  };
  // Direct spot check of the fast path.
  for (uint64_t n = 0; n < std::min<uint64_t>(scan, 1024); ++n) {
    if (block_at(n) != aligned_block(v, n)) {
      throw internal_error("aligned-block residue structure violated");
    }
  }

  for (uint64_t n = 0; n < scan; ++n) {
    if (needs_x && n == 0) {
      // The fixed point of the all-zeros substitution starts with the extra
      // symbol X, projected to G_v(0) at the very end.
      m.blocks.push_back(aligned_block(v, 0));
      m.names.push_back("X");
      ids[0] = 0;
      m.x_letter = 0;
      continue;
    }
    BinaryWord b = block_at(n);
    auto [it, inserted] = id_by_block.try_emplace(b.letters, static_cast<uint32_t>(m.blocks.size()));
    if (inserted) {
      if (n >= lower_half) {
        throw internal_error("new block letter at scan boundary for pattern " + v.str());
      }
      m.blocks.push_back(b);
      m.names.push_back(block_name(b));
    }
    ids[n] = it->second;
  }

  m.image.assign(m.blocks.size(), {UINT32_MAX, UINT32_MAX});
  for (uint64_t n = 0; n < lower_half; ++n) {
    const std::array<uint32_t, 2> pair{ids[2 * n], ids[2 * n + 1]};
    auto& slot = m.image[ids[n]];
    if (slot[0] == UINT32_MAX) {
      slot = pair;
    } else if (slot != pair) {
      throw internal_error("inconsistent substitution image for pattern " + v.str());
    }
  }
  for (const auto& img : m.image) {
    if (img[0] == UINT32_MAX) throw internal_error("letter without image");
  }

  m.start = ids[0];
  if (m.image[m.start][0] != m.start) throw internal_error("start letter is not a fixed point");

  if (v.contains_one()) {
    m.negation.assign(m.blocks.size(), UINT32_MAX);
    for (uint32_t id = 0; id < m.blocks.size(); ++id) {
      auto it = id_by_block.find(negate(m.blocks[id]).letters);
      if (it == id_by_block.end()) {
        throw internal_error("alphabet not negation-closed for pattern " + v.str());
      }
      m.negation[id] = it->second;
    }
    m.negation_closed = true;
    for (uint32_t id = 0; id < m.blocks.size(); ++id) {
      const auto& img = m.image[id];
      const auto& nimg = m.image[m.negation[id]];
      if (nimg[0] != m.negation[img[0]] || nimg[1] != m.negation[img[1]]) {
        throw internal_error("negation does not commute with the substitution");
      }
    }
  }
  return m;
}

BlockMorphism derive_sigma() {
  BlockMorphism m{Pattern::parse("11")};
  m.is_sigma = true;
  m.block_len = 2;
  // Letters in order of first appearance in the 2-blocks of s; images as the
  // fixed-point structure of s dictates.
  const char* letter_names[4] = {"01", "00", "11", "10"};
  const std::array<std::array<uint32_t, 2>, 4> images = {{
      {0, 1},  // 01 -> 01 00
      {0, 2},  // 00 -> 01 11
      {3, 1},  // 11 -> 10 00
      {3, 2},  // 10 -> 10 11
  }};
  for (int k = 0; k < 4; ++k) {
    m.blocks.push_back(BinaryWord::parse(letter_names[k]));
    m.names.push_back(letter_names[k]);
    m.image.push_back(images[k]);
  }
  m.start = 0;
  m.negation_closed = true;
  m.negation = {3, 2, 1, 0};  // 01<->10, 00<->11

  // Verify against directly computed 2-blocks of s.
  const SequenceHandle s = SequenceHandle::odd_subsequence();
  std::vector<uint32_t> fixed{m.start};
  while (fixed.size() < 512) fixed = iterate(m, fixed, 1);
  for (uint64_t n = 0; n < 512; ++n) {
    const BinaryWord& b = m.blocks[fixed[n]];
    if (b.at(0) != s.color(2 * n) || b.at(1) != s.color(2 * n + 1)) {
      throw internal_error("sigma substitution disagrees with s");
    }
  }
  return m;
}

std::vector<uint32_t> iterate(const BlockMorphism& m, const std::vector<uint32_t>& w, uint32_t t) {
  for (uint32_t letter : w) {
    if (letter >= m.alphabet_size()) throw domain_error("letter outside alphabet");
  }
  if (!w.empty()) {
    const uint64_t limit = t < 63 ? (kMaxIterateLetters >> t) : 0;
    if (w.size() > limit) throw capacity_error("iterated word would be too long");
  }
  std::vector<uint32_t> cur = w;
  std::vector<uint32_t> next;
  for (uint32_t step = 0; step < t; ++step) {
    next.clear();
    next.reserve(cur.size() * 2);
    for (uint32_t letter : cur) {
      const auto& img = m.image[letter];
      next.push_back(img[0]);
      next.push_back(img[1]);
    }
    cur.swap(next);
  }
  return cur;
}

BinaryWord project(const BlockMorphism& m, const std::vector<uint32_t>& letters) {
  BinaryWord out;
  out.letters.reserve(letters.size() * m.block_len);
  for (uint32_t letter : letters) {
    if (letter >= m.alphabet_size()) throw domain_error("letter outside alphabet");
    const auto& b = m.blocks[letter].letters;
    out.letters.insert(out.letters.end(), b.begin(), b.end());
  }
  return out;
}

BinaryWord project_prefix(const BlockMorphism& m, uint64_t length) {
  const uint64_t need_letters = (length + m.block_len - 1) / m.block_len;
  std::vector<uint32_t> fixed{m.start};
  while (fixed.size() < need_letters) fixed = iterate(m, fixed, 1);
  fixed.resize(std::max<uint64_t>(need_letters, 1));
  BinaryWord out = project(m, fixed);
  out.letters.resize(length);
  return out;
}

std::vector<std::pair<uint32_t, uint32_t>> subword_pairs(const BlockMorphism& m) {
  std::set<std::pair<uint32_t, uint32_t>> pairs;
  pairs.emplace(m.image[m.start][0], m.image[m.start][1]);
  const size_t cap = m.alphabet_size() * m.alphabet_size() + 2;
  for (size_t round = 0;; ++round) {
    if (round >= cap) throw internal_error("pair closure failed to stabilize");
    std::set<std::pair<uint32_t, uint32_t>> next = pairs;
    for (const auto& [a, b] : pairs) {
      const auto& ia = m.image[a];
      const auto& ib = m.image[b];
      next.emplace(ia[0], ia[1]);   // within the image of a
      next.emplace(ia[1], ib[0]);   // across the boundary
      next.emplace(ib[0], ib[1]);   // within the image of b
    }
    if (next == pairs) break;
    pairs.swap(next);
  }
  return {pairs.begin(), pairs.end()};
}

std::map<std::pair<uint32_t, uint32_t>, uint64_t> pair_first_positions(
    const BlockMorphism& m, const std::vector<std::pair<uint32_t, uint32_t>>& pairs) {
  const std::set<std::pair<uint32_t, uint32_t>> wanted(pairs.begin(), pairs.end());
  std::map<std::pair<uint32_t, uint32_t>, uint64_t> first;
  std::vector<uint32_t> fixed{m.start};
  for (uint64_t len = 1024;; len *= 4) {
    while (fixed.size() < len) fixed = iterate(m, fixed, 1);
    first.clear();
    for (uint64_t q = 0; q + 1 < fixed.size() && first.size() < wanted.size(); ++q) {
      const std::pair<uint32_t, uint32_t> pr{fixed[q], fixed[q + 1]};
      if (wanted.count(pr)) first.try_emplace(pr, q);
    }
    if (first.size() == wanted.size()) return first;
    if (len >= (uint64_t{1} << 22)) {
      throw internal_error("adjacent pair not found in fixed-point prefix");
    }
  }
}

std::vector<ReversalIdentityResult> check_reversal_identities(uint32_t t_max) {
  if (t_max < 1) throw domain_error("reversal identities need t_max >= 1");
  const BlockMorphism rho = derive(Pattern::parse("11"));
  const BlockMorphism sigma = derive_sigma();
  // sigma letter -> rho letter, depending on the parity of t.
  const std::array<std::pair<const char*, const char*>, 4> odd_map = {{
      {"01", "01"}, {"00", "11"}, {"11", "00"}, {"10", "10"}}};
  const std::array<std::pair<const char*, const char*>, 4> even_map = {{
      {"01", "10"}, {"00", "00"}, {"11", "11"}, {"10", "01"}}};
  std::vector<ReversalIdentityResult> results;
  for (uint32_t t = 1; t <= t_max; ++t) {
    const auto& mapping = (t % 2 == 1) ? odd_map : even_map;
    for (const auto& [sig_name, rho_name] : mapping) {
      const std::vector<uint32_t> sw{sigma.letter_by_name(sig_name)};
      const std::vector<uint32_t> rw{rho.letter_by_name(rho_name)};
      const BinaryWord lhs = project(sigma, iterate(sigma, sw, t));
      const BinaryWord rhs = reverse(project(rho, iterate(rho, rw, t)));
      results.push_back({t, sig_name, rho_name, lhs == rhs});
    }
  }
  return results;
}

}  // namespace apword
