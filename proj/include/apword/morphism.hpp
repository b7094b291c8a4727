// Block substitutions: derives the alphabet of 2^{|v|-1}-aligned blocks of
// g_v together with the 2-uniform substitution gamma_v whose (projected)
// fixed point is g_v, including the all-zeros variant with the extra symbol
// X; iterates morphisms; computes the closure of length-2 letter subwords of
// the fixed point; and hosts the pair of substitutions rho (for r) and sigma
// (for s) with their reversal identities.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apword/patseq.hpp"

namespace apword {

struct BlockMorphism {
  Pattern source;      // the defining pattern (11 for the sigma substitution)
  bool is_sigma = false;
  uint32_t block_len = 1;
  // Per letter id: the projected block (for the X letter this is G_v(0), its
  // image under the final projection), a display name ("X" or the block
  // bits), and the ordered image pair. Ids are assigned in order of first
  // appearance in the fixed point, making everything downstream
  // deterministic.
  std::vector<BinaryWord> blocks;
  std::vector<std::string> names;
  std::vector<std::array<uint32_t, 2>> image;
  uint32_t start = 0;
  std::optional<uint32_t> x_letter;
  bool negation_closed = false;
  std::vector<uint32_t> negation;  // letter -> negated letter, when closed

  size_t alphabet_size() const { return blocks.size(); }
  uint32_t letter_by_name(const std::string& name) const;  // domain_error if absent
};

// Derives the substitution for g_v by scanning block indices n < 2^{3|v|}.
// Image consistency (same letter, same image pair) is verified during the
// scan; a letter first appearing in the upper half of the scan range, an
// inconsistent image, or a missing negation for v containing a 1 signals
// internal_error.
BlockMorphism derive(const Pattern& v);

// The substitution for s = (r_{2n+1}) on 2-blocks, start letter 01:
// 01 -> 01 00, 00 -> 01 11, 11 -> 10 00, 10 -> 10 11. Verified against
// directly computed 2-blocks of s during construction.
BlockMorphism derive_sigma();

// m^t(w). Result length |w| * 2^t; guarded against runaway sizes.
std::vector<uint32_t> iterate(const BlockMorphism& m, const std::vector<uint32_t>& w, uint32_t t);

// Concatenation of the projected blocks of the given letters.
BinaryWord project(const BlockMorphism& m, const std::vector<uint32_t>& letters);

// Projected fixed-point prefix of the requested length.
BinaryWord project_prefix(const BlockMorphism& m, uint64_t length);

// All ordered pairs of adjacent letters occurring in the fixed point,
// computed as the stabilizing closure seeded with the first two letters
// (the image of the start letter). Stabilization within |alphabet|^2 + 2
// rounds is guaranteed; exceeding the cap signals internal_error.
std::vector<std::pair<uint32_t, uint32_t>> subword_pairs(const BlockMorphism& m);

// Letter position of the first occurrence of each adjacent pair in the fixed
// point (used to re-verify window findings at absolute positions).
std::map<std::pair<uint32_t, uint32_t>, uint64_t> pair_first_positions(
    const BlockMorphism& m, const std::vector<std::pair<uint32_t, uint32_t>>& pairs);

// The eight reversal identities connecting iterates of sigma and rho:
// for odd t, sigma^t(01) = rho^t(01)^R, sigma^t(00) = rho^t(11)^R,
//            sigma^t(11) = rho^t(00)^R, sigma^t(10) = rho^t(10)^R;
// for even t, sigma^t(01) = rho^t(10)^R, sigma^t(00) = rho^t(00)^R,
//             sigma^t(11) = rho^t(11)^R, sigma^t(10) = rho^t(01)^R.
struct ReversalIdentityResult {
  uint32_t t;
  std::string sigma_letter;
  std::string rho_letter;
  bool pass;
};
std::vector<ReversalIdentityResult> check_reversal_identities(uint32_t t_max);

}  // namespace apword
