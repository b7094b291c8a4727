// Unit tests for block-substitution derivation, iteration, pair closure,
// projection, and the reversal identities.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "apword/morphism.hpp"

using namespace apword;

namespace {
Pattern pat(const std::string& s) { return Pattern::parse(s); }

std::array<std::string, 2> image_names(const BlockMorphism& m, const std::string& letter) {
  const auto img = m.image[m.letter_by_name(letter)];
  return {m.names[img[0]], m.names[img[1]]};
}
}  // namespace

TEST_CASE("substitution for the 11 pattern") {
  const BlockMorphism m = derive(pat("11"));
  REQUIRE(m.alphabet_size() == 4);
  CHECK(m.names == std::vector<std::string>{"00", "01", "10", "11"});
  CHECK(image_names(m, "00") == std::array<std::string, 2>{"00", "01"});
  CHECK(image_names(m, "01") == std::array<std::string, 2>{"00", "10"});
  CHECK(image_names(m, "10") == std::array<std::string, 2>{"11", "01"});
  CHECK(image_names(m, "11") == std::array<std::string, 2>{"11", "10"});
  CHECK(m.names[m.start] == "00");
  CHECK(m.negation_closed);
  CHECK(m.names[m.negation[m.letter_by_name("00")]] == "11");
}

TEST_CASE("substitution for the single-1 pattern") {
  const BlockMorphism m = derive(pat("1"));
  REQUIRE(m.alphabet_size() == 2);
  CHECK(m.names == std::vector<std::string>{"0", "1"});
  CHECK(image_names(m, "0") == std::array<std::string, 2>{"0", "1"});
  CHECK(image_names(m, "1") == std::array<std::string, 2>{"1", "0"});
}

TEST_CASE("all-zero patterns get the extra letter") {
  const BlockMorphism m = derive(pat("00"));
  REQUIRE(m.x_letter.has_value());
  CHECK(m.names[*m.x_letter] == "X");
  CHECK(m.start == *m.x_letter);
  const auto img = m.image[*m.x_letter];
  CHECK(img[0] == *m.x_letter);
  CHECK(m.blocks[img[1]] == aligned_block(pat("00"), 1));
  CHECK_FALSE(m.negation_closed);
  // The projection of X is the block at position 0.
  CHECK(m.blocks[*m.x_letter] == aligned_block(pat("00"), 0));
}

TEST_CASE("sigma substitution") {
  const BlockMorphism m = derive_sigma();
  CHECK(m.names == std::vector<std::string>{"01", "00", "11", "10"});
  CHECK(image_names(m, "01") == std::array<std::string, 2>{"01", "00"});
  CHECK(image_names(m, "00") == std::array<std::string, 2>{"01", "11"});
  CHECK(image_names(m, "11") == std::array<std::string, 2>{"10", "00"});
  CHECK(image_names(m, "10") == std::array<std::string, 2>{"10", "11"});
  CHECK(m.names[m.start] == "01");
  CHECK(project_prefix(m, 8) == BinaryWord::parse("01000111"));
}

TEST_CASE("iteration") {
  const BlockMorphism rho = derive(pat("11"));
  const std::vector<uint32_t> start{rho.letter_by_name("00")};
  CHECK(project(rho, iterate(rho, start, 2)) == BinaryWord::parse("00010010"));
  CHECK(iterate(rho, start, 0) == start);
  const std::vector<uint32_t> two{rho.letter_by_name("00"), rho.letter_by_name("01")};
  CHECK(project(rho, iterate(rho, two, 1)) == BinaryWord::parse("00010010"));
  CHECK_THROWS_AS(iterate(rho, {17}, 1), domain_error);
}

TEST_CASE("projected prefixes match direct evaluation") {
  CHECK(project_prefix(derive(pat("11")), 8) == BinaryWord::parse("00010010"));
  CHECK(project_prefix(derive(pat("1")), 4) == BinaryWord::parse("0110"));
  for (uint32_t len = 1; len <= 4; ++len) {
    for (uint64_t bits = 0; bits < (uint64_t{1} << len); ++bits) {
      const Pattern v(pad_left(to_word(bits), len));
      const BlockMorphism m = derive(v);
      const uint64_t n_check = uint64_t{1} << 14;
      const BinaryWord projected = project_prefix(m, n_check);
      const SequenceHandle h = SequenceHandle::pattern(v);
      for (uint64_t n = 0; n < n_check; n += 61) CHECK(projected.at(n) == h.color(n));
      for (uint64_t n = 0; n < 256; ++n) CHECK(projected.at(n) == h.color(n));
    }
  }
}

TEST_CASE("alphabet size bounds") {
  for (uint32_t len = 1; len <= 4; ++len) {
    for (uint64_t bits = 0; bits < (uint64_t{1} << len); ++bits) {
      const Pattern v(pad_left(to_word(bits), len));
      const BlockMorphism m = derive(v);
      const size_t bound = (uint64_t{1} << len) + (v.contains_one() ? 0 : 1);
      CHECK(m.alphabet_size() <= bound);
    }
  }
}

TEST_CASE("pair closure equals pairs of a generated prefix") {
  for (const char* vs : {"1", "11", "10", "01", "00", "101", "000", "0010"}) {
    const BlockMorphism m = derive(pat(vs));
    auto pairs = subword_pairs(m);
    // Oracle: adjacent pairs of a directly generated fixed-point prefix.
    std::vector<uint32_t> fixed{m.start};
    while (fixed.size() < (uint64_t{1} << 12)) fixed = iterate(m, fixed, 1);
    std::set<std::pair<uint32_t, uint32_t>> seen;
    for (size_t q = 0; q + 1 < fixed.size(); ++q) seen.emplace(fixed[q], fixed[q + 1]);
    CHECK(std::set<std::pair<uint32_t, uint32_t>>(pairs.begin(), pairs.end()) == seen);
  }
}

TEST_CASE("pair closure contains the quoted pairs for 11") {
  const BlockMorphism m = derive(pat("11"));
  const auto pairs = subword_pairs(m);
  auto has = [&](const std::string& a, const std::string& b) {
    return std::find(pairs.begin(), pairs.end(),
                     std::make_pair(m.letter_by_name(a), m.letter_by_name(b))) != pairs.end();
  };
  CHECK(has("00", "01"));
  CHECK(has("11", "10"));
}

TEST_CASE("pair closure is negation-closed for patterns containing 1") {
  for (const char* vs : {"11", "10", "101", "0110"}) {
    const BlockMorphism m = derive(pat(vs));
    REQUIRE(m.negation_closed);
    const auto pairs = subword_pairs(m);
    const std::set<std::pair<uint32_t, uint32_t>> set(pairs.begin(), pairs.end());
    for (const auto& [a, b] : pairs) {
      CHECK(set.count({m.negation[a], m.negation[b]}) == 1);
    }
  }
}

TEST_CASE("first pair positions are genuine occurrences") {
  for (const char* vs : {"11", "00", "010"}) {
    const BlockMorphism m = derive(pat(vs));
    const auto pairs = subword_pairs(m);
    const auto first = pair_first_positions(m, pairs);
    REQUIRE(first.size() == pairs.size());
    std::vector<uint32_t> fixed{m.start};
    uint64_t max_pos = 0;
    for (const auto& [p, q] : first) max_pos = std::max(max_pos, q);
    while (fixed.size() < max_pos + 2) fixed = iterate(m, fixed, 1);
    for (const auto& [p, q] : first) {
      CHECK(fixed[q] == p.first);
      CHECK(fixed[q + 1] == p.second);
    }
  }
}

TEST_CASE("reversal identities") {
  const auto results = check_reversal_identities(6);
  CHECK(results.size() == 6 * 4);
  for (const auto& res : results) CHECK(res.pass);
  CHECK_THROWS_AS(check_reversal_identities(0), domain_error);
}

TEST_CASE("reversal identity worked example") {
  // sigma(01) = 0100 equals reverse(rho(01)) = reverse(0010).
  const BlockMorphism rho = derive(pat("11"));
  const BlockMorphism sigma = derive_sigma();
  const BinaryWord lhs = project(sigma, iterate(sigma, {sigma.letter_by_name("01")}, 1));
  const BinaryWord rhs = reverse(project(rho, iterate(rho, {rho.letter_by_name("01")}, 1)));
  CHECK(lhs == BinaryWord::parse("0100"));
  CHECK(lhs == rhs);
}
