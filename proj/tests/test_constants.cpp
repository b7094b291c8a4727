// Unit tests for the limit-constant machinery. Expected values either
// follow directly from the definitions or were frozen from an independent
// reference implementation before this code was written.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "apword/constants.hpp"
#include "apword/errors.hpp"

using namespace apword;

namespace {

Pattern pat(const std::string& text) { return Pattern::parse(text); }

struct FrozenRow {
  const char* v;
  const char* x_min;
  const char* y_min;
  Dyadic C;
  Dyadic B;
};

// Lexicographically minimal solutions for every eligible pattern of
// length at most 4, frozen from the reference implementation; the C and B
// columns double as the published table of these constants.
const std::vector<FrozenRow>& frozen_table() {
  static const std::vector<FrozenRow> rows = {
      {"01", "1", "1", {1, 1}, {1, 1}},
      {"10", "1", "1", {1, 2}, {1, 1}},
      {"11", "1", "1", {1, 1}, {1, 1}},
      {"001", "01", "01", {1, 2}, {3, 2}},
      {"010", "10", "11", {1, 2}, {5, 1}},
      {"011", "10", "01", {1, 1}, {1, 1}},
      {"100", "01", "01", {1, 4}, {3, 2}},
      {"101", "01", "01", {1, 2}, {3, 2}},
      {"110", "10", "01", {1, 2}, {1, 1}},
      {"111", "10", "11", {1, 1}, {5, 1}},
      {"0001", "001", "001", {1, 3}, {7, 3}},
      {"0010", "010", "001", {1, 3}, {3, 2}},
      {"0011", "011", "001", {3, 3}, {5, 3}},
      {"0100", "010", "001", {1, 4}, {3, 2}},
      {"0101", "010", "001", {1, 2}, {3, 2}},
      {"0110", "100", "001", {1, 2}, {1, 1}},
      {"0111", "100", "011", {1, 1}, {5, 1}},
      {"1000", "001", "001", {1, 6}, {7, 3}},
      {"1001", "001", "001", {1, 3}, {7, 3}},
      {"1010", "010", "001", {1, 3}, {3, 2}},
      {"1011", "011", "001", {3, 3}, {5, 3}},
      {"1100", "010", "011", {1, 4}, {11, 2}},
      {"1101", "010", "011", {1, 2}, {11, 2}},
      {"1110", "100", "011", {1, 2}, {5, 1}},
      {"1111", "100", "111", {1, 1}, {13, 1}},
  };
  return rows;
}

}  // namespace

TEST_CASE("dyadic arithmetic reduces and compares exactly") {
  CHECK(dyadic(4, 3) == Dyadic{1, 1});
  CHECK(dyadic(0, 5) == Dyadic{0, 0});
  CHECK(dyadic(6, 0) == Dyadic{6, 0});
  CHECK(dyadic(12, 2) == Dyadic{3, 0});
  CHECK(dyadic(-4, 3) == Dyadic{-1, 1});

  CHECK(dyadic(1, 1) + dyadic(1, 1) == Dyadic{1, 0});
  CHECK(dyadic(1, 0) - dyadic(1, 1) == Dyadic{1, 1});
  CHECK(dyadic(3, 3) * dyadic(2, 0) == Dyadic{3, 2});
  CHECK(dyadic(3, 3) * dyadic(1, 1) == Dyadic{3, 4});
  CHECK(dyadic(5, 0) - dyadic(3, 1) == Dyadic{7, 1});

  CHECK(dyadic(1, 2) < dyadic(1, 1));
  CHECK(dyadic(3, 2) <= dyadic(3, 2));
  CHECK_FALSE(dyadic(1, 1) < dyadic(1, 2));
  CHECK(dyadic(-1, 1) < dyadic(0, 0));

  CHECK(dyadic(1, 1).is_integer() == false);
  CHECK(dyadic(4, 2).is_integer() == true);

  CHECK(to_string(dyadic(3, 3)) == "3/8");
  CHECK(to_string(dyadic(5, 0)) == "5");
  CHECK(to_string(dyadic(-1, 1)) == "-1/2");
  CHECK(to_string(dyadic(13, 1)) == "13/2");
}

TEST_CASE("eligible pattern enumeration is length-major and skips zero blocks") {
  const std::vector<Pattern> got = eligible_patterns(4);
  const std::vector<FrozenRow>& rows = frozen_table();
  REQUIRE(got.size() == rows.size());
  for (size_t k = 0; k < rows.size(); ++k) {
    CHECK(got[k].str() == rows[k].v);
  }
  CHECK(eligible_patterns(1).empty());
  CHECK(eligible_patterns(2).size() == 3);
}

TEST_CASE("minimal congruence solutions match the frozen table") {
  for (const FrozenRow& row : frozen_table()) {
    INFO("v=" << row.v);
    const LimitConstants lc = solve_congruence(pat(row.v));
    CHECK(lc.x_min.str() == row.x_min);
    CHECK(lc.y_min.str() == row.y_min);
    CHECK(lc.C == row.C);
    CHECK(lc.B == row.B);
  }
}

TEST_CASE("solution invariants: lengths, derived values, positivity") {
  for (const Pattern& v : eligible_patterns(5)) {
    INFO("v=" << v.str());
    const LimitConstants lc = solve_congruence(v);
    CHECK(lc.x_min.size() == v.length() - 1);
    CHECK(lc.y_min.size() == v.length() - 1);
    // C is rebuilt from x_min and the trailing-zero count, B from y_min.
    uint32_t j = 0;
    while (j < v.length() && v.word().at(v.length() - 1 - j) == 0) ++j;
    CHECK(lc.C == dyadic(static_cast<int64_t>(to_value(lc.x_min)),
                         j + v.length() - 1));
    CHECK(lc.B == dyadic(static_cast<int64_t>(to_value(lc.y_min)), 0) -
                      dyadic(int64_t(1) << j, 0) * lc.C);
    CHECK(dyadic(0, 0) < lc.C);
    CHECK(lc.C < dyadic(1, 0));
    CHECK(dyadic(0, 0) < lc.B);
  }
}

TEST_CASE("solver rejects ineligible patterns") {
  CHECK_THROWS_AS(solve_congruence(pat("1")), domain_error);
  CHECK_THROWS_AS(solve_congruence(pat("00")), domain_error);
  CHECK_THROWS_AS(solve_congruence(pat("0000")), domain_error);
}

TEST_CASE("closed form matches the solver for every pattern ending in 1") {
  for (const Pattern& v : eligible_patterns(6)) {
    if (v.word().at(v.length() - 1) != 1) continue;
    INFO("v=" << v.str());
    const LimitConstants direct = solve_congruence(v);
    const LimitConstants formula = closed_form(v);
    CHECK(formula.x_min == direct.x_min);
    CHECK(formula.y_min == direct.y_min);
    CHECK(formula.C == direct.C);
    CHECK(formula.B == direct.B);
  }
}

TEST_CASE("closed form worked examples and rejections") {
  const LimitConstants a = closed_form(pat("11"));
  CHECK(a.C == Dyadic{1, 1});
  CHECK(a.B == Dyadic{1, 1});
  const LimitConstants b = closed_form(pat("011"));
  CHECK(b.C == Dyadic{1, 1});
  CHECK(b.B == Dyadic{1, 1});
  const LimitConstants c = closed_form(pat("101"));
  CHECK(c.C == Dyadic{1, 2});
  CHECK(c.B == Dyadic{3, 2});
  // The minimal proper suffix of 1101 is 01, so the prefix is 11.
  const LimitConstants d = closed_form(pat("1101"));
  CHECK(d.x_min.str() == "010");
  CHECK(d.y_min.str() == "011");
  CHECK(d.C == Dyadic{1, 2});
  CHECK(d.B == Dyadic{11, 2});

  CHECK_THROWS_AS(closed_form(pat("10")), domain_error);
  CHECK_THROWS_AS(closed_form(pat("1")), domain_error);
}

TEST_CASE("slope bound holds for every pattern and is tight at both shapes") {
  for (const Pattern& v : eligible_patterns(6)) {
    INFO("v=" << v.str());
    CHECK(check_bound(v));
  }
  // Sharp cases: ends in 1 -> 1/2 attained; v = 10^j -> 2^{-2j} attained.
  CHECK(solve_congruence(pat("11")).C == Dyadic{1, 1});
  CHECK(solve_congruence(pat("10")).C == Dyadic{1, 2});
  CHECK(solve_congruence(pat("100")).C == Dyadic{1, 4});
  CHECK(solve_congruence(pat("1000")).C == Dyadic{1, 6});
}

TEST_CASE("linear formula along d_k matches direct computation") {
  // v = 11: d_k = 2^l (2^k + 1), value (C/2^l) d_k + B with C = B = 1/2.
  const DkReport r0 = check_dk_formula(pat("11"), 0, 6);
  REQUIRE(r0.rows.size() == 7);
  for (const DkRow& row : r0.rows) {
    CHECK(row.applicable == (row.k >= 2));
  }
  CHECK(r0.rows[2].d == 5);
  CHECK(r0.rows[2].expected == 3);
  CHECK(r0.rows[3].d == 9);
  CHECK(r0.rows[3].expected == 5);
  CHECK(r0.rows[6].d == 65);
  CHECK(r0.rows[6].expected == 33);
  CHECK(r0.all_pass());

  const DkReport r1 = check_dk_formula(pat("11"), 1, 6);
  CHECK(r1.rows[6].d == 130);
  CHECK(r1.rows[6].expected == 33);
  CHECK(r1.rows[6].actual == 33);
  CHECK(r1.all_pass());

  // Trailing zeros shift the whole family: v = 10 has j = 1.
  const DkReport r2 = check_dk_formula(pat("10"), 0, 3);
  CHECK(r2.rows[2].d == 10);
  CHECK(r2.rows[2].expected == 3);
  CHECK(r2.rows[3].d == 18);
  CHECK(r2.rows[3].expected == 5);
  CHECK(r2.all_pass());

  const DkReport r3 = check_dk_formula(pat("100"), 0, 4);
  CHECK(r3.rows[4].d == 68);
  CHECK(r3.rows[4].expected == 5);
  CHECK(r3.all_pass());

  const DkReport r4 = check_dk_formula(pat("0101"), 0, 6);
  CHECK(r4.rows[6].d == 65);
  CHECK(r4.rows[6].expected == 17);
  CHECK(r4.all_pass());

  const DkReport r5 = check_dk_formula(pat("1000"), 1, 6);
  CHECK(r5.rows[6].d == 1040);
  CHECK(r5.rows[6].expected == 9);
  CHECK(r5.all_pass());

  // Below the covered range every row is flagged not-applicable and the
  // report passes vacuously.
  const DkReport r6 = check_dk_formula(pat("11"), 0, 1);
  for (const DkRow& row : r6.rows) {
    CHECK_FALSE(row.applicable);
    CHECK_FALSE(row.pass);
  }
  CHECK(r6.all_pass());
}
