// Unit tests for the class certifier. Expected values either follow
// directly from the definitions or were frozen from an independent
// reference implementation before this code was written.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "apword/certifier.hpp"
#include "apword/errors.hpp"

using namespace apword;

namespace {

ClassKey key(const std::string& p, const std::string& s) {
  return {BinaryWord::parse(p), BinaryWord::parse(s)};
}

RunResult main_run() {
  RunConfig cfg;
  cfg.skip = main_skip_set();
  cfg.max_iter = 12;
  return run_certifier(key("1", "1"), cfg);
}

}  // namespace

TEST_CASE("check_admissible worked examples") {
  const AdmissibleCheck ok = check_admissible(key("11011", "11101"), 4, 5);
  REQUIRE(ok.ok());
  CHECK(ok.cert.sigma == BinaryWord::parse("10001"));
  CHECK(ok.cert.gamma == BinaryWord::parse("111101"));

  CHECK(check_admissible(key("11011", "11101"), 4, 9).reject ==
        AdmissibleReject::condition_a);
  CHECK(check_admissible(key("110", "011"), 2, 1).reject ==
        AdmissibleReject::condition_c);

  const AdmissibleCheck overlap = check_admissible(key("101", "101"), 2, 1);
  REQUIRE(overlap.ok());
  CHECK(overlap.cert.sigma == BinaryWord::parse("101"));
  CHECK(overlap.cert.gamma == BinaryWord::parse("1111"));
}

TEST_CASE("check_admissible rejection reasons") {
  CHECK(check_admissible(key("11011", "11101"), 4, 2).reject ==
        AdmissibleReject::preconditions);  // j even
  CHECK(check_admissible(key("11011", "11101"), 1, 1).reject ==
        AdmissibleReject::preconditions);  // i < 2
  CHECK(check_admissible(key("11011", "11101"), 5, 1).reject ==
        AdmissibleReject::preconditions);  // i = |p|
  CHECK(check_admissible(key("110111", "11101"), 3, 1).reject ==
        AdmissibleReject::preconditions);  // |p| > |s|
  CHECK(check_admissible(key("111", "111"), 2, 1).reject ==
        AdmissibleReject::overflow);
  CHECK(check_admissible(key("1010", "0011"), 2, 1).reject ==
        AdmissibleReject::condition_b);
  CHECK_THROWS_AS(check_admissible(key("011", "11"), 2, 1), domain_error);
  CHECK_THROWS_AS(check_admissible(key("11", "10"), 2, 1), domain_error);
}

TEST_CASE("main run reproduces the frozen search") {
  const RunResult r = main_run();
  CHECK(r.certificates.size() == 502);
  CHECK(r.exceptions == std::set<uint64_t>{1, 5, 7, 39});
  CHECK(r.iterations == 9);
  CHECK(r.unresolved.empty());

  const std::map<uint64_t, uint64_t> expected_step1 = {
      {1, 3},  {3, 1},  {5, 3},  {7, 5},   {11, 1}, {13, 1},
      {15, 1}, {23, 5}, {25, 1}, {27, 7},  {29, 11}, {39, 21},
      {41, 11}, {47, 1}, {53, 1}, {61, 1}, {115, 1}};
  CHECK(r.step1_values == expected_step1);

  REQUIRE(r.certificates.size() >= 5);
  const std::vector<AdmissibleCertificate> first5(r.certificates.begin(),
                                                  r.certificates.begin() + 5);
  const std::vector<AdmissibleCertificate> expected5 = {
      {key("101", "101"), 2, 1, BinaryWord::parse("101"), BinaryWord::parse("1111")},
      {key("1010", "0001"), 3, 1, BinaryWord::parse("0001"),
       BinaryWord::parse("01100")},
      {key("1011", "1001"), 3, 1, BinaryWord::parse("1001"),
       BinaryWord::parse("11101")},
      {key("1000", "0011"), 3, 1, BinaryWord::parse("0011"),
       BinaryWord::parse("01110")},
      {key("1001", "0011"), 2, 1, BinaryWord::parse("0011"),
       BinaryWord::parse("010101")}};
  CHECK(first5 == expected5);
}

TEST_CASE("main run is deterministic") {
  const RunResult a = main_run();
  const RunResult b = main_run();
  CHECK(a.certificates == b.certificates);
  CHECK(a.exceptions == b.exceptions);
  CHECK(a.unresolved == b.unresolved);
  CHECK(a.iterations == b.iterations);
  CHECK(a.step1_values == b.step1_values);
}

TEST_CASE("suffix-family runs: 28 resolved, the exact 8 unresolved") {
  uint64_t resolved = 0;
  std::set<std::pair<std::string, std::string>> unresolved;
  std::vector<AdmissibleCertificate> all_certs;
  for (const char a : {'0', '1'}) {
    for (const int k : {5, 6}) {
      RunConfig cfg;
      cfg.max_iter = 5;
      cfg.max_s2j = 1;
      const std::string s1 = std::string(1, a) + "0" + std::string(k, '1');
      const RunResult r = run_certifier(key("1", s1), cfg);
      resolved += r.certificates.size();
      for (const ClassKey& u : r.unresolved) unresolved.insert({u.p.str(), u.s.str()});
      for (const AdmissibleCertificate& c : r.certificates) all_certs.push_back(c);
    }
  }
  CHECK(resolved == 28);
  const std::set<std::pair<std::string, std::string>> expected = {
      {"10010", "0011111"},  {"11111", "0011111"},  {"10110", "1011111"},
      {"11001", "1011111"},  {"10110", "00111111"}, {"11001", "00111111"},
      {"10010", "10111111"}, {"11111", "10111111"}};
  CHECK(unresolved == expected);
  for (const AdmissibleCertificate& c : all_certs) {
    INFO("certificate (" << c.key.p.str() << "," << c.key.s.str() << ")");
    CHECK(c.j == 1);
    CHECK(replay(c).ok);
  }
}

TEST_CASE("suffix extension by 11 blocks preserves admissibility of (i,1)") {
  for (const char a : {'0', '1'}) {
    for (const int k : {5, 6}) {
      RunConfig cfg;
      cfg.max_iter = 5;
      cfg.max_s2j = 1;
      const std::string s1 = std::string(1, a) + "0" + std::string(k, '1');
      const RunResult r = run_certifier(key("1", s1), cfg);
      for (const AdmissibleCertificate& c : r.certificates) {
        for (const int l : {1, 2}) {
          const std::string longer = c.key.s.str() + std::string(2 * l, '1');
          INFO("(" << c.key.p.str() << "," << longer << ") i=" << c.i);
          CHECK(check_admissible(key(c.key.p.str(), longer), c.i, 1).ok());
        }
      }
    }
  }
}

TEST_CASE("max_iter = 0 leaves the input unresolved") {
  RunConfig cfg;
  cfg.max_iter = 0;
  const RunResult r = run_certifier(key("1", "1"), cfg);
  CHECK(r.certificates.empty());
  CHECK(r.exceptions.empty());
  CHECK(r.iterations == 0);
  REQUIRE(r.unresolved.size() == 1);
  CHECK(r.unresolved[0] == key("1", "1"));
}

TEST_CASE("class_members enumerates ascending with overlaps") {
  const std::vector<uint64_t> members = class_members(key("11011", "11101"), 11, 10);
  const std::vector<uint64_t> expected = {221, 445, 893, 1757, 1789};
  CHECK(members == expected);
  for (const uint64_t d : members) {
    const std::string ds = to_word(d).str();
    CHECK(d % 2 == 1);
    CHECK(ds.substr(0, 5) == "11011");
    CHECK(ds.substr(ds.size() - 5) == "11101");
  }
  CHECK(class_members(key("11011", "11101"), 11, 2) ==
        std::vector<uint64_t>{221, 445});
  // count_max below available members cuts off; "10"/"01" overlap in one
  // character at ell = 3 (101) and sit disjoint at ell = 4 (1001)
  CHECK(class_members(key("10", "01"), 4, 10) ==
        std::vector<uint64_t>{0b101, 0b1001});
}

TEST_CASE("every main-run certificate replays") {
  const RunResult r = main_run();
  for (const AdmissibleCertificate& c : r.certificates) {
    const ReplayResult res = replay(c);
    INFO("certificate (" << c.key.p.str() << "," << c.key.s.str()
                         << ") reason: " << res.reason);
    CHECK(res.ok);
  }
}

TEST_CASE("replay catches tampering") {
  const AdmissibleCertificate good = check_admissible(key("101", "101"), 2, 1).cert;
  CHECK(replay(good).ok);

  AdmissibleCertificate parity = good;
  parity.gamma = BinaryWord::parse("0101");  // drops the 11-count parity
  const ReplayResult via_b = replay(parity);
  CHECK(!via_b.ok);
  CHECK(via_b.reason.find("(b)") != std::string::npos);

  AdmissibleCertificate mismatch = good;
  mismatch.gamma = BinaryWord::parse("1011");  // parity intact, wrong word
  const ReplayResult via_recompute = replay(mismatch);
  CHECK(!via_recompute.ok);
  CHECK(via_recompute.reason.find("gamma") != std::string::npos);

  AdmissibleCertificate wrong_j = good;
  wrong_j.j = 4;
  CHECK(!replay(wrong_j).ok);
}

TEST_CASE("coverage of the odd differences up to 2^13") {
  const RunResult r = main_run();
  const CoverageReport report =
      coverage_check(r.certificates, r.exceptions, main_skip_set(), uint64_t{1} << 13);
  CHECK(report.class_covered == 3569);
  CHECK(report.directly_verified == 7);
  CHECK(report.gaps.empty());
  CHECK(report.ok());
}

TEST_CASE("certificate text round trip") {
  RunResult r;
  r.certificates.push_back(check_admissible(key("11011", "11101"), 4, 5).cert);
  r.certificates.push_back(check_admissible(key("101", "101"), 2, 1).cert);
  r.exceptions = {1, 5, 7, 39};
  r.unresolved.push_back(key("10010", "0011111"));
  const std::string text = certificates_to_text(r);
  CHECK(text.find("p=11011 s=11101 i=4 j=5 sigma=10001 gamma=111101\n") !=
        std::string::npos);
  CHECK(text.find("[exceptions]\n") != std::string::npos);
  CHECK(text.find("[unresolved]\np=10010 s=0011111\n") != std::string::npos);
  CHECK(text.find('\r') == std::string::npos);

  const RunResult back = certificates_from_text(text);
  CHECK(back.certificates == r.certificates);
  CHECK(back.exceptions == r.exceptions);
  CHECK(back.unresolved == r.unresolved);
  CHECK(certificates_to_text(back) == text);

  CHECK_THROWS_AS(certificates_from_text("p=11 q=3\n"), domain_error);
  CHECK_THROWS_AS(certificates_from_text("[exceptions]\nx\n"), domain_error);
}
