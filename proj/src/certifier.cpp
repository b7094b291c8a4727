#include "apword/certifier.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <utility>

#include "apword/apsolver.hpp"
#include "apword/errors.hpp"
#include "apword/patseq.hpp"

namespace apword {
namespace {

const BinaryWord& word_11() {
  static const BinaryWord w = BinaryWord::parse("11");
  return w;
}

BinaryWord suffix_word(const BinaryWord& w, size_t n) {
  BinaryWord out;
  for (size_t k = w.size() - n; k < w.size(); ++k) {
    out.letters.push_back(w.at(k));
  }
  return out;
}

void check_key(const ClassKey& key) {
  if (key.p.empty() || key.p.at(0) != 1) {
    throw domain_error("class prefix must be nonempty and start with 1");
  }
  if (key.s.empty() || key.s.at(key.s.size() - 1) != 1) {
    throw domain_error("class suffix must be nonempty and end with 1");
  }
}

// Length-|s| suffix of the expansion of j [s]_2, left-padded with zeros.
BinaryWord sigma_for(const BinaryWord& s, uint64_t j) {
  const uint64_t sv = to_value(s);
  if (std::bit_width(j) + std::bit_width(sv) > 63) {
    throw capacity_error("class words too long for certificate arithmetic");
  }
  const BinaryWord js = to_word(j * sv);
  if (js.size() >= s.size()) return suffix_word(js, s.size());
  return pad_left(js, s.size());
}

bool matches_class(const std::string& dstr, const ClassKey& key) {
  const std::string p = key.p.str();
  const std::string s = key.s.str();
  return dstr.size() >= std::max(p.size(), s.size()) &&
         dstr.compare(0, p.size(), p) == 0 &&
         dstr.compare(dstr.size() - s.size(), s.size(), s) == 0;
}

uint64_t a_from_zero(uint64_t d) {
  return ap_from(SequenceHandle::rudin_shapiro(), 0, d);
}

}  // namespace

AdmissibleCheck check_admissible(const ClassKey& key, uint64_t i, uint64_t j) {
  check_key(key);
  AdmissibleCheck out;
  const uint64_t lp = key.p.size();
  const uint64_t ls = key.s.size();
  if (j % 2 == 0 || i < 2 || i >= lp || lp > ls) {
    out.reject = AdmissibleReject::preconditions;
    return out;
  }
  if (lp + ls > 62) {
    throw capacity_error("class words too long for certificate arithmetic");
  }
  const uint64_t lj = std::bit_width(j);
  // (a): j, scaled to align leading digits, stays strictly below p.
  if (!(lj < i - 1 || (lj == i - 1 && (j << lp) < (to_value(key.p) << lj)))) {
    out.reject = AdmissibleReject::condition_a;
    return out;
  }
  const BinaryWord sigma = sigma_for(key.s, j);
  const uint64_t shift = lp - i;
  const uint64_t gamma_len = ls + shift;
  BinaryWord sigma_shifted = sigma;
  sigma_shifted.letters.insert(sigma_shifted.letters.end(), shift, uint8_t{0});
  const AddResult sum = add_words(key.p, sigma_shifted);
  if (sum.sum.size() > gamma_len) {
    out.reject = AdmissibleReject::overflow;
    return out;
  }
  const BinaryWord gamma = pad_left(sum.sum, gamma_len);
  // (c): the carry entering sigma's leftmost digit (position gamma_len - 1
  // from the least significant end) must be zero.
  if (sum.carries.bits.at(gamma_len - 1) != 0) {
    out.reject = AdmissibleReject::condition_c;
    return out;
  }
  // (b): total occurrence count of 11 across p, sigma, gamma is odd.
  const uint64_t c11 = count_subword(key.p, word_11()) +
                       count_subword(sigma, word_11()) +
                       count_subword(gamma, word_11());
  if (c11 % 2 != 1) {
    out.reject = AdmissibleReject::condition_b;
    return out;
  }
  out.cert = AdmissibleCertificate{key, i, j, sigma, gamma};
  return out;
}

namespace {

std::optional<AdmissibleCertificate> first_admissible(
    const ClassKey& key, const std::optional<uint64_t>& max_s2j) {
  const uint64_t lp = key.p.size();
  for (uint64_t i = 2; i < lp; ++i) {
    // Condition (a) already fails for ell(j) > i - 1, so the j loop can
    // stop there.
    for (uint64_t j = 1; std::bit_width(j) <= i - 1; j += 2) {
      if (max_s2j && static_cast<uint64_t>(std::popcount(j)) > *max_s2j) continue;
      AdmissibleCheck chk = check_admissible(key, i, j);
      if (chk.ok()) return std::move(chk.cert);
    }
  }
  return std::nullopt;
}

bool is_prefix(const BinaryWord& p, const BinaryWord& s) {
  if (p.size() > s.size()) return false;
  for (size_t k = 0; k < p.size(); ++k) {
    if (p.at(k) != s.at(k)) return false;
  }
  return true;
}

BinaryWord extended(const BinaryWord& w, uint8_t letter, bool front) {
  BinaryWord out;
  if (front) {
    out.letters.push_back(letter);
    out.letters.insert(out.letters.end(), w.letters.begin(), w.letters.end());
  } else {
    out = w;
    out.letters.push_back(letter);
  }
  return out;
}

}  // namespace

RunResult run_certifier(const ClassKey& input, const RunConfig& cfg) {
  check_key(input);
  RunResult out;
  if (cfg.max_iter == 0) {
    out.unresolved.push_back(input);
    return out;
  }
  std::set<std::pair<std::string, std::string>> skip;
  for (const ClassKey& k : cfg.skip) skip.insert({k.p.str(), k.s.str()});

  std::vector<ClassKey> frontier{input};
  while (!frontier.empty() && out.iterations < cfg.max_iter) {
    ++out.iterations;
    std::vector<ClassKey> next;
    std::vector<ClassKey> failed;
    for (const ClassKey& key : frontier) {
      if (skip.count({key.p.str(), key.s.str()})) continue;
      if (is_prefix(key.p, key.s)) {
        const uint64_t d = to_value(key.s);
        auto [it, inserted] = out.step1_values.try_emplace(d, 0);
        if (inserted) it->second = a_from_zero(d);
        if (2 * it->second >= d) out.exceptions.insert(d);
      }
      std::optional<AdmissibleCertificate> hit = first_admissible(key, cfg.max_s2j);
      if (hit) {
        out.certificates.push_back(std::move(*hit));
        continue;
      }
      failed.push_back(key);
      if (cfg.branch == BranchVariant::prefix_only_when_shorter &&
          key.p.size() < key.s.size()) {
        next.push_back({extended(key.p, 0, false), key.s});
        next.push_back({extended(key.p, 1, false), key.s});
      } else {
        for (uint8_t a : {0, 1}) {
          for (uint8_t b : {0, 1}) {
            next.push_back({extended(key.p, a, false), extended(key.s, b, true)});
          }
        }
      }
    }
    frontier.swap(next);
    if (out.iterations == cfg.max_iter && !frontier.empty()) {
      out.unresolved = std::move(failed);
    }
  }
  return out;
}

std::vector<ClassKey> main_skip_set() {
  std::vector<ClassKey> skip;
  skip.push_back({BinaryWord::parse("100"), BinaryWord::parse("001")});
  skip.push_back({BinaryWord::parse("100000"), BinaryWord::parse("111101")});
  for (uint32_t u = 0; u < 16; ++u) {
    std::string p = "1";
    for (int k = 3; k >= 0; --k) p += ((u >> k) & 1) ? '1' : '0';
    skip.push_back({BinaryWord::parse(p), BinaryWord::parse("11111")});
  }
  return skip;
}

std::vector<uint64_t> class_members(const ClassKey& key, uint32_t ell_max,
                                    size_t count_max) {
  check_key(key);
  std::vector<uint64_t> out;
  const std::string p = key.p.str();
  const std::string s = key.s.str();
  const uint32_t lp = static_cast<uint32_t>(p.size());
  const uint32_t ls = static_cast<uint32_t>(s.size());
  if (ell_max > 62) throw capacity_error("class members beyond 62 digits");
  for (uint32_t ell = std::max(lp, ls); ell <= ell_max && out.size() < count_max;
       ++ell) {
    if (ell < lp + ls) {
      // p and s overlap; the class has at most one member of this length.
      const uint32_t t = lp + ls - ell;
      if (p.compare(lp - t, t, s, 0, t) == 0) {
        out.push_back(to_value(BinaryWord::parse(p + s.substr(t))));
      }
    } else {
      const uint32_t free_len = ell - lp - ls;
      const uint64_t hi = to_value(key.p);
      const uint64_t lo = to_value(key.s);
      for (uint64_t mid = 0; mid >> free_len == 0 && out.size() < count_max; ++mid) {
        out.push_back((((hi << free_len) | mid) << ls) | lo);
      }
    }
  }
  return out;
}

ReplayResult replay(const AdmissibleCertificate& cert) {
  // (b) first, from the stored words alone: any tampering with gamma or
  // sigma that changes the 11-count parity is caught before recomputation.
  const uint64_t c11 = count_subword(cert.key.p, word_11()) +
                       count_subword(cert.sigma, word_11()) +
                       count_subword(cert.gamma, word_11());
  if (c11 % 2 != 1) return {false, "condition (b) fails on the stored words"};
  AdmissibleCheck chk;
  try {
    chk = check_admissible(cert.key, cert.i, cert.j);
  } catch (const std::exception& e) {
    return {false, std::string("malformed certificate: ") + e.what()};
  }
  switch (chk.reject) {
    case AdmissibleReject::none:
      break;
    case AdmissibleReject::preconditions:
      return {false, "preconditions fail"};
    case AdmissibleReject::condition_a:
      return {false, "condition (a) fails"};
    case AdmissibleReject::overflow:
      return {false, "gamma overflows its digit count"};
    case AdmissibleReject::condition_c:
      return {false, "condition (c) fails"};
    case AdmissibleReject::condition_b:
      return {false, "condition (b) fails on recomputation"};
  }
  if (chk.cert.sigma != cert.sigma) return {false, "stored sigma mismatch"};
  if (chk.cert.gamma != cert.gamma) return {false, "stored gamma mismatch"};
  // Numeric spot check on the smallest class members: the certificate
  // implies a color change strictly before d/2 steps, witnessed at one of
  // the indices d, jd, fd with f = 2^{ell(d)-i} j + 1.  Condition (a)
  // forces 2f < d whenever ell(d) exceeds the prefix length; the one
  // possible violator is the full-overlap member d = [s]_2 of a class with
  // p = s, which the certification run covers by direct evaluation rather
  // than by the certificate, so it is skipped here.
  const SequenceHandle r = SequenceHandle::rudin_shapiro();
  for (uint64_t d : class_members(cert.key, 24, 50)) {
    const uint32_t ell = digit_stats(d).ell;
    const uint64_t f = (cert.j << (ell - cert.i)) + 1;
    if (2 * f >= d) continue;
    if (r.color(d) != 1 && r.color(cert.j * d) != 1 && r.color(f * d) != 1) {
      return {false, "spot check: colors all 0 at d = " + std::to_string(d)};
    }
  }
  return {true, ""};
}

CoverageReport coverage_check(const std::vector<AdmissibleCertificate>& certs,
                              const std::set<uint64_t>& exceptions,
                              const std::vector<ClassKey>& skip, uint64_t d_max) {
  CoverageReport report;
  for (uint64_t d = 1; d <= d_max; d += 2) {
    if (exceptions.count(d)) continue;
    const std::string dstr = to_word(d).str();
    bool skipped = false;
    for (const ClassKey& k : skip) {
      if (matches_class(dstr, k)) {
        skipped = true;
        break;
      }
    }
    if (skipped) continue;
    bool matched = false;
    for (const AdmissibleCertificate& c : certs) {
      if (matches_class(dstr, c.key)) {
        matched = true;
        break;
      }
    }
    const bool small = 2 * a_from_zero(d) < d;
    if (matched && small) {
      ++report.class_covered;
    } else if (small) {
      ++report.directly_verified;
    } else {
      report.gaps.push_back(d);
    }
  }
  return report;
}

std::string certificates_to_text(const RunResult& result) {
  std::string out;
  for (const AdmissibleCertificate& c : result.certificates) {
    out += "p=" + c.key.p.str() + " s=" + c.key.s.str() +
           " i=" + std::to_string(c.i) + " j=" + std::to_string(c.j) +
           " sigma=" + c.sigma.str() + " gamma=" + c.gamma.str() + "\n";
  }
  out += "[exceptions]\n";
  for (uint64_t d : result.exceptions) out += std::to_string(d) + "\n";
  out += "[unresolved]\n";
  for (const ClassKey& k : result.unresolved) {
    out += "p=" + k.p.str() + " s=" + k.s.str() + "\n";
  }
  return out;
}

namespace {

// Splits "key=value" tokens of one record line into a field map.
std::map<std::string, std::string> parse_fields(const std::string& line) {
  std::map<std::string, std::string> fields;
  std::istringstream in(line);
  std::string token;
  while (in >> token) {
    const size_t eq = token.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw domain_error("malformed certificate line: " + line);
    }
    fields[token.substr(0, eq)] = token.substr(eq + 1);
  }
  return fields;
}

uint64_t parse_nat(const std::string& text) {
  try {
    size_t used = 0;
    const uint64_t value = std::stoull(text, &used);
    if (used != text.size()) throw domain_error("");
    return value;
  } catch (const std::exception&) {
    throw domain_error("malformed number in certificate file: " + text);
  }
}

}  // namespace

RunResult certificates_from_text(const std::string& text) {
  RunResult out;
  enum class Section { certificates, exceptions, unresolved };
  Section section = Section::certificates;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line == "[exceptions]") {
      section = Section::exceptions;
      continue;
    }
    if (line == "[unresolved]") {
      section = Section::unresolved;
      continue;
    }
    switch (section) {
      case Section::certificates: {
        const auto fields = parse_fields(line);
        for (const char* need : {"p", "s", "i", "j", "sigma", "gamma"}) {
          if (!fields.count(need)) {
            throw domain_error(std::string("certificate line lacks field ") + need);
          }
        }
        out.certificates.push_back(AdmissibleCertificate{
            ClassKey{BinaryWord::parse(fields.at("p")),
                     BinaryWord::parse(fields.at("s"))},
            parse_nat(fields.at("i")), parse_nat(fields.at("j")),
            BinaryWord::parse(fields.at("sigma")),
            BinaryWord::parse(fields.at("gamma"))});
        break;
      }
      case Section::exceptions:
        out.exceptions.insert(parse_nat(line));
        break;
      case Section::unresolved: {
        const auto fields = parse_fields(line);
        if (!fields.count("p") || !fields.count("s")) {
          throw domain_error("unresolved line lacks p or s: " + line);
        }
        out.unresolved.push_back(ClassKey{BinaryWord::parse(fields.at("p")),
                                          BinaryWord::parse(fields.at("s"))});
        break;
      }
    }
  }
  return out;
}

}  // namespace apword
