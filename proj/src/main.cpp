// Command-line surface: table generation, verification suites, certifier
// runs, limit-constant reports, and distribution data emission.
#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "apword/apsolver.hpp"
#include "apword/binwords.hpp"
#include "apword/certifier.hpp"
#include "apword/constants.hpp"
#include "apword/errors.hpp"
#include "apword/patseq.hpp"
#include "apword/verify.hpp"

namespace {

using namespace apword;

// Writes text to the path, or to standard output when the path is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Pattern> parse_patterns(const std::vector<std::string>& raw) {
  std::vector<Pattern> out;
  out.reserve(raw.size());
  for (const std::string& s : raw) out.push_back(Pattern::parse(s));
  return out;
}

int cmd_table(const std::string& kind, const std::vector<std::string>& raw,
              uint64_t d_max, int threads, const std::string& out_path) {
  const ApTable table =
      build_table(parse_patterns(raw), kind == "global", d_max, threads);
  emit(out_path, table_to_csv(table));
  return 0;
}

int cmd_verify(const std::string& suite, const std::vector<uint64_t>& stages) {
  CheckResult result;
  std::string name;
  if (suite == "main1") {
    name = "from-zero trichotomy for the pair pattern";
    result = check_pair_from_zero_trichotomy();
  } else {
    name = "global values at 2^k +- 1 for the pair pattern";
    if (stages.empty()) {
      result = check_pair_global_near_powers();
    } else {
      // Same expected values, computed with the caller's stage thresholds.
      StageThresholds st;
      st.first = stages[0];
      st.second = stages[1];
      const Pattern r = Pattern::parse("11");
      const uint64_t plus[10] = {5, 6, 9, 10, 18, 34, 66, 130, 258, 514};
      const uint64_t minus[10] = {4, 5, 9, 10, 19, 33, 67, 129, 259, 513};
      result.pass = true;
      for (uint32_t k = 1; k <= 10; ++k) {
        const uint64_t dp = (uint64_t(1) << k) + 1;
        const uint64_t dm = (uint64_t(1) << k) - 1;
        const uint64_t got_p = ap_global_staged(r, dp, st);
        const uint64_t got_m = ap_global_staged(r, dm, st);
        if (got_p != plus[k - 1] || got_m != minus[k - 1]) {
          result.pass = false;
          result.detail += "k=" + std::to_string(k) + " got (" +
                           std::to_string(got_p) + "," + std::to_string(got_m) +
                           ") want (" + std::to_string(plus[k - 1]) + "," +
                           std::to_string(minus[k - 1]) + "); ";
        }
      }
      if (result.pass) result.detail = "staged thresholds verified";
    }
  }
  std::printf("[%s] %s\n", result.pass ? "PASS" : "FAIL", name.c_str());
  if (!result.detail.empty()) std::printf("    %s\n", result.detail.c_str());
  return result.pass ? 0 : 1;
}

std::vector<ClassKey> parse_skip_file(const std::string& path) {
  std::istringstream in(slurp(path));
  std::vector<ClassKey> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string p, s;
    if (!(fields >> p >> s)) {
      throw std::runtime_error("bad skip line in " + path + ": " + line);
    }
    out.push_back({BinaryWord::parse(p), BinaryWord::parse(s)});
  }
  return out;
}

int cmd_certify(const std::string& root_p, const std::string& root_s,
                const std::string& skip_file, uint64_t max_iter,
                int64_t max_s2j, const std::string& branch,
                const std::string& out_path, const std::string& replay_path) {
  if (!replay_path.empty()) {
    const RunResult stored = certificates_from_text(slurp(replay_path));
    uint64_t ok = 0;
    for (const AdmissibleCertificate& cert : stored.certificates) {
      const ReplayResult r = replay(cert);
      if (r.ok) {
        ++ok;
      } else {
        std::printf("replay failed: p=%s s=%s i=%llu j=%llu (%s)\n",
                    cert.key.p.str().c_str(), cert.key.s.str().c_str(),
                    (unsigned long long)cert.i, (unsigned long long)cert.j,
                    r.reason.c_str());
      }
    }
    std::printf("replayed %llu/%zu certificates ok, %zu exceptions, "
                "%zu unresolved\n",
                (unsigned long long)ok, stored.certificates.size(),
                stored.exceptions.size(), stored.unresolved.size());
    return ok == stored.certificates.size() ? 0 : 1;
  }

  RunConfig cfg;
  cfg.max_iter = max_iter;
  if (max_s2j >= 0) cfg.max_s2j = uint64_t(max_s2j);
  cfg.branch = branch == "quad" ? BranchVariant::quad
                                : BranchVariant::prefix_only_when_shorter;
  if (!skip_file.empty()) {
    cfg.skip = parse_skip_file(skip_file);
  } else if (root_p == "1" && root_s == "1") {
    cfg.skip = main_skip_set();  // the standard exclusions for the full run
  }
  const ClassKey root{BinaryWord::parse(root_p), BinaryWord::parse(root_s)};
  const RunResult run = run_certifier(root, cfg);
  emit(out_path, certificates_to_text(run));

  std::printf("iterations: %llu\n", (unsigned long long)run.iterations);
  std::printf("certified classes: %zu\n", run.certificates.size());
  std::string exc;
  for (uint64_t d : run.exceptions) {
    if (!exc.empty()) exc += ", ";
    exc += std::to_string(d);
  }
  std::printf("exceptional differences: {%s}\n", exc.c_str());
  std::printf("unresolved classes: %zu\n", run.unresolved.size());
  for (const ClassKey& key : run.unresolved) {
    std::printf("  p=%s s=%s\n", key.p.str().c_str(), key.s.str().c_str());
  }
  if (!out_path.empty()) std::printf("certificates written to %s\n", out_path.c_str());
  return 0;
}

int cmd_constants(uint32_t max_len) {
  std::printf("%-8s %-8s %-8s %-8s %s\n", "v", "x_min", "y_min", "C", "B");
  for (const Pattern& v : eligible_patterns(max_len)) {
    const LimitConstants lc = solve_congruence(v);
    std::printf("%-8s %-8s %-8s %-8s %s\n", v.str().c_str(),
                lc.x_min.str().c_str(), lc.y_min.str().c_str(),
                to_string(lc.C).c_str(), to_string(lc.B).c_str());
  }
  return 0;
}

int cmd_hist(const std::string& kind, const std::string& raw_pattern,
             uint64_t d_max, int threads, const std::string& out_path) {
  const Pattern v = Pattern::parse(raw_pattern);
  std::string csv;
  if (kind == "scatter") {
    // One row per difference: d and log2 of the value-to-difference ratio.
    csv = "d,log2_ratio\n";
    const SequenceHandle h = SequenceHandle::pattern(v);
    for (uint64_t d = 1; d <= d_max; ++d) {
      const uint64_t a = ap_from(h, 0, d);
      char buf[64];
      std::snprintf(buf, sizeof buf, "%llu,%.6f\n", (unsigned long long)d,
                    std::log2(double(a) / double(d)));
      csv += buf;
    }
  } else {
    // Frequency of each attained value over d = 1..d_max.
    std::map<uint64_t, uint64_t> counts;
    if (kind == "from_zero") {
      const SequenceHandle h = SequenceHandle::pattern(v);
      for (uint64_t d = 1; d <= d_max; ++d) ++counts[ap_from(h, 0, d)];
    } else if (d_max >= 1) {
      const ApTable table = build_table({v}, true, d_max, threads);
      for (uint64_t a : table.values[0]) ++counts[a];
    }
    csv = "value,count\n";
    for (const auto& [value, count] : counts) {
      csv += std::to_string(value) + "," + std::to_string(count) + "\n";
    }
  }
  emit(out_path, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monochromatic arithmetic progressions in binary pattern "
               "sequences: tables, verification, certification, constants"};
  app.require_subcommand(1);

  std::vector<std::string> patterns;
  uint64_t d_max = 1;
  int threads = 0;
  std::string out_path;

  CLI::App* table = app.add_subcommand(
      "table", "write a CSV of A_v(0,d) or A_v(d) values for d = 1..dmax");
  std::string table_kind;
  table->add_option("kind", table_kind, "value kind")
      ->required()
      ->check(CLI::IsMember({"from_zero", "global"}));
  table->add_option("--pattern", patterns, "pattern (repeatable)")->required();
  table->add_option("--dmax", d_max, "largest difference")
      ->required()
      ->check(CLI::PositiveNumber);
  table->add_option("--threads", threads, "worker threads (0 = default)");
  table->add_option("--out", out_path, "output path (default: stdout)");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  std::vector<uint64_t> stages;
  verify->add_option("--suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"main1", "main2main3"}));
  verify
      ->add_option("--stages", stages,
                   "two escalation thresholds for the staged solver")
      ->expected(2)
      ->delimiter(',');

  CLI::App* certify = app.add_subcommand(
      "certify", "run the class certification and write the certificates");
  std::string root_p = "1", root_s = "1", skip_file, branch = "prefix",
              replay_path;
  uint64_t max_iter = 12;
  int64_t max_s2j = -1;
  certify->add_option("--root-p", root_p, "prefix of the input class");
  certify->add_option("--root-s", root_s, "suffix of the input class");
  certify->add_option("--skip-file", skip_file,
                      "file of classes to exclude, one 'p s' pair per line "
                      "(default for the (1,1) run: the standard exclusions)");
  certify->add_option("--max-iter", max_iter, "iteration cap");
  certify->add_option("--max-s2j", max_s2j,
                      "cap on the binary digit sum of j (negative = none)");
  certify->add_option("--branch-variant", branch, "frontier branching rule")
      ->check(CLI::IsMember({"prefix", "quad"}));
  certify->add_option("--out", out_path, "certificate file (default: stdout)");
  certify->add_option("--replay", replay_path,
                      "re-verify a stored certificate file instead of running");

  CLI::App* constants = app.add_subcommand(
      "constants", "print limit slopes and intercepts (C, B) per pattern");
  uint32_t max_len = 4;
  constants->add_option("max_len", max_len, "largest pattern length (2..8)")
      ->required()
      ->check(CLI::Range(2u, 8u));

  CLI::App* hist = app.add_subcommand(
      "hist", "write value-distribution CSV data for one pattern");
  std::string hist_kind, hist_pattern;
  uint64_t hist_dmax = 0;
  hist->add_option("kind", hist_kind, "value kind")
      ->required()
      ->check(CLI::IsMember({"from_zero", "global", "scatter"}));
  hist->add_option("--pattern", hist_pattern, "pattern")->required();
  hist->add_option("--dmax", hist_dmax, "largest difference (0 = empty)");
  hist->add_option("--threads", threads, "worker threads (0 = default)");
  hist->add_option("--out", out_path, "output path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (table->parsed()) {
      return cmd_table(table_kind, patterns, d_max, threads, out_path);
    }
    if (verify->parsed()) return cmd_verify(suite, stages);
    if (certify->parsed()) {
      return cmd_certify(root_p, root_s, skip_file, max_iter, max_s2j, branch,
                         out_path, replay_path);
    }
    if (constants->parsed()) return cmd_constants(max_len);
    if (hist->parsed()) {
      return cmd_hist(hist_kind, hist_pattern, hist_dmax, threads, out_path);
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
