// Compares the OpenMP kernels against their serial reference
// implementations on identical inputs: the direct progression scan and
// table construction.  Outputs agree by construction; this reports wall
// times and the observed ratio.  --quick shrinks the sizes for use as a
// smoke test.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "apword/apsolver.hpp"
#include "apword/patseq.hpp"

namespace {

double seconds(const std::chrono::steady_clock::time_point& a,
               const std::chrono::steady_clock::time_point& b) {
  return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  const auto t1 = std::chrono::steady_clock::now();
  return seconds(t0, t1);
}

void report(const char* name, double serial, double parallel, bool equal) {
  std::printf("%-28s serial %8.3fs  parallel %8.3fs  ratio %5.2fx  %s\n",
              name, serial, parallel, parallel > 0 ? serial / parallel : 0.0,
              equal ? "outputs equal" : "OUTPUT MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;
  }

  using namespace apword;
  int status = 0;

  {
    const Pattern v = Pattern::parse("11");
    const uint64_t d = 39;
    const uint64_t n_max = quick ? (uint64_t(1) << 18) : (uint64_t(1) << 22);
    uint64_t serial_val = 0, parallel_val = 0;
    const double ts = timed([&] { serial_val = oracle_scan_serial(v, d, n_max); });
    const double tp = timed([&] { parallel_val = oracle_scan(v, d, n_max); });
    const bool equal = serial_val == parallel_val;
    if (!equal) status = 1;
    std::printf("direct scan: pattern 11, d=%llu, n < 2^%d, max = %llu\n",
                (unsigned long long)d, quick ? 18 : 22,
                (unsigned long long)serial_val);
    report("  oracle_scan", ts, tp, equal);
  }

  {
    const std::vector<Pattern> pats = {Pattern::parse("11"), Pattern::parse("1"),
                                       Pattern::parse("101")};
    const uint64_t d_max = quick ? 64 : 512;
    ApTable serial_tab, parallel_tab;
    const double ts =
        timed([&] { serial_tab = build_table_serial(pats, true, d_max); });
    const double tp =
        timed([&] { parallel_tab = build_table(pats, true, d_max, 0); });
    const bool equal = serial_tab == parallel_tab;
    if (!equal) status = 1;
    std::printf("global table: 3 patterns, d <= %llu\n",
                (unsigned long long)d_max);
    report("  build_table", ts, tp, equal);
  }

  if (status != 0) std::printf("FAILURE: kernel disagrees with reference\n");
  return status;
}
