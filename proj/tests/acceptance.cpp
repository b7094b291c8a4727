// Runs the acceptance checks.  With no arguments every check runs in
// order; with a single numeric argument only that check runs.  Exit
// status is 0 exactly when every executed check passes.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "apword/verify.hpp"

int main(int argc, char** argv) {
  int only = 0;
  if (argc == 2) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > int(apword::acceptance_checks().size())) {
      std::fprintf(stderr, "usage: %s [check number 1..%zu]\n", argv[0],
                   apword::acceptance_checks().size());
      return 2;
    }
  } else if (argc > 2) {
    std::fprintf(stderr, "usage: %s [check number]\n", argv[0]);
    return 2;
  }

  bool all_pass = true;
  for (const apword::AcceptanceCheck& check : apword::acceptance_checks()) {
    if (only != 0 && check.number != only) continue;
    const apword::CheckResult result = check.run();
    std::printf("[%s] %d: %s\n", result.pass ? "PASS" : "FAIL", check.number,
                check.name);
    if (!result.detail.empty()) std::printf("    %s\n", result.detail.c_str());
    if (!result.pass) all_pass = false;
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
