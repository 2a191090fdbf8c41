// Acceptance criteria 1-11: one PASS/FAIL line each.
//   acceptance [--only N ...]

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "casimir/validation.hpp"

int main(int argc, char** argv) {
  casimir::ValidationOptions opt;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0) continue;
    opt.only.push_back(std::atoi(argv[i]));
  }
  int failed = 0;
  for (const auto& r : casimir::run_validation(opt)) {
    std::printf("criterion %2d %s: %s | measured %s | target %s | %.2fs of %.0fs%s%s\n", r.id,
                r.passed ? "PASS" : "FAIL", r.name.c_str(), r.measured.c_str(), r.target.c_str(), r.seconds,
                r.time_limit, r.detail.empty() ? "" : " | ", r.detail.c_str());
    failed += !r.passed;
  }
  return failed == 0 ? 0 : 1;
}
