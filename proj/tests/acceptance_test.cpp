#include "tropgw/verify.hpp"

#include <cstdio>
#include <cstring>

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  int failed = 0;
  tropgw::run_acceptance(quick ? tropgw::Budget::Quick : tropgw::Budget::Full, [&](const tropgw::CheckResult& r) {
    std::printf("%s: %s (%s, %.2fs)\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str(), r.seconds);
    std::fflush(stdout);
    if (!r.passed) ++failed;
  });
  return failed == 0 ? 0 : 1;
}
