// Acceptance suite runner: one pass/fail line per criterion.
#include <cstdio>

#include "core/selftest.hpp"

int main() {
  int failed = g31::run_acceptance([](const std::string& line) {
    std::puts(line.c_str());
    std::fflush(stdout);
  });
  if (failed) {
    std::printf("%d criterion(s) FAILED\n", failed);
    return 1;
  }
  std::puts("all criteria passed");
  return 0;
}
