// Runs every acceptance criterion and prints one line per criterion.

#include "prymal/acceptance.hpp"

#include <cstdio>

int main() {
  const prymal::Report report = prymal::run_acceptance();
  for (const auto& c : report.criteria) {
    std::printf("criterion %d [%s] %s (%.3f s, limit %.0f s)\n", c.id, c.passed() ? "PASS" : "FAIL", c.title.c_str(),
                c.seconds, c.limit_seconds);
    if (!c.error.empty()) std::printf("    error: %s\n", c.error.c_str());
    for (const auto* f : c.failures())
      std::printf("    %s: expected %s, computed %s\n", f->name.c_str(), f->expected.c_str(), f->computed.c_str());
    if (!c.within_limit()) std::printf("    over the time limit\n");
  }
  std::printf("%s\n", report.passed() ? "all criteria pass" : "some criteria fail");
  return report.passed() ? 0 : 1;
}
