// One PASS/FAIL line per acceptance criterion; exit 1 if any fails.
#include <cstdio>

#include "twocat/verify.hpp"

int main() {
  using namespace twocat;
  bool all = true;
  double total = 0;
  for (const auto& name : suite_names()) {
    auto s = run_suite(name);
    total += s.seconds;
    all = all && s.ok();
    std::printf("%s %2d %-20s %zu/%zu checks  %.2fs  %s\n", s.ok() ? "PASS" : "FAIL", s.criterion, s.name.c_str(),
                s.passed(), s.checks.size(), s.seconds, s.title.c_str());
    for (const auto& c : s.checks)
      if (!c.pass) std::printf("     - %s: %s\n", c.id.c_str(), c.counterexample.c_str());
    std::fflush(stdout);
  }
  std::printf("%s (%.1fs)\n", all ? "all criteria pass" : "some criteria FAIL", total);
  return all ? 0 : 1;
}
