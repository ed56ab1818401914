// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <cstdio>

#include "xho/verify.hpp"

int main() {
  bool all = true;
  double total = 0.0;
  auto emit = [&](const xho::verify::CheckResult& r) {
    std::printf("[%s] %-34s (%6.2f s) %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                r.seconds, r.note.c_str());
    std::fflush(stdout);
    all = all && r.pass;
    total += r.seconds;
  };
  xho::verify::run_acceptance(emit);
  std::printf("%s in %.2f s\n", all ? "all criteria passed" : "FAILURES above", total);
  return all ? 0 : 1;
}
