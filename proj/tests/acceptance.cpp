// Acceptance gate: one line per criterion, nonzero exit when any fails.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <thread>

#include "specq/verify_suite.hpp"

int main(int argc, char** argv) {
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  for (int i = 1; i + 1 < argc; ++i)
    if (std::strcmp(argv[i], "--jobs") == 0) jobs = std::atoi(argv[i + 1]);
  if (jobs < 1) jobs = 1;

  bool all_pass = true;
  for (const auto& r : specq::run_acceptance(jobs)) {
    std::printf("[%d/9] %-34s %s  (%lld ms)\n", r.index, r.name.c_str(),
                r.pass ? "pass" : "FAIL", r.elapsed_ms);
    if (!r.detail.empty()) std::printf("      %s\n", r.detail.c_str());
    all_pass = all_pass && r.pass;
  }
  std::printf("%s\n", all_pass ? "acceptance: all criteria pass" : "acceptance: FAILURES above");
  return all_pass ? 0 : 1;
}
