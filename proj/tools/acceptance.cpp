#include <algorithm>
#include <cstdio>
#include <thread>

#include "qcactus/suites/suites.hpp"

int main() {
  using namespace qcactus::suites;
  const int jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  const std::vector<Check> checks = acceptance_checks(jobs);
  for (const Check& c : checks) {
    std::printf("%s  %s  (%.2fs)\n", c.status == Status::Fail ? "FAIL" : "PASS", c.name.c_str(), c.wall_time);
    if (c.status == Status::Fail) std::printf("      witness: %s\n", c.witness.dump().c_str());
  }
  return all_passed(checks) ? 0 : 1;
}
