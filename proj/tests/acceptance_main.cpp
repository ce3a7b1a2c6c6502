#include <cstdio>
#include <cstdlib>
#include <string>

#include "lug/acceptance.hpp"

int main(int argc, char** argv) {
  lug::AcceptanceOptions opt;
  opt.data_dir = LUG_DATA_DIR;
  std::vector<int> ids = lug::acceptance_ids();
  if (argc > 1) {
    ids.clear();
    for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  }
  int failed = 0;
  for (int id : ids) {
    const auto r = lug::run_criterion(id, opt);
    std::printf("%s criterion %d (%s): %s [%.2fs / %.0fs]\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(),
                r.summary.c_str(), r.seconds, r.limit_seconds);
    for (const auto& d : r.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
    if (!r.passed) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
