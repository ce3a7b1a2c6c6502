#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lug {

struct AcceptanceOptions {
  std::string data_dir = "data";
  std::uint64_t seed = 20240611;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::string summary;
  std::vector<std::string> details;  // mismatches and separately reported exclusions
};

std::vector<int> acceptance_ids();
CriterionResult run_criterion(int id, const AcceptanceOptions& options);

}  // namespace lug
