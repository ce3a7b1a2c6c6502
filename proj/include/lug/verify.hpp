#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lug/strategy.hpp"

namespace lug {

struct VerificationReport {
  StrategyId strategy = StrategyId::Thm1UnlinkerAlways;
  Role role = Role::Unlinker;
  Role first_mover = Role::Unlinker;
  std::size_t lines = 0;
  std::size_t wins = 0;
  std::size_t losses = 0;
  std::size_t unknown = 0;
  std::size_t splittable = 0;
  std::size_t unsplittable = 0;
  // Lines where the Linker's NSI response left |plk| != 1 (sign strategies only).
  std::size_t plk_violations = 0;
  std::size_t dispatcher_errors = 0;
  // First few offending lines, as full move sequences.
  std::vector<std::vector<Move>> loss_lines;
  std::vector<std::vector<Move>> plk_violation_lines;
  std::vector<std::string> errors;

  bool passed() const noexcept {
    return losses == 0 && unknown == 0 && plk_violations == 0 && dispatcher_errors == 0;
  }
};

inline constexpr std::size_t kKeptLines = 16;

// Plays the strategy against every opponent move sequence. Throws Inapplicable when
// the strategy's hypothesis or turn order does not hold for the config.
VerificationReport verify_strategy(StrategyId id, const GameConfig& config, Mutation mutation = Mutation::None);

}  // namespace lug
