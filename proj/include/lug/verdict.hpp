#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lug/fraction.hpp"

namespace lug {

enum class VerdictKind { Splittable, Unsplittable, Unknown };

const char* to_string(VerdictKind kind) noexcept;

enum class ReidemeisterKind { R1, R2, R3 };

const char* to_string(ReidemeisterKind kind) noexcept;

// One simplification move. Crossing ids refer to the diagram the move was applied to;
// ports[i] is the dart of the collapsed face leaving crossings[i].
struct SimplifyStep {
  ReidemeisterKind kind;
  std::vector<int> crossings;
  std::vector<int> ports;

  friend bool operator==(const SimplifyStep&, const SimplifyStep&) = default;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  // Unsplittable certificate from a diagram: the (nonzero) linking number.
  std::optional<int> linking_number;
  // Certificate from the rational route.
  std::optional<TangleFraction> fraction;
  // Splittable certificate from a diagram: replays to a split diagram.
  std::vector<SimplifyStep> trace;
  // Search nodes spent (budget report for Unknown).
  std::size_t nodes_explored = 0;

  bool definite() const noexcept { return kind != VerdictKind::Unknown; }
};

}  // namespace lug
