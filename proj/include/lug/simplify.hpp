#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lug/diagram.hpp"
#include "lug/verdict.hpp"

namespace lug {

// Crossings are removed by splicing each strand straight through; the survivors keep
// their relative order. Closed strands left without crossings become free loops.
ShadowDiagram remove_crossings(const ShadowDiagram& diagram, const std::vector<int>& doomed);

// Moves each strand of a triangular face across the opposite crossing. Crossing states
// are kept, so on resolved diagrams this is only an isotopy when r3_moves lists the face.
ShadowDiagram flip_triangle(const ShadowDiagram& diagram, const std::vector<PortRef>& darts);

std::vector<SimplifyStep> r1_moves(const ShadowDiagram& diagram);
std::vector<SimplifyStep> r2_moves(const ShadowDiagram& diagram);
std::vector<SimplifyStep> r3_moves(const ShadowDiagram& diagram);

// Throws when the step does not describe a legal move of the diagram.
ShadowDiagram apply_step(const ShadowDiagram& diagram, const SimplifyStep& step);
ShadowDiagram replay_trace(ShadowDiagram diagram, const std::vector<SimplifyStep>& trace);

// Rotation-system key, equal for diagrams that differ only by crossing and arc numbering.
std::vector<int> diagram_key(const ShadowDiagram& diagram);

struct SimplifyResult {
  ShadowDiagram diagram;
  std::vector<SimplifyStep> trace;
  std::size_t nodes = 0;
};

// Greedy R1/R2, then breadth-first over R3 moves with greedy reduction after each,
// until the budget of visited diagrams runs out. Returns the smallest diagram found
// (or the first split one when stop_when_split).
SimplifyResult simplify(const ShadowDiagram& diagram, std::size_t budget, bool stop_when_split = false);

Verdict decide_splittability(const ShadowDiagram& diagram, std::size_t budget);

}  // namespace lug
