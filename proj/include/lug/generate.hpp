#pragma once

#include <random>

#include "lug/diagram.hpp"

namespace lug {

using Rng = std::mt19937_64;

// Inserts a kink on the arc leaving through dart; the loop lies on the dart's left when left is true.
ShadowDiagram insert_kink(const ShadowDiagram& diagram, int arc, bool left);
// Pushes a finger of the arc along dart a across the arc along dart b; both darts bound the same face.
ShadowDiagram insert_finger(const ShadowDiagram& diagram, PortRef a, PortRef b);

// Random unresolved shadow with the given component count (1 or 2) and at most max_crossings
// crossings, grown from a small seed by kinks, finger moves and triangle flips.
ShadowDiagram random_shadow(Rng& rng, int components, int max_crossings);
ShadowDiagram random_resolution(const ShadowDiagram& shadow, Rng& rng);

}  // namespace lug
