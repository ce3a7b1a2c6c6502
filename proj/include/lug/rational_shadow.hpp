#pragma once

#include "lug/diagram.hpp"
#include "lug/tangle.hpp"

namespace lug {

// Twists two vertical strands syllable by syllable and closes the result.
// Resolved crossings of a syllable come first, signed by its net; the rest are unresolved.
ShadowDiagram build_rational_shadow(const PseudoTangleWord& word, ClosureKind closure,
                                    bool require_two_components = false);

}  // namespace lug
