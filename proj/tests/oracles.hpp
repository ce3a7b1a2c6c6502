#pragma once

// Independent reference computations used to cross-check the library.

#include <functional>
#include <vector>

#include "lug/diagram.hpp"
#include "lug/tangle.hpp"

namespace oracle {

using lug::PseudoTangleWord;

// Every fully unresolved word with 1..max_len syllables of size 0..max_size.
void for_each_size_word(int max_len, int max_size, const std::function<void(const PseudoTangleWord&)>& fn);
// Every fully resolved word with 1..max_len syllables and nets in [-max_abs, max_abs].
void for_each_net_word(int max_len, int max_abs, const std::function<void(const PseudoTangleWord&)>& fn);
// Fully resolved words with total |net| <= max_crossings.
void for_each_net_word_by_crossings(int max_len, int max_crossings,
                                    const std::function<void(const PseudoTangleWord&)>& fn);

struct CornerTrace {
  std::vector<lug::SyllableKind> kinds;
  lug::EndpointPairing pairing;
};

// Follows which strand occupies each tangle corner while twisting.
CornerTrace corner_strand_kinds(const PseudoTangleWord& word);

bool satisfies_six_conditions(const PseudoTangleWord& word, const std::vector<lug::SyllableKind>& kinds);

// Composes the twist matrices first and applies the product to 1/0.
lug::TangleFraction continued_fraction(const std::vector<int>& nets);

// SI/NSI per crossing by walking the two tangle strands from their corners.
std::vector<lug::SyllableKind> traced_tangle_kinds(const lug::ShadowDiagram& diagram);

// |det| of a Fox colouring minor; equals the determinant of the link.
long long link_determinant(const lug::ShadowDiagram& diagram);

// Linking number from Gauss-style traversal: counts, for each NSI, whether
// component 0 passes over, with the sign from direction vectors.
int linking_twice_by_traversal(const lug::ShadowDiagram& diagram);

}  // namespace oracle

namespace oracle {

// Plain minimax over every playout of a built rational shadow: +1 when the Linker
// wins with perfect play. Leaves are split exactly when the determinant vanishes.
int brute_force_linker_value(const lug::ShadowDiagram& shadow, bool linker_to_move);

}  // namespace oracle
