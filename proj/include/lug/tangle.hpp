#pragma once

// Rational pseudotangle words: parsing, SI/NSI classification, decomposition,
// rewriting by the standard tangle equivalences, and the fraction invariant
// that decides splittability of the two-component closure.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lug/fraction.hpp"
#include "lug/verdict.hpp"

namespace lug {

struct Syllable {
  int net = 0;         // signed sum of resolved crossings (+1 per positive-slope overstrand)
  int unresolved = 0;  // unresolved crossings, >= 0

  int size() const noexcept { return (net < 0 ? -net : net) + unresolved; }
  bool is_zero() const noexcept { return net == 0 && unresolved == 0; }

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// Syllable at 0-based index i is a bottom twist for even i and a right twist for odd i.
struct PseudoTangleWord {
  std::vector<Syllable> syllables;

  std::size_t length() const noexcept { return syllables.size(); }
  bool fully_resolved() const noexcept;
  bool fully_unresolved() const noexcept;
  int crossing_count() const noexcept;

  static PseudoTangleWord from_nets(std::span<const int> nets);
  static PseudoTangleWord shadow_of_sizes(std::span<const int> sizes);
  std::vector<int> nets() const;
  std::vector<int> sizes() const;

  friend bool operator==(const PseudoTangleWord&, const PseudoTangleWord&) = default;
};

inline bool is_bottom_twist(std::size_t index) noexcept { return index % 2 == 0; }

// Every syllable made fully unresolved with its crossing count preserved.
PseudoTangleWord shadow_word(const PseudoTangleWord& word);

PseudoTangleWord parse_word(std::string_view text);
std::string render_word(const PseudoTangleWord& word, std::span<const bool> starred = {});

enum class SyllableKind { SI, NSI };
const char* to_string(SyllableKind kind) noexcept;

std::vector<SyllableKind> classify_syllables(const PseudoTangleWord& word);

struct IntersectionCounts {
  int nsi = 0;
  int si = 0;
};
IntersectionCounts count_intersections(const PseudoTangleWord& word);

enum class BlockTag {
  SingleEven,
  TwoOdd,
  OddEvensOdd,
  FinalSingleOdd,
  FinalOddEvens,
  IsolatedSi,
};
const char* to_string(BlockTag tag) noexcept;

struct DecompositionBlock {
  BlockTag tag;
  std::vector<int> syllables;  // 0-based indices, consecutive

  bool is_si() const noexcept { return tag == BlockTag::IsolatedSi; }
};

struct Decomposition {
  std::vector<DecompositionBlock> blocks;

  std::vector<bool> starred(std::size_t length) const;
};

Decomposition decompose_word(const PseudoTangleWord& word);
std::string render_decomposition(const PseudoTangleWord& word, const Decomposition& decomposition);

enum class TangleStatement { S0, S1, S2, S3, S4, S5 };

// Applies one statement at a position (0-based index of the syllable the statement
// anchors on). Returns nullopt when it does not apply there.
std::optional<PseudoTangleWord> apply_statement(const PseudoTangleWord& word, TangleStatement statement,
                                                std::size_t position);

struct ReductionStep {
  TangleStatement statement;
  std::size_t position;
};

struct Reduction {
  PseudoTangleWord result;
  std::vector<ReductionStep> steps;
};

Reduction reduce_word_traced(const PseudoTangleWord& word);
PseudoTangleWord reduce_word(const PseudoTangleWord& word);

TangleFraction tangle_fraction(const PseudoTangleWord& word);

enum class ClosureKind { Numerator, Denominator };
enum class EndpointPairing { TopBottom, LeftRight, Diagonal };

const char* to_string(ClosureKind kind) noexcept;
const char* to_string(EndpointPairing pairing) noexcept;
std::optional<ClosureKind> parse_closure(std::string_view text);

struct ClosureInfo {
  EndpointPairing pairing;
  std::optional<ClosureKind> two_component;
};

ClosureInfo closure_components(const PseudoTangleWord& word);

Verdict rational_splittability(const PseudoTangleWord& word);

}  // namespace lug
