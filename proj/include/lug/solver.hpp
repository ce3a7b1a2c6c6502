#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lug/game.hpp"
#include "lug/tangle.hpp"

namespace lug {

enum class SolvedWinner { FirstMover, SecondMover, Undetermined };

const char* to_string(SolvedWinner winner) noexcept;

struct SolveOptions {
  int max_crossings = 12;      // unresolved crossings, concrete search only
  std::size_t budget = kDefaultBudget;  // per terminal verdict on diagrams without provenance
  bool memoize = true;
  bool order_moves = true;
  // Concrete search evaluates built diagrams through the fraction unless this is off.
  bool use_provenance = true;
};

struct SolveResult {
  SolvedWinner winner = SolvedWinner::Undetermined;
  std::optional<Role> winning_role;
  Role first_mover = Role::Unlinker;
  // Moves from the solved position to a terminal one, as concrete crossing moves.
  std::vector<Move> principal_variation;
  std::size_t nodes = 0;
  std::size_t transposition_hits = 0;
  std::size_t unknown_leaves = 0;
  // The root value is undetermined because of Unknown leaves.
  bool unknown_influence = false;
};

// Minimax over per-syllable (net, unresolved) states of an all-unresolved word.
// The principal variation refers to the crossings of build_rational_shadow(word, closure).
SolveResult solve_rational(const PseudoTangleWord& word, ClosureKind closure, Role first_mover,
                           const SolveOptions& options = {});

// Minimax over concrete resolution states, from any position of a game.
SolveResult solve_diagram(const GameState& state, const SolveOptions& options = {});

}  // namespace lug
