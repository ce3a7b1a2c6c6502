#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lug/diagram.hpp"
#include "lug/verdict.hpp"

namespace lug {

enum class Role { Linker, Unlinker };

const char* to_string(Role role) noexcept;
std::optional<Role> parse_role(std::string_view text);
inline Role other(Role role) noexcept { return role == Role::Linker ? Role::Unlinker : Role::Linker; }

struct Move {
  int crossing = -1;
  CrossingState resolution = CrossingState::ResolvedA;

  friend bool operator==(const Move&, const Move&) = default;
};

std::string format_move(const Move& move);  // "m 3 /"
Move parse_move(std::string_view text);

inline constexpr std::size_t kDefaultBudget = 10000;

struct GameConfig {
  ShadowDiagram shadow;
  Role first_mover = Role::Unlinker;
  std::size_t budget = kDefaultBudget;
};

struct GameState {
  ShadowDiagram diagram;
  Role mover = Role::Unlinker;
  Role first_mover = Role::Unlinker;
  std::vector<Move> history;
  std::size_t budget = kDefaultBudget;

  bool terminal() const noexcept { return diagram.unresolved_count() == 0; }
};

struct GameOutcome {
  std::optional<Role> winner;
  Verdict verdict;
};

GameState new_game(const GameConfig& config);
std::vector<Move> legal_moves(const GameState& state);
GameState apply_move(const GameState& state, const Move& move);
// Also checks that the move is submitted by the role whose turn it is.
GameState apply_move_as(const GameState& state, const Move& move, Role as);
std::optional<GameOutcome> game_outcome(const GameState& state);

// Splittability of a fully resolved diagram, through the tangle fraction when the
// diagram was built from a word.
Verdict evaluate_terminal(const ShadowDiagram& diagram, std::size_t budget);
// The resolved word of a built diagram: each crossing adds its slope to its syllable.
PseudoTangleWord resolved_word(const ShadowDiagram& diagram);
std::optional<Role> winner_of(const Verdict& verdict) noexcept;

// Fails with IllegalMove carrying the index of the first bad move.
GameOutcome replay(const GameConfig& config, const std::vector<Move>& moves);

struct MoveLog {
  GameConfig config;
  std::vector<Move> moves;
  std::string shadow_source;  // "shadow <path>" or "word <w> <closure>"
};

// Header lines: `shadow <path>` (relative to base_dir) or `word <w> <closure>`,
// then `first <role>`, optional `budget <n>`, then one `m <id> </ or \>` per move.
MoveLog parse_move_log(std::string_view text, const std::string& base_dir = ".");
MoveLog load_move_log(const std::string& path);
std::string write_move_log(const MoveLog& log);

}  // namespace lug
