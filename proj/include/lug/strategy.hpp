#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lug/game.hpp"

namespace lug {

enum class StrategyId {
  Thm1UnlinkerAlways,
  Thm1_2Second,
  Thm2Second,
  Thm3Second,
  Thm4Second,
  Thm4First,
  Thm6LinkerSecond,
  Thm6LinkerFirst,
};

const std::array<StrategyId, 8>& all_strategies() noexcept;
const char* to_string(StrategyId id) noexcept;  // "Thm1-Unlinker-always", ...
std::optional<StrategyId> parse_strategy(std::string_view text);
// One-line statement of the hypothesis the strategy needs.
const char* hypothesis(StrategyId id) noexcept;

// The role the strategy plays for a given first mover, or nullopt when the strategy
// does not cover that turn order.
std::optional<Role> strategy_role(StrategyId id, Role first_mover) noexcept;
bool strategy_moves_first(StrategyId id) noexcept;

bool is_applicable(StrategyId id, const GameConfig& config);
std::vector<StrategyId> applicable_strategies(const GameConfig& config);

struct StrategyMemory {
  std::optional<Move> last_opponent_move;
  std::optional<Orientation> orientation;  // fixed on first use
  int nsi_responses = 0;
};

enum class Mutation { None, SkipSignCopy };

struct StrategyChoice {
  Move move;
  StrategyMemory memory;
  std::string rationale;
};

// Crossings sharing a region with the given one: its syllable on built diagrams,
// otherwise its twist region.
std::vector<int> region_crossings(const ShadowDiagram& diagram, int crossing);
// Twist handedness of a resolution inside the region: equal values twist together,
// opposite values cancel by R2.
int region_sign(const ShadowDiagram& diagram, const std::vector<int>& region, int crossing, CrossingState state);

// Lowest unresolved crossing of the region of last_move, resolved to cancel it.
Move r2_response(const GameState& state, const Move& last_move);
// Same, resolved to twist with it.
Move anti_r2_response(const GameState& state, const Move& last_move);

// Memory the strategy would hold after the game's history, counting its own NSI moves.
StrategyMemory memory_from_history(StrategyId id, const GameState& state);

// Throws ContractViolation when it is not the strategy's turn or its plan breaks down.
StrategyChoice choose_move(StrategyId id, const GameState& state, const StrategyMemory& memory,
                           Mutation mutation = Mutation::None);

}  // namespace lug
