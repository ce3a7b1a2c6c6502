#pragma once

#include <string>

#include "json.hpp"
#include "lug/acceptance.hpp"
#include "lug/game.hpp"
#include "lug/solver.hpp"
#include "lug/verify.hpp"

namespace lug {

using Json = nlohmann::ordered_json;

Json to_json(const Verdict& verdict);
Json to_json(const SimplifyStep& step);
Json to_json(const GameOutcome& outcome);
Json to_json(const SolveResult& result);
Json to_json(const VerificationReport& report);
Json to_json(const CriterionResult& result);

Json word_analysis(const PseudoTangleWord& word);
Json reduction_report(const PseudoTangleWord& word);
Json shadow_analysis(const ShadowDiagram& diagram, std::size_t budget);
// Crossings with coordinates, arcs with component labels, mover, plk and outcome.
Json state_payload(const GameState& state);

// Places crossings on a circle when the diagram carries no layout.
ShadowDiagram with_fallback_layout(ShadowDiagram diagram);

std::string solve_summary(const SolveResult& result);

// One `path=value` line per leaf, objects flattened with dots and arrays with [i].
std::string to_key_values(const Json& j);

}  // namespace lug
