#include "lug/report.hpp"

#include <cmath>
#include <numbers>

#include "lug/error.hpp"

namespace lug {

Json to_json(const SimplifyStep& step) {
  return {{"move", to_string(step.kind)}, {"crossings", step.crossings}, {"ports", step.ports}};
}

Json to_json(const Verdict& v) {
  Json j{{"kind", to_string(v.kind)}};
  if (v.linking_number) j["linking_number"] = *v.linking_number;
  if (v.fraction) j["fraction"] = v.fraction->to_string();
  if (!v.trace.empty()) {
    Json t = Json::array();
    for (const auto& s : v.trace) t.push_back(to_json(s));
    j["trace"] = t;
  }
  j["nodes_explored"] = v.nodes_explored;
  return j;
}

Json to_json(const GameOutcome& o) {
  return {{"winner", o.winner ? Json(to_string(*o.winner)) : Json(nullptr)}, {"verdict", to_json(o.verdict)}};
}

std::string solve_summary(const SolveResult& r) {
  switch (r.winner) {
    case SolvedWinner::FirstMover: return std::string("first mover (") + (r.winning_role == Role::Linker ? "Linker" : "Unlinker") + ") wins";
    case SolvedWinner::SecondMover: return std::string("second mover (") + (r.winning_role == Role::Linker ? "Linker" : "Unlinker") + ") wins";
    case SolvedWinner::Undetermined: break;
  }
  return "undetermined (unknown terminal verdicts decide the root)";
}

Json to_json(const SolveResult& r) {
  Json pv = Json::array();
  for (const auto& m : r.principal_variation) pv.push_back(format_move(m));
  return {{"summary", solve_summary(r)},
          {"winner", to_string(r.winner)},
          {"winning_role", r.winning_role ? Json(to_string(*r.winning_role)) : Json(nullptr)},
          {"first_mover", to_string(r.first_mover)},
          {"principal_variation", pv},
          {"nodes", r.nodes},
          {"transposition_hits", r.transposition_hits},
          {"unknown_leaves", r.unknown_leaves},
          {"unknown_influence", r.unknown_influence}};
}

namespace {

Json lines_json(const std::vector<std::vector<Move>>& lines) {
  Json out = Json::array();
  for (const auto& line : lines) {
    Json l = Json::array();
    for (const auto& m : line) l.push_back(format_move(m));
    out.push_back(l);
  }
  return out;
}

Json pairing_json(const ClosureInfo& info) {
  return {{"pairing", to_string(info.pairing)},
          {"two_component_closure", info.two_component ? Json(to_string(*info.two_component)) : Json(nullptr)}};
}

}  // namespace

Json to_json(const VerificationReport& r) {
  return {{"strategy", to_string(r.strategy)},
          {"hypothesis", hypothesis(r.strategy)},
          {"role", to_string(r.role)},
          {"first_mover", to_string(r.first_mover)},
          {"passed", r.passed()},
          {"lines", r.lines},
          {"wins", r.wins},
          {"losses", r.losses},
          {"unknown", r.unknown},
          {"terminal_verdicts", {{"splittable", r.splittable}, {"unsplittable", r.unsplittable}, {"unknown", r.unknown}}},
          {"plk_violations", r.plk_violations},
          {"dispatcher_errors", r.dispatcher_errors},
          {"loss_lines", lines_json(r.loss_lines)},
          {"plk_violation_lines", lines_json(r.plk_violation_lines)},
          {"errors", r.errors}};
}

Json to_json(const CriterionResult& r) {
  return {{"id", r.id},           {"title", r.title},   {"passed", r.passed},   {"seconds", r.seconds},
          {"limit_seconds", r.limit_seconds}, {"summary", r.summary}, {"details", r.details}};
}

Json word_analysis(const PseudoTangleWord& w) {
  Json j{{"word", render_word(w)}, {"crossings", w.crossing_count()}};
  const auto kinds = classify_syllables(w);
  Json syl = Json::array();
  for (std::size_t i = 0; i < w.length(); ++i)
    syl.push_back({{"index", i + 1},
                   {"twist", is_bottom_twist(i) ? "bottom" : "right"},
                   {"net", w.syllables[i].net},
                   {"unresolved", w.syllables[i].unresolved},
                   {"kind", to_string(kinds[i])}});
  j["syllables"] = syl;
  const auto counts = count_intersections(w);
  j["nsi"] = counts.nsi;
  j["si"] = counts.si;
  const auto info = closure_components(w);
  j["closure"] = pairing_json(info);
  try {
    const auto d = decompose_word(w);
    j["decomposition"] = render_decomposition(w, d);
    Json blocks = Json::array();
    for (const auto& b : d.blocks) {
      std::vector<int> one_based;
      for (int i : b.syllables) one_based.push_back(i + 1);
      blocks.push_back({{"tag", to_string(b.tag)}, {"syllables", one_based}});
    }
    j["blocks"] = blocks;
  } catch (const Error& e) {
    j["decomposition_error"] = e.what();
  }
  if (w.fully_resolved()) {
    j["fraction"] = tangle_fraction(w).to_string();
    j["reduced"] = render_word(reduce_word(w));
    if (info.two_component) j["verdict"] = to_json(rational_splittability(w));
  }
  return j;
}

Json reduction_report(const PseudoTangleWord& w) {
  const auto r = reduce_word_traced(w);
  Json steps = Json::array();
  for (const auto& s : r.steps)
    steps.push_back({{"statement", "S" + std::to_string(static_cast<int>(s.statement))}, {"position", s.position + 1}});
  return {{"word", render_word(w)}, {"reduced", render_word(r.result)}, {"steps", steps}};
}

ShadowDiagram with_fallback_layout(ShadowDiagram d) {
  if (d.has_layout() || d.crossing_count() == 0) return d;
  const int n = d.crossing_count();
  for (int c = 0; c < n; ++c) {
    const double a = 2 * std::numbers::pi * c / n;
    d.set_position(c, {std::cos(a), std::sin(a)});
  }
  return d;
}

Json shadow_analysis(const ShadowDiagram& d, std::size_t budget) {
  Json j{{"crossings", d.crossing_count()}, {"components", d.component_count()}};
  Json names = Json::array();
  for (int c = 0; c < d.component_count(); ++c) names.push_back(d.component_name(c));
  j["component_names"] = names;
  const auto counts = count_intersections(d);
  j["nsi"] = counts.nsi;
  j["si"] = counts.si;
  Json kinds = Json::array();
  for (int c = 0; c < d.crossing_count(); ++c) kinds.push_back(to_string(classify_crossing(d, c)));
  j["crossing_kinds"] = kinds;
  Json regions = Json::array();
  for (const auto& r : twist_regions(d)) regions.push_back(r.crossings);
  j["twist_regions"] = regions;
  if (d.component_count() == 2) {
    const int plk2 = pseudo_linking_twice(d, canonical_orientation(d));
    j["plk"] = format_half(plk2);
    if (d.fully_resolved()) j["verdict"] = to_json(evaluate_terminal(d, budget));
  }
  j["unresolved"] = d.unresolved_count();
  return j;
}

Json state_payload(const GameState& s) {
  const auto& d = s.diagram;
  Json crossings = Json::array();
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto& x = d.crossing(c);
    Json cj{{"id", c}, {"state", std::string(1, state_glyph(x.state))}, {"kind", to_string(classify_crossing(d, c))}};
    if (x.position) cj["position"] = {x.position->x, x.position->y};
    if (x.syllable) cj["syllable"] = *x.syllable + 1;
    cj["arcs"] = x.arcs;
    crossings.push_back(cj);
  }
  Json arcs = Json::array();
  for (int a = 0; a < d.arc_count(); ++a) {
    Json aj{{"id", a}, {"component", d.component_of_arc(a)}, {"label", d.component_name(d.component_of_arc(a))}};
    if (d.is_free_loop(a)) {
      aj["free_loop"] = true;
    } else {
      const auto& e = d.arc_ends(a);
      aj["ends"] = {{e[0].crossing, e[0].port}, {e[1].crossing, e[1].port}};
    }
    arcs.push_back(aj);
  }
  Json history = Json::array();
  for (const auto& m : s.history) history.push_back(format_move(m));
  const int plk2 = pseudo_linking_twice(d, canonical_orientation(d));
  Json j{{"crossings", crossings},
         {"arcs", arcs},
         {"mover", to_string(s.mover)},
         {"first_mover", to_string(s.first_mover)},
         {"history", history},
         {"plk", format_half(plk2)},
         {"plk_twice", plk2},
         {"terminal", s.terminal()}};
  if (const auto out = game_outcome(s))
    j["outcome"] = to_json(*out);
  else
    j["outcome"] = nullptr;
  return j;
}

namespace {

void flatten(const Json& j, const std::string& path, std::string& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (j.is_array()) {
    if (j.empty()) out += path + "=[]\n";
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else if (j.is_string()) {
    out += path + "=" + j.get<std::string>() + "\n";
  } else {
    out += path + "=" + j.dump() + "\n";
  }
}

}  // namespace

std::string to_key_values(const Json& j) {
  std::string out;
  flatten(j, "", out);
  return out;
}

}  // namespace lug
