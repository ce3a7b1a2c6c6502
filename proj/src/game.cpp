#include "lug/game.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lug/error.hpp"
#include "lug/rational_shadow.hpp"
#include "lug/simplify.hpp"

namespace lug {

const char* to_string(Role role) noexcept { return role == Role::Linker ? "linker" : "unlinker"; }

std::optional<Role> parse_role(std::string_view text) {
  if (text == "linker" || text == "Linker") return Role::Linker;
  if (text == "unlinker" || text == "Unlinker") return Role::Unlinker;
  return std::nullopt;
}

std::string format_move(const Move& move) {
  return "m " + std::to_string(move.crossing) + " " + state_glyph(move.resolution);
}

Move parse_move(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tag, id, glyph, extra;
  in >> tag >> id >> glyph;
  if (tag != "m" || id.empty() || glyph.empty() || (in >> extra))
    throw Error(ErrorCode::Syntax, "expected `m <crossing> </ or \\>`: " + std::string(text));
  Move m;
  try {
    std::size_t used = 0;
    m.crossing = std::stoi(id, &used);
    if (used != id.size()) throw std::invalid_argument(id);
  } catch (const std::exception&) {
    throw Error(ErrorCode::Syntax, "bad crossing id: " + id);
  }
  const auto st = parse_state_glyph(glyph);
  if (!st || *st == CrossingState::Unresolved) throw Error(ErrorCode::Syntax, "bad resolution: " + glyph);
  m.resolution = *st;
  return m;
}

GameState new_game(const GameConfig& config) {
  if (config.shadow.component_count() != 2)
    throw Error(ErrorCode::InvalidDiagram,
                "shadow has " + std::to_string(config.shadow.component_count()) + " components, need 2");
  if (!config.shadow.fully_unresolved()) throw Error(ErrorCode::InvalidDiagram, "shadow has resolved crossings");
  GameState s;
  s.diagram = config.shadow;
  s.mover = config.first_mover;
  s.first_mover = config.first_mover;
  s.budget = config.budget;
  return s;
}

std::vector<Move> legal_moves(const GameState& state) {
  std::vector<Move> out;
  for (int c = 0; c < state.diagram.crossing_count(); ++c) {
    if (state.diagram.crossing(c).state != CrossingState::Unresolved) continue;
    out.push_back({c, CrossingState::ResolvedA});
    out.push_back({c, CrossingState::ResolvedB});
  }
  return out;
}

GameState apply_move(const GameState& state, const Move& move) {
  if (move.crossing < 0 || move.crossing >= state.diagram.crossing_count())
    throw Error(ErrorCode::IllegalMove, "no crossing " + std::to_string(move.crossing));
  if (move.resolution == CrossingState::Unresolved)
    throw Error(ErrorCode::IllegalMove, "a move must resolve the crossing");
  if (state.diagram.crossing(move.crossing).state != CrossingState::Unresolved)
    throw Error(ErrorCode::IllegalMove, "crossing " + std::to_string(move.crossing) + " is already resolved");
  GameState next = state;
  next.diagram = state.diagram.with_state(move.crossing, move.resolution);
  next.mover = other(state.mover);
  next.history.push_back(move);
  return next;
}

GameState apply_move_as(const GameState& state, const Move& move, Role as) {
  if (as != state.mover)
    throw Error(ErrorCode::OutOfTurn, std::string("it is the ") + to_string(state.mover) + "'s turn");
  return apply_move(state, move);
}

PseudoTangleWord resolved_word(const ShadowDiagram& diagram) {
  const auto& prov = diagram.provenance();
  if (!prov) throw Error(ErrorCode::InvalidArgument, "diagram was not built from a word");
  PseudoTangleWord w;
  w.syllables.resize(prov->word.length());
  for (const auto& x : diagram.crossings()) {
    if (!x.syllable) throw Error(ErrorCode::InvalidDiagram, "crossing without syllable");
    auto& s = w.syllables.at(static_cast<std::size_t>(*x.syllable));
    if (x.state == CrossingState::ResolvedA)
      ++s.net;
    else if (x.state == CrossingState::ResolvedB)
      --s.net;
    else
      ++s.unresolved;
  }
  return w;
}

Verdict evaluate_terminal(const ShadowDiagram& diagram, std::size_t budget) {
  if (diagram.provenance()) return rational_splittability(resolved_word(diagram));
  return decide_splittability(diagram, budget);
}

std::optional<Role> winner_of(const Verdict& verdict) noexcept {
  switch (verdict.kind) {
    case VerdictKind::Splittable: return Role::Unlinker;
    case VerdictKind::Unsplittable: return Role::Linker;
    case VerdictKind::Unknown: break;
  }
  return std::nullopt;
}

std::optional<GameOutcome> game_outcome(const GameState& state) {
  if (!state.terminal()) return std::nullopt;
  GameOutcome out;
  out.verdict = evaluate_terminal(state.diagram, state.budget);
  out.winner = winner_of(out.verdict);
  return out;
}

GameOutcome replay(const GameConfig& config, const std::vector<Move>& moves) {
  auto state = new_game(config);
  for (std::size_t i = 0; i < moves.size(); ++i) {
    try {
      state = apply_move(state, moves[i]);
    } catch (const Error& e) {
      throw Error(ErrorCode::IllegalMove, "move " + std::to_string(i) + ": " + e.what(), i);
    }
  }
  auto out = game_outcome(state);
  if (!out)
    throw Error(ErrorCode::IllegalMove,
                std::to_string(state.diagram.unresolved_count()) + " crossings still unresolved", moves.size());
  return *out;
}

MoveLog parse_move_log(std::string_view text, const std::string& base_dir) {
  MoveLog log;
  bool have_shadow = false, have_first = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    auto fail = [&](const std::string& msg) {
      throw Error(ErrorCode::Syntax, "line " + std::to_string(lineno) + ": " + msg, lineno);
    };
    if (key == "shadow") {
      std::string path;
      ls >> path;
      if (path.empty()) fail("missing shadow path");
      const auto full = std::filesystem::path(path).is_absolute() ? std::filesystem::path(path)
                                                                  : std::filesystem::path(base_dir) / path;
      log.config.shadow = load_pd_file(full.string(), true);
      log.shadow_source = "shadow " + path;
      have_shadow = true;
    } else if (key == "word") {
      std::string w, c;
      ls >> w >> c;
      const auto closure = parse_closure(c);
      if (w.empty() || !closure) fail("expected `word <w> <numerator|denominator>`");
      log.config.shadow = build_rational_shadow(parse_word(w), *closure, true);
      log.shadow_source = "word " + w + " " + c;
      have_shadow = true;
    } else if (key == "first") {
      std::string r;
      ls >> r;
      const auto role = parse_role(r);
      if (!role) fail("expected `first <linker|unlinker>`");
      log.config.first_mover = *role;
      have_first = true;
    } else if (key == "budget") {
      long long b = 0;
      if (!(ls >> b) || b <= 0) fail("bad budget");
      log.config.budget = static_cast<std::size_t>(b);
    } else if (key == "m") {
      if (!have_shadow || !have_first) fail("moves before the header");
      try {
        log.moves.push_back(parse_move(line));
      } catch (const Error& e) {
        fail(e.what());
      }
    } else {
      fail("unknown record `" + key + "`");
    }
  }
  if (!have_shadow) throw Error(ErrorCode::Syntax, "move log has no shadow line");
  if (!have_first) throw Error(ErrorCode::Syntax, "move log has no first line");
  return log;
}

MoveLog load_move_log(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::NotFound, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_move_log(ss.str(), std::filesystem::path(path).parent_path().string());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what(), e.position());
  }
}

std::string write_move_log(const MoveLog& log) {
  std::string out = log.shadow_source + "\n";
  out += std::string("first ") + to_string(log.config.first_mover) + "\n";
  if (log.config.budget != kDefaultBudget) out += "budget " + std::to_string(log.config.budget) + "\n";
  for (const auto& m : log.moves) out += format_move(m) + "\n";
  return out;
}

}  // namespace lug
