#include "lug/service.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "lug/error.hpp"
#include "lug/rational_shadow.hpp"
#include "lug/solver.hpp"

namespace lug {

namespace {

constexpr const char* kWhitehead =
    "X 3,6,4,1 ? @0,0\n"
    "X 1,7,2,10 ? @-1,1\n"
    "X 3,10,2,9 ? @-1,-1\n"
    "X 5,7,4,8 ? @1,1\n"
    "X 5,8,6,9 ? @1,-1\n";

constexpr const char* kHopf = "X 4,1,3,2 ? @-0.5,0\nX 2,3,1,4 ? @0.5,0\n";

std::int64_t unix_now() {
  return std::chrono::duration_cast<std::chrono::seconds>(std::chrono::system_clock::now().time_since_epoch()).count();
}

Json decision_json(const EngineDecision& d) {
  Json j{{"move", format_move(d.move)},
         {"crossing", d.move.crossing},
         {"resolution", std::string(1, state_glyph(d.move.resolution))},
         {"source", d.source},
         {"rationale", d.rationale},
         {"flagged", d.flagged}};
  j["strategy"] = d.strategy ? Json(to_string(*d.strategy)) : Json(nullptr);
  return j;
}

}  // namespace

ShadowDiagram preset_shadow(const std::string& name) {
  if (name == "whitehead") return parse_pd(kWhitehead, true);
  if (name == "hopf") return parse_pd(kHopf, true);
  throw Error(ErrorCode::InvalidArgument, "unknown preset `" + name + "`");
}

EngineDecision engine_decision(const GameState& state, Role role, const EngineSettings& settings) {
  if (state.terminal()) throw Error(ErrorCode::IllegalMove, "game is over");
  GameConfig cfg{state.diagram.shadow(), state.first_mover, state.budget};
  for (auto id : applicable_strategies(cfg)) {
    if (strategy_role(id, state.first_mover) != role) continue;
    if (state.history.empty() && !strategy_moves_first(id) && id != StrategyId::Thm1UnlinkerAlways) continue;
    try {
      const auto c = choose_move(id, state, memory_from_history(id, state));
      return {c.move, "strategy", std::string(to_string(id)) + ": " + c.rationale, id, false};
    } catch (const Error&) {
      // the opponent left the strategy's plan; fall through
    }
  }
  if (state.diagram.unresolved_count() <= settings.solver_bound) {
    SolveOptions opt;
    opt.max_crossings = settings.solver_bound;
    opt.budget = state.budget;
    const auto r = solve_diagram(state, opt);
    if (!r.principal_variation.empty())
      return {r.principal_variation.front(), "solver", "solver: " + solve_summary(r), std::nullopt, false};
  }
  const auto moves = legal_moves(state);
  return {moves.front(), "arbitrary", "lowest legal move, no strategy or solve available", std::nullopt, true};
}

SessionRequest SessionRequest::from_json(const Json& b) {
  if (!b.is_object()) throw Error(ErrorCode::InvalidArgument, "request body must be a JSON object");
  SessionRequest r;
  auto role = [&](const char* key, Role def) {
    if (!b.contains(key)) return def;
    const auto v = parse_role(b.at(key).get<std::string>());
    if (!v) throw Error(ErrorCode::InvalidArgument, std::string("bad role in `") + key + "`");
    return *v;
  };
  try {
    if (b.contains("preset")) r.preset = b.at("preset").get<std::string>();
    if (b.contains("word")) r.word = b.at("word").get<std::string>();
    if (b.contains("pd")) r.pd = b.at("pd").get<std::string>();
    if (b.contains("closure")) {
      r.closure = parse_closure(b.at("closure").get<std::string>());
      if (!r.closure) throw Error(ErrorCode::InvalidArgument, "closure must be numerator or denominator");
    }
    r.human = role("human", Role::Unlinker);
    r.first_mover = role("first", Role::Unlinker);
    if (b.contains("engine")) {
      const auto e = b.at("engine").get<std::string>();
      if (e != "ladder" && e != "none") throw Error(ErrorCode::InvalidArgument, "engine must be ladder or none");
      r.engine.enabled = e == "ladder";
    }
    if (b.contains("solver_bound")) r.engine.solver_bound = b.at("solver_bound").get<int>();
    if (b.contains("budget")) r.budget = b.at("budget").get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad request field: ") + e.what());
  }
  const int sources = r.preset.has_value() + r.word.has_value() + r.pd.has_value();
  if (sources != 1) throw Error(ErrorCode::InvalidArgument, "give exactly one of preset, word, pd");
  if (r.word && !r.closure) throw Error(ErrorCode::InvalidArgument, "a word needs a closure");
  return r;
}

Json SessionRequest::to_json() const {
  Json j;
  if (preset) j["preset"] = *preset;
  if (word) j["word"] = *word;
  if (closure) j["closure"] = lug::to_string(*closure);
  if (pd) j["pd"] = *pd;
  j["human"] = lug::to_string(human);
  j["first"] = lug::to_string(first_mover);
  j["engine"] = engine.enabled ? "ladder" : "none";
  j["solver_bound"] = engine.solver_bound;
  j["budget"] = budget;
  return j;
}

namespace {

GameConfig config_for(const SessionRequest& r) {
  GameConfig cfg;
  if (r.preset) {
    cfg.shadow = preset_shadow(*r.preset);
  } else if (r.word) {
    cfg.shadow = build_rational_shadow(shadow_word(parse_word(*r.word)), *r.closure, true);
  } else {
    cfg.shadow = parse_pd(*r.pd, true).shadow();
  }
  cfg.shadow = with_fallback_layout(cfg.shadow);
  cfg.first_mover = r.first_mover;
  cfg.budget = r.budget;
  return cfg;
}

void engine_turns(Session& s) {
  s.last_engine_reply.reset();
  if (!s.request.engine.enabled) return;
  const Role engine = other(s.request.human);
  if (!s.state.terminal() && s.state.mover == engine) {
    auto d = engine_decision(s.state, engine, s.request.engine);
    s.state = apply_move(s.state, d.move);
    s.last_engine_reply = std::move(d);
  }
}

}  // namespace

SessionStore::SessionStore(std::optional<std::string> directory, std::chrono::seconds ttl)
    : dir_(std::move(directory)), ttl_(ttl) {
  if (dir_) {
    std::filesystem::create_directories(*dir_);
    load_existing();
  }
}

std::string SessionStore::new_id() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  std::ostringstream out;
  out << std::hex << rng() << ++counter_;
  return out.str();
}

Json SessionStore::describe(const Session& s) const {
  Json j{{"id", s.id},
         {"version", s.version()},
         {"human", to_string(s.request.human)},
         {"engine_role", s.request.engine.enabled ? Json(to_string(other(s.request.human))) : Json(nullptr)},
         {"request", s.request.to_json()},
         {"created", s.created},
         {"updated", s.updated},
         {"state", state_payload(s.state)}};
  j["engine_reply"] = s.last_engine_reply ? decision_json(*s.last_engine_reply) : Json(nullptr);
  return j;
}

void SessionStore::append_log(const Session& s, const Move& m) const {
  if (!dir_) return;
  std::ofstream out(std::filesystem::path(*dir_) / (s.id + ".log"), std::ios::app);
  out << format_move(m) << "\n";
}

void SessionStore::load_existing() {
  for (const auto& entry : std::filesystem::directory_iterator(*dir_)) {
    if (entry.path().extension() != ".json") continue;
    try {
      std::ifstream in(entry.path());
      const auto meta = Json::parse(in);
      auto s = std::make_shared<Session>();
      s->id = meta.at("id").get<std::string>();
      s->request = SessionRequest::from_json(meta.at("request"));
      s->created = meta.at("created").get<std::int64_t>();
      s->config = config_for(s->request);
      std::vector<Move> moves;
      std::ifstream log(std::filesystem::path(*dir_) / (s->id + ".log"));
      std::string line;
      while (std::getline(log, line))
        if (!line.empty()) moves.push_back(parse_move(line));
      s->state = new_game(s->config);
      for (const auto& m : moves) s->state = apply_move(s->state, m);
      s->updated = unix_now();
      s->touched = std::chrono::steady_clock::now();
      sessions_[s->id] = s;
    } catch (const std::exception&) {
      // unreadable session files are skipped
    }
  }
}

Json SessionStore::create(const SessionRequest& request) {
  auto s = std::make_shared<Session>();
  s->request = request;
  s->config = config_for(request);
  s->state = new_game(s->config);
  s->created = s->updated = unix_now();
  s->touched = std::chrono::steady_clock::now();
  {
    std::lock_guard lock(mutex_);
    s->id = new_id();
    sessions_[s->id] = s;
  }
  std::lock_guard lock(s->mutex);
  if (dir_) {
    std::ofstream meta(std::filesystem::path(*dir_) / (s->id + ".json"));
    meta << Json{{"id", s->id}, {"request", request.to_json()}, {"created", s->created}}.dump(2);
    std::ofstream(std::filesystem::path(*dir_) / (s->id + ".log"));
  }
  const auto before = s->version();
  engine_turns(*s);
  for (std::size_t i = before; i < s->version(); ++i) append_log(*s, s->state.history[i]);
  return describe(*s);
}

std::shared_ptr<Session> SessionStore::find(const std::string& id) {
  std::lock_guard lock(mutex_);
  const auto it = sessions_.find(id);
  if (it == sessions_.end()) throw Error(ErrorCode::NotFound, "no session " + id);
  if (std::chrono::steady_clock::now() - it->second->touched > ttl_) {
    sessions_.erase(it);
    throw Error(ErrorCode::NotFound, "session " + id + " expired");
  }
  it->second->touched = std::chrono::steady_clock::now();
  return it->second;
}

Json SessionStore::get(const std::string& id) {
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  return describe(*s);
}

Json SessionStore::post_move(const std::string& id, const Move& move, std::size_t version, std::optional<Role> role) {
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  if (version < s->version()) {
    // a resubmission of a move that was already applied
    if (s->state.history[version] == move) return describe(*s);
    throw Error(ErrorCode::StaleVersion,
                "state version " + std::to_string(version) + " is stale, current is " + std::to_string(s->version()));
  }
  if (version > s->version())
    throw Error(ErrorCode::StaleVersion, "unknown state version " + std::to_string(version));
  if (s->state.terminal()) throw Error(ErrorCode::IllegalMove, "game is over");
  if (s->request.engine.enabled && s->state.mover != s->request.human)
    throw Error(ErrorCode::OutOfTurn, "it is the engine's turn");
  GameState next = role ? apply_move_as(s->state, move, *role) : apply_move(s->state, move);
  const auto before = s->version();
  s->state = std::move(next);
  engine_turns(*s);
  for (std::size_t i = before; i < s->version(); ++i) append_log(*s, s->state.history[i]);
  s->updated = unix_now();
  return describe(*s);
}

Json SessionStore::hint(const std::string& id) {
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  if (s->state.terminal()) throw Error(ErrorCode::IllegalMove, "game is over");
  const auto d = engine_decision(s->state, s->state.mover, s->request.engine);
  Json j = decision_json(d);
  j["for"] = to_string(s->state.mover);
  j["version"] = s->version();
  return j;
}

Json SessionStore::analysis(const std::string& id) {
  auto s = find(id);
  GameState state;
  int bound;
  {
    std::lock_guard lock(s->mutex);
    state = s->state;
    bound = s->request.engine.solver_bound;
  }
  SolveOptions opt;
  opt.max_crossings = bound;
  opt.budget = state.budget;
  Json j = to_json(solve_diagram(state, opt));
  j["version"] = state.history.size();
  return j;
}

std::size_t SessionStore::size() {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

void SessionStore::expire_now(const std::string& id) {
  std::lock_guard lock(mutex_);
  const auto it = sessions_.find(id);
  if (it != sessions_.end()) it->second->touched = std::chrono::steady_clock::now() - ttl_ - std::chrono::seconds(1);
}

}  // namespace lug
