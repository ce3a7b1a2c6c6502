#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "lug/report.hpp"
#include "lug/strategy.hpp"

namespace lug {

struct EngineSettings {
  bool enabled = true;
  int solver_bound = 12;
};

struct EngineDecision {
  Move move;
  std::string source;  // "strategy", "solver" or "arbitrary"
  std::string rationale;
  std::optional<StrategyId> strategy;
  bool flagged = false;  // no strategy or solver backed the move
};

// The ladder: applicable strategy for the role, then a bounded solve, then the lowest legal move.
EngineDecision engine_decision(const GameState& state, Role role, const EngineSettings& settings);

// Body of POST /sessions.
struct SessionRequest {
  std::optional<std::string> preset;  // "whitehead" or "hopf"
  std::optional<std::string> word;    // syllable sizes, e.g. "(2,3)"
  std::optional<ClosureKind> closure;
  std::optional<std::string> pd;
  Role human = Role::Unlinker;
  Role first_mover = Role::Unlinker;
  EngineSettings engine;
  std::size_t budget = kDefaultBudget;

  static SessionRequest from_json(const Json& body);
  Json to_json() const;
};

struct Session {
  std::string id;
  SessionRequest request;
  GameConfig config;
  GameState state;
  std::optional<EngineDecision> last_engine_reply;
  std::int64_t created = 0;
  std::int64_t updated = 0;
  std::chrono::steady_clock::time_point touched;
  std::mutex mutex;

  std::size_t version() const noexcept { return state.history.size(); }
};

class SessionStore {
public:
  // With a directory, every session is mirrored to <dir>/<id>.json (request) and an
  // append-only <dir>/<id>.log of moves, and existing sessions are replayed on start.
  explicit SessionStore(std::optional<std::string> directory = std::nullopt,
                        std::chrono::seconds ttl = std::chrono::hours(24));

  Json create(const SessionRequest& request);
  Json get(const std::string& id);
  // role is optional: when given it must be the mover.
  Json post_move(const std::string& id, const Move& move, std::size_t version, std::optional<Role> role = std::nullopt);
  Json hint(const std::string& id);
  Json analysis(const std::string& id);

  std::size_t size();
  void expire_now(const std::string& id);

private:
  std::shared_ptr<Session> find(const std::string& id);
  Json describe(const Session& s) const;
  void append_log(const Session& s, const Move& m) const;
  void load_existing();
  std::string new_id();

  std::optional<std::string> dir_;
  std::chrono::seconds ttl_;
  std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t counter_ = 0;
};

ShadowDiagram preset_shadow(const std::string& name);

// HTTP status and JSON body for a request; used by the server and by tests.
struct HttpReply {
  int status = 200;
  Json body;
};
HttpReply handle_request(SessionStore& store, const std::string& method, const std::string& path,
                         const std::string& body);

class HttpService {
public:
  explicit HttpService(SessionStore& store);
  ~HttpService();
  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  // Port 0 picks a free port. Returns the bound port.
  int bind(const std::string& host, int port);
  // Blocks until stop().
  void run();
  void stop();

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace lug
