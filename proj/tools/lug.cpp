#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lug/acceptance.hpp"
#include "lug/error.hpp"
#include "lug/rational_shadow.hpp"
#include "lug/report.hpp"
#include "lug/service.hpp"
#include "lug/simplify.hpp"
#include "lug/verify.hpp"

using namespace lug;

namespace {

struct Common {
  std::string format = "text";
  std::optional<std::string> word;
  std::optional<std::string> pd;
  std::string closure;
  std::string first = "unlinker";
  std::size_t budget = kDefaultBudget;
  int max_crossings = 12;
};

void emit(const Common& c, const std::string& summary, const Json& j) {
  if (c.format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << summary << "\n" << to_key_values(j);
}

Role first_role(const Common& c) {
  const auto r = parse_role(c.first);
  if (!r) throw Error(ErrorCode::InvalidArgument, "--first must be linker or unlinker, got '" + c.first + "'");
  return *r;
}

ClosureKind required_closure(const Common& c) {
  if (c.closure.empty()) throw Error(ErrorCode::InvalidArgument, "--closure is required with --word");
  const auto k = parse_closure(c.closure);
  if (!k) throw Error(ErrorCode::InvalidArgument, "--closure must be numerator or denominator, got '" + c.closure + "'");
  return *k;
}

ShadowDiagram load_pd(const std::string& path, bool two) {
  if (!std::filesystem::exists(path)) throw Error(ErrorCode::InvalidArgument, path + ": no such file");
  try {
    return load_pd_file(path, two);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

// Shadow of the selected input as a game config.
GameConfig config_from(const Common& c) {
  if (c.word.has_value() == c.pd.has_value()) throw Error(ErrorCode::InvalidArgument, "give exactly one of --word and --pd");
  GameConfig cfg;
  cfg.first_mover = first_role(c);
  cfg.budget = c.budget;
  if (c.word) {
    cfg.shadow = build_rational_shadow(shadow_word(parse_word(*c.word)), required_closure(c), true);
  } else {
    cfg.shadow = load_pd(*c.pd, true).shadow();
  }
  return cfg;
}

void add_input_flags(CLI::App* app, Common& c) {
  app->add_option("--word", c.word, "tangle word; resolved syllables are read as sizes");
  app->add_option("--pd", c.pd, "PD code file")->check(CLI::ExistingFile);
  app->add_option("--closure", c.closure, "numerator or denominator");
  app->add_option("--first", c.first, "linker or unlinker");
  app->add_option("--budget", c.budget, "simplification budget");
}

int cmd_word_analyze(const Common& c, const std::string& text) {
  const auto w = parse_word(text);
  const auto j = word_analysis(w);
  std::string summary = j.contains("decomposition") ? j["decomposition"].get<std::string>() : render_word(w);
  if (j.contains("verdict")) summary += "  " + j["verdict"]["kind"].get<std::string>();
  emit(c, summary, j);
  return 0;
}

int cmd_word_reduce(const Common& c, const std::string& text) {
  const auto j = reduction_report(parse_word(text));
  emit(c, j["word"].get<std::string>() + " -> " + j["reduced"].get<std::string>(), j);
  return 0;
}

int cmd_shadow_analyze(const Common& c, const std::string& path) {
  const auto j = shadow_analysis(load_pd(path, false), c.budget);
  std::string summary = std::to_string(j["crossings"].get<int>()) + " crossings, " +
                        std::to_string(j["components"].get<int>()) + " components, NSI " +
                        std::to_string(j["nsi"].get<int>()) + ", SI " + std::to_string(j["si"].get<int>());
  if (j.contains("plk")) summary += ", plk " + j["plk"].get<std::string>();
  if (j.contains("verdict")) summary += ", " + j["verdict"]["kind"].get<std::string>();
  emit(c, summary, j);
  return 0;
}

int cmd_game_replay(const Common& c, const std::string& path) {
  if (!std::filesystem::exists(path)) throw Error(ErrorCode::InvalidArgument, path + ": no such file");
  MoveLog log;
  try {
    log = load_move_log(path);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
  const auto outcome = replay(log.config, log.moves);
  Json j{{"moves", log.moves.size()}, {"first", to_string(log.config.first_mover)}, {"outcome", to_json(outcome)}};
  const std::string summary =
      outcome.winner ? std::string("winner: ") + to_string(*outcome.winner) : std::string("winner: undetermined");
  emit(c, summary, j);
  return 0;
}

int cmd_solve(const Common& c) {
  SolveOptions opts;
  opts.budget = c.budget;
  opts.max_crossings = c.max_crossings;
  SolveResult r;
  if (c.word && !c.pd) {
    r = solve_rational(shadow_word(parse_word(*c.word)), required_closure(c), first_role(c), opts);
  } else {
    r = solve_diagram(new_game(config_from(c)), opts);
  }
  emit(c, solve_summary(r), to_json(r));
  return 0;
}

int cmd_verify(const Common& c, const std::optional<std::string>& strategy, bool skip_sign_copy) {
  if (!c.word && !c.pd) {
    AcceptanceOptions opt;
    opt.data_dir = LUG_DATA_DIR;
    const auto r = run_criterion(9, opt);
    emit(c, std::string(r.passed ? "PASS " : "FAIL ") + r.summary, to_json(r));
    return r.passed ? 0 : 1;
  }
  const auto cfg = config_from(c);
  std::vector<StrategyId> ids;
  if (strategy) {
    const auto id = parse_strategy(*strategy);
    if (!id) throw Error(ErrorCode::InvalidArgument, "unknown strategy '" + *strategy + "'");
    ids.push_back(*id);
  } else {
    ids = applicable_strategies(cfg);
    if (ids.empty()) throw Error(ErrorCode::Inapplicable, "no strategy applies to this shadow and turn order");
  }
  const Mutation m = skip_sign_copy ? Mutation::SkipSignCopy : Mutation::None;
  Json all = Json::array();
  bool ok = true;
  std::string summary;
  for (auto id : ids) {
    const auto rep = verify_strategy(id, cfg, m);
    ok = ok && rep.passed();
    all.push_back(to_json(rep));
    if (!summary.empty()) summary += "\n";
    summary += std::string(rep.passed() ? "PASS " : "FAIL ") + to_string(id) + ": " + std::to_string(rep.lines) +
               " lines, " + std::to_string(rep.losses) + " losses";
  }
  emit(c, summary, Json{{"reports", all}});
  return ok ? 0 : 1;
}

int cmd_sweep(const Common& c, const std::vector<int>& ids, const std::string& data_dir, std::uint64_t seed) {
  AcceptanceOptions opt;
  opt.data_dir = data_dir;
  opt.seed = seed;
  Json all = Json::array();
  std::string summary;
  int failed = 0;
  for (int id : ids.empty() ? acceptance_ids() : ids) {
    const auto r = run_criterion(id, opt);
    if (!r.passed) ++failed;
    all.push_back(to_json(r));
    if (!summary.empty()) summary += "\n";
    summary += std::string(r.passed ? "PASS" : "FAIL") + " criterion " + std::to_string(id) + ": " + r.summary;
  }
  emit(c, summary, Json{{"criteria", all}, {"failed", failed}});
  return failed == 0 ? 0 : 1;
}

int cmd_serve(const std::string& host, int port, const std::optional<std::string>& dir, int ttl_hours) {
  SessionStore store(dir, std::chrono::hours(ttl_hours));
  HttpService http(store);
  const int bound = http.bind(host, port);
  std::cerr << "listening on " << host << ":" << bound << "\n";
  http.run();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linking-unlinking game toolkit"};
  app.require_subcommand(1);
  Common c;
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));

  auto* word = app.add_subcommand("word", "rational tangle words");
  word->require_subcommand(1);
  std::string word_text;
  auto* word_analyze = word->add_subcommand("analyze", "classification, decomposition, fraction and verdict");
  word_analyze->add_option("word", word_text)->required();
  auto* word_reduce = word->add_subcommand("reduce", "reduce a resolved word to normal form");
  word_reduce->add_option("word", word_text)->required();

  auto* shadow = app.add_subcommand("shadow", "link shadows and diagrams");
  shadow->require_subcommand(1);
  std::string pd_path;
  auto* shadow_analyze = shadow->add_subcommand("analyze", "components, SI/NSI, plk, twist regions, verdict");
  shadow_analyze->add_option("pd", pd_path)->required();
  shadow_analyze->add_option("--budget", c.budget, "simplification budget");

  auto* game = app.add_subcommand("game", "recorded games");
  game->require_subcommand(1);
  std::string log_path;
  auto* game_replay = game->add_subcommand("replay", "replay a move log and report the winner");
  game_replay->add_option("log", log_path)->required();

  auto* solve = app.add_subcommand("solve", "decide who wins under perfect play");
  add_input_flags(solve, c);
  solve->add_option("--max-crossings", c.max_crossings, "refuse larger shadows");

  auto* verify = app.add_subcommand("verify", "check strategies against every opponent line");
  add_input_flags(verify, c);
  std::optional<std::string> strategy;
  bool skip_sign_copy = false;
  verify->add_option("--strategy", strategy, "strategy id, e.g. Thm6-Linker-second");
  verify->add_flag("--skip-sign-copy", skip_sign_copy, "break the sign copy to check the checker");

  auto* sweep = app.add_subcommand("sweep", "run the acceptance enumerations");
  std::vector<int> criteria;
  std::string data_dir = LUG_DATA_DIR;
  std::uint64_t seed = AcceptanceOptions{}.seed;
  sweep->add_option("criteria", criteria, "criterion ids (default all)");
  sweep->add_option("--data-dir", data_dir, "fixture directory");
  sweep->add_option("--seed", seed, "random seed");

  auto* serve = app.add_subcommand("serve", "start the HTTP service");
  std::string host = "127.0.0.1";
  int port = 8080;
  std::optional<std::string> dir;
  int ttl_hours = 24;
  serve->add_option("--host", host);
  serve->add_option("--port", port);
  serve->add_option("--dir", dir, "persist sessions in this directory");
  serve->add_option("--ttl-hours", ttl_hours);

  CLI11_PARSE(app, argc, argv);

  try {
    if (word_analyze->parsed()) return cmd_word_analyze(c, word_text);
    if (word_reduce->parsed()) return cmd_word_reduce(c, word_text);
    if (shadow_analyze->parsed()) return cmd_shadow_analyze(c, pd_path);
    if (game_replay->parsed()) return cmd_game_replay(c, log_path);
    if (solve->parsed()) return cmd_solve(c);
    if (verify->parsed()) return cmd_verify(c, strategy, skip_sign_copy);
    if (sweep->parsed()) return cmd_sweep(c, criteria, data_dir, seed);
    if (serve->parsed()) return cmd_serve(host, port, dir, ttl_hours);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return 2;
  }
  return 1;
}
