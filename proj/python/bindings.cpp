#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lug/acceptance.hpp"
#include "lug/error.hpp"
#include "lug/rational_shadow.hpp"
#include "lug/report.hpp"
#include "lug/service.hpp"
#include "lug/verify.hpp"

namespace py = pybind11;
using namespace lug;

namespace {

Role role_arg(const std::string& s) {
  const auto r = parse_role(s);
  if (!r) throw Error(ErrorCode::InvalidArgument, "role must be linker or unlinker, got '" + s + "'");
  return *r;
}

ClosureKind closure_arg(const std::string& s) {
  const auto k = parse_closure(s);
  if (!k) throw Error(ErrorCode::InvalidArgument, "closure must be numerator or denominator, got '" + s + "'");
  return *k;
}

GameConfig config_arg(const std::optional<std::string>& word, const std::optional<std::string>& closure,
                      const std::optional<std::string>& pd, const std::string& first, std::size_t budget) {
  if (word.has_value() == pd.has_value()) throw Error(ErrorCode::InvalidArgument, "give exactly one of word and pd");
  GameConfig cfg;
  cfg.first_mover = role_arg(first);
  cfg.budget = budget;
  if (word) {
    if (!closure) throw Error(ErrorCode::InvalidArgument, "closure is required with word");
    cfg.shadow = build_rational_shadow(shadow_word(parse_word(*word)), closure_arg(*closure), true);
  } else {
    cfg.shadow = parse_pd(*pd, true).shadow();
  }
  return cfg;
}

class PyGame {
 public:
  explicit PyGame(GameConfig cfg) : state_(new_game(cfg)) {}

  void play(int crossing, const std::string& glyph) {
    const auto s = parse_state_glyph(glyph);
    if (!s) throw Error(ErrorCode::Syntax, "resolution must be / or \\");
    state_ = apply_move(state_, Move{crossing, *s});
  }
  std::vector<std::string> legal() const {
    std::vector<std::string> out;
    for (const auto& m : legal_moves(state_)) out.push_back(format_move(m));
    return out;
  }
  std::string state_json() const { return state_payload(state_).dump(); }
  std::string hint(const std::string& strategy) const {
    const auto id = parse_strategy(strategy);
    if (!id) throw Error(ErrorCode::InvalidArgument, "unknown strategy '" + strategy + "'");
    const auto choice = choose_move(*id, state_, memory_from_history(*id, state_));
    return Json{{"move", format_move(choice.move)}, {"rationale", choice.rationale}}.dump();
  }
  std::string solve(int max_crossings) const {
    SolveOptions o;
    o.max_crossings = max_crossings;
    o.budget = state_.budget;
    return to_json(solve_diagram(state_, o)).dump();
  }
  bool terminal() const { return state_.terminal(); }
  std::string mover() const { return to_string(state_.mover); }

 private:
  GameState state_;
};

}  // namespace

PYBIND11_MODULE(_lug, m) {
  static py::exception<Error> error(m, "LugError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def("word_analysis", [](const std::string& w) { return word_analysis(parse_word(w)).dump(); });
  m.def("reduce_word", [](const std::string& w) { return reduction_report(parse_word(w)).dump(); });
  m.def("shadow_analysis", [](const std::string& pd, std::size_t budget) {
    return shadow_analysis(parse_pd(pd), budget).dump();
  }, py::arg("pd"), py::arg("budget") = kDefaultBudget);
  m.def("solve_word", [](const std::string& w, const std::string& closure, const std::string& first, int max_crossings) {
    SolveOptions o;
    o.max_crossings = max_crossings;
    return to_json(solve_rational(shadow_word(parse_word(w)), closure_arg(closure), role_arg(first), o)).dump();
  }, py::arg("word"), py::arg("closure"), py::arg("first") = "unlinker", py::arg("max_crossings") = 12);
  m.def("replay_log", [](const std::string& text, const std::string& base_dir) {
    const auto log = parse_move_log(text, base_dir);
    return to_json(replay(log.config, log.moves)).dump();
  }, py::arg("text"), py::arg("base_dir") = ".");
  m.def("verify", [](const std::string& strategy, const std::optional<std::string>& word,
                     const std::optional<std::string>& closure, const std::optional<std::string>& pd,
                     const std::string& first) {
    const auto id = parse_strategy(strategy);
    if (!id) throw Error(ErrorCode::InvalidArgument, "unknown strategy '" + strategy + "'");
    return to_json(verify_strategy(*id, config_arg(word, closure, pd, first, kDefaultBudget))).dump();
  }, py::arg("strategy"), py::arg("word") = py::none(), py::arg("closure") = py::none(), py::arg("pd") = py::none(),
     py::arg("first") = "unlinker");
  m.def("run_criterion", [](int id, const std::string& data_dir) {
    AcceptanceOptions o;
    o.data_dir = data_dir;
    return to_json(run_criterion(id, o)).dump();
  });
  m.def("strategies", [] {
    std::vector<std::string> out;
    for (auto id : all_strategies()) out.push_back(to_string(id));
    return out;
  });

  py::class_<PyGame>(m, "Game")
      .def(py::init([](const std::optional<std::string>& word, const std::optional<std::string>& closure,
                       const std::optional<std::string>& pd, const std::string& first, std::size_t budget) {
             return PyGame(config_arg(word, closure, pd, first, budget));
           }),
           py::arg("word") = py::none(), py::arg("closure") = py::none(), py::arg("pd") = py::none(),
           py::arg("first") = "unlinker", py::arg("budget") = kDefaultBudget)
      .def("play", &PyGame::play)
      .def("legal_moves", &PyGame::legal)
      .def("state_json", &PyGame::state_json)
      .def("hint_json", &PyGame::hint)
      .def("solve_json", &PyGame::solve, py::arg("max_crossings") = 12)
      .def_property_readonly("terminal", &PyGame::terminal)
      .def_property_readonly("mover", &PyGame::mover);
}
