#include "doctest.h"
#include "lug/error.hpp"
#include "lug/game.hpp"
#include "lug/generate.hpp"
#include "lug/rational_shadow.hpp"
#include "lug/simplify.hpp"

using namespace lug;

namespace {

GameConfig whitehead(Role first) {
  return {load_pd_file(LUG_DATA_DIR "/whitehead.pd", true), first};
}

GameConfig from_word(const char* w, ClosureKind c, Role first) {
  return {build_rational_shadow(parse_word(w), c, true), first};
}

}  // namespace

TEST_CASE("new game and legal moves") {
  auto s = new_game(whitehead(Role::Unlinker));
  CHECK(s.mover == Role::Unlinker);
  CHECK(s.history.empty());
  CHECK(legal_moves(s).size() == 10);
  s = apply_move(s, {0, CrossingState::ResolvedA});
  CHECK(s.mover == Role::Linker);
  CHECK(legal_moves(s).size() == 8);
  CHECK_FALSE(game_outcome(s).has_value());

  const auto empty = new_game(from_word("(0)", ClosureKind::Denominator, Role::Linker));
  CHECK(empty.terminal());
  CHECK(legal_moves(empty).empty());
  const auto out = game_outcome(empty);
  REQUIRE(out);
  CHECK(out->winner == Role::Unlinker);

  const auto knot = new_game(from_word("((1),(1))", ClosureKind::Numerator, Role::Linker));
  CHECK(legal_moves(knot).size() == 4);
  CHECK(knot.diagram.crossing_count() == 2);
}

TEST_CASE("bad configs and moves") {
  auto cfg = whitehead(Role::Linker);
  cfg.shadow = cfg.shadow.with_state(2, CrossingState::ResolvedB);
  CHECK_THROWS_AS(new_game(cfg), Error);
  CHECK_THROWS_AS(new_game({load_pd_file(LUG_DATA_DIR "/trefoil.pd"), Role::Linker}), Error);

  auto s = new_game(whitehead(Role::Linker));
  s = apply_move(s, {3, CrossingState::ResolvedB});
  try {
    apply_move(s, {3, CrossingState::ResolvedA});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IllegalMove);
  }
  CHECK_THROWS_AS(apply_move(s, {7, CrossingState::ResolvedA}), Error);
  CHECK_THROWS_AS(apply_move(s, {1, CrossingState::Unresolved}), Error);
  try {
    apply_move_as(s, {1, CrossingState::ResolvedA}, Role::Linker);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfTurn);
  }
}

TEST_CASE("pseudo-linking number changes only on NSI moves") {
  const auto s = new_game(whitehead(Role::Unlinker));
  const auto o = canonical_orientation(s.diagram);
  for (const auto& m : legal_moves(s)) {
    const int plk = pseudo_linking_twice(apply_move(s, m).diagram, o);
    if (classify_crossing(s.diagram, m.crossing) == SyllableKind::NSI)
      CHECK(std::abs(plk) == 1);
    else
      CHECK(plk == 0);
  }
}

TEST_CASE("worked game") {
  const auto log = load_move_log(LUG_DATA_DIR "/worked_game.log");
  CHECK(log.config.first_mover == Role::Unlinker);
  REQUIRE(log.moves.size() == 5);
  const auto out = replay(log.config, log.moves);
  CHECK(out.winner == Role::Unlinker);
  REQUIRE(out.verdict.kind == VerdictKind::Splittable);
  CHECK(out.verdict.nodes_explored <= 10000);
  auto end = new_game(log.config);
  for (const auto& m : log.moves) end = apply_move(end, m);
  CHECK(is_split(replay_trace(end.diagram, out.verdict.trace)));

  const auto again = parse_move_log(write_move_log(log), LUG_DATA_DIR);
  CHECK(again.moves == log.moves);
  CHECK(again.config.first_mover == log.config.first_mover);
}

TEST_CASE("terminal verdicts") {
  auto hopf = new_game({load_pd_file(LUG_DATA_DIR "/hopf.pd", true), Role::Linker});
  const auto o = canonical_orientation(hopf.diagram);
  for (auto a : {CrossingState::ResolvedA, CrossingState::ResolvedB}) {
    for (auto b : {CrossingState::ResolvedA, CrossingState::ResolvedB}) {
      auto t = apply_move(apply_move(hopf, {0, a}), {1, b});
      const auto out = game_outcome(t);
      REQUIRE(out);
      const bool same = crossing_sign(t.diagram, o, 0) == crossing_sign(t.diagram, o, 1);
      CHECK((out->winner == Role::Linker) == same);
      CHECK((out->winner == Role::Unlinker) == !same);
    }
  }

  const auto wr = load_pd_file(LUG_DATA_DIR "/whitehead_resolved.pd", true);
  GameState t;
  t.diagram = wr;
  const auto out = game_outcome(t);
  REQUIRE(out);
  CHECK(out->verdict.kind == VerdictKind::Unknown);
  CHECK_FALSE(out->winner.has_value());

  // built diagrams go through the fraction
  auto clasp = new_game(from_word("((2))", ClosureKind::Denominator, Role::Unlinker));
  clasp = apply_move(apply_move(clasp, {0, CrossingState::ResolvedA}), {1, CrossingState::ResolvedA});
  const auto co = game_outcome(clasp);
  REQUIRE(co);
  CHECK(co->winner == Role::Linker);
  CHECK(co->verdict.fraction.has_value());
}

TEST_CASE("replay reports the first bad move") {
  const auto cfg = whitehead(Role::Unlinker);
  try {
    replay(cfg, {{0, CrossingState::ResolvedA}, {1, CrossingState::ResolvedA}, {0, CrossingState::ResolvedB}});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IllegalMove);
    CHECK(e.position() == std::optional<std::size_t>(2));
  }
  CHECK_THROWS_AS(replay(cfg, {{0, CrossingState::ResolvedA}}), Error);
  const auto empty = replay(from_word("(0,0)", ClosureKind::Denominator, Role::Linker), {});
  CHECK(empty.winner == Role::Unlinker);
}

TEST_CASE("random playouts last one move per crossing and are deterministic") {
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const auto shadow = random_shadow(rng, 2, 8);
    GameConfig cfg{shadow, trial % 2 ? Role::Linker : Role::Unlinker, 2000};
    auto s = new_game(cfg);
    std::vector<Move> moves;
    int resolved = 0;
    while (!s.terminal()) {
      CHECK(s.mover == (s.history.size() % 2 == 0 ? cfg.first_mover : other(cfg.first_mover)));
      const auto ms = legal_moves(s);
      CHECK(ms.size() == 2 * static_cast<std::size_t>(s.diagram.unresolved_count()));
      const auto m = ms[rng() % ms.size()];
      s = apply_move(s, m);
      moves.push_back(m);
      ++resolved;
      CHECK(s.diagram.crossing_count() - s.diagram.unresolved_count() == static_cast<int>(s.history.size()));
    }
    CHECK(resolved == shadow.crossing_count());
    const auto a = replay(cfg, moves);
    const auto b = replay(cfg, moves);
    CHECK(a.winner == b.winner);
    CHECK(a.verdict.kind == b.verdict.kind);
    CHECK(a.winner == winner_of(a.verdict));
  }
}

TEST_CASE("move log syntax") {
  CHECK(format_move({3, CrossingState::ResolvedB}) == "m 3 \\");
  CHECK(parse_move("m 12 /") == Move{12, CrossingState::ResolvedA});
  CHECK_THROWS_AS(parse_move("m x /"), Error);
  CHECK_THROWS_AS(parse_move("m 1 ?"), Error);
  CHECK_THROWS_AS(parse_move_log("first linker\nm 0 /\n"), Error);
  const auto log = parse_move_log("word (1,1) numerator\nfirst linker\nm 1 \\\n");
  CHECK(log.config.shadow.crossing_count() == 2);
  CHECK(log.moves.size() == 1);
  CHECK(write_move_log(log) == "word (1,1) numerator\nfirst linker\nm 1 \\\n");
}
