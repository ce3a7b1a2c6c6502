#include "doctest.h"
#include "lug/error.hpp"
#include "lug/rational_shadow.hpp"
#include "lug/solver.hpp"
#include "oracles.hpp"

using namespace lug;

namespace {

SolvedWinner rational(const char* w, ClosureKind c, Role first) {
  return solve_rational(parse_word(w), c, first).winner;
}

GameState fresh(const PseudoTangleWord& w, ClosureKind c, Role first) {
  return new_game({build_rational_shadow(w, c, true), first});
}

void check_pv(const SolveResult& r, const GameState& start) {
  auto s = start;
  for (const auto& m : r.principal_variation) s = apply_move(s, m);
  const auto out = game_outcome(s);
  REQUIRE(out);
  CHECK(out->winner == r.winning_role);
}

}  // namespace

TEST_CASE("rational solver anchors") {
  CHECK(rational("((1),(1))", ClosureKind::Numerator, Role::Unlinker) == SolvedWinner::SecondMover);
  for (auto first : {Role::Linker, Role::Unlinker}) {
    const auto r = solve_rational(parse_word("(0,(3))"), ClosureKind::Denominator, first);
    CHECK(r.winning_role == Role::Unlinker);
  }
  CHECK(rational("((2))", ClosureKind::Denominator, Role::Linker) == SolvedWinner::SecondMover);
  CHECK(rational("((2))", ClosureKind::Denominator, Role::Unlinker) == SolvedWinner::SecondMover);
  CHECK_THROWS_AS(solve_rational(parse_word("((1),(1))"), ClosureKind::Denominator, Role::Linker), Error);
  CHECK_THROWS_AS(solve_rational(parse_word("(2)"), ClosureKind::Denominator, Role::Linker), Error);
}

TEST_CASE("two-crossing clasp by exhaustive playouts") {
  const auto d = build_rational_shadow(parse_word("((2))"), ClosureKind::Denominator, true);
  CHECK(oracle::brute_force_linker_value(d, true) == -1);
  CHECK(oracle::brute_force_linker_value(d, false) == 1);
}

TEST_CASE("rational solver matches plain minimax") {
  oracle::for_each_size_word(4, 2, [](const PseudoTangleWord& w) {
    if (w.crossing_count() > 5) return;
    const auto info = closure_components(w);
    if (!info.two_component) return;
    const auto d = build_rational_shadow(w, *info.two_component, true);
    for (auto first : {Role::Linker, Role::Unlinker}) {
      CAPTURE(render_word(w));
      const auto r = solve_rational(w, *info.two_component, first);
      const int v = oracle::brute_force_linker_value(d, first == Role::Linker);
      CHECK(r.winning_role == (v > 0 ? Role::Linker : Role::Unlinker));
      CHECK(r.principal_variation.size() == static_cast<std::size_t>(w.crossing_count()));
      check_pv(r, fresh(w, *info.two_component, first));
    }
  });
}

TEST_CASE("diagram solver agrees and ignores memo and ordering") {
  oracle::for_each_size_word(3, 2, [](const PseudoTangleWord& w) {
    const auto info = closure_components(w);
    if (!info.two_component) return;
    for (auto first : {Role::Linker, Role::Unlinker}) {
      CAPTURE(render_word(w));
      const auto s = fresh(w, *info.two_component, first);
      const auto base = solve_rational(w, *info.two_component, first);
      const auto r = solve_diagram(s);
      CHECK(r.winner == base.winner);
      check_pv(r, s);
      SolveOptions plain;
      plain.memoize = false;
      plain.order_moves = false;
      CHECK(solve_diagram(s, plain).winner == base.winner);
      CHECK(solve_rational(w, *info.two_component, first, plain).winner == base.winner);
      SolveOptions unrouted;
      unrouted.use_provenance = false;
      const auto u = solve_diagram(s, unrouted);
      if (!u.unknown_influence) CHECK(u.winner == base.winner);
    }
  });
}

TEST_CASE("diagram solver on parsed shadows") {
  const auto wh = load_pd_file(LUG_DATA_DIR "/whitehead.pd", true);
  const auto s = new_game({wh, Role::Linker});
  const auto r = solve_diagram(s);
  CHECK(r.winner == SolvedWinner::FirstMover);
  CHECK(r.winning_role == Role::Linker);
  check_pv(r, s);

  const auto empty = build_rational_shadow(parse_word("(0)"), ClosureKind::Denominator, true);
  for (auto first : {Role::Linker, Role::Unlinker}) {
    const auto e = solve_diagram(new_game({empty, first}));
    CHECK(e.winning_role == Role::Unlinker);
    CHECK(e.principal_variation.empty());
  }

  SolveOptions tight;
  tight.max_crossings = 4;
  CHECK_THROWS_AS(solve_diagram(s, tight), Error);
}

TEST_CASE("mid-game analysis") {
  auto s = fresh(parse_word("((2))"), ClosureKind::Denominator, Role::Unlinker);
  s = apply_move(s, {0, CrossingState::ResolvedA});
  const auto r = solve_diagram(s);
  CHECK(r.winning_role == Role::Linker);
  REQUIRE(r.principal_variation.size() == 1);
  CHECK(r.principal_variation[0] == Move{1, CrossingState::ResolvedA});
}
