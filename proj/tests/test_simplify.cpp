#include "doctest.h"
#include "lug/error.hpp"
#include "lug/generate.hpp"
#include "lug/rational_shadow.hpp"
#include "lug/simplify.hpp"
#include "oracles.hpp"

using namespace lug;

namespace {

ShadowDiagram hopf(CrossingState a, CrossingState b) {
  return load_pd_file(LUG_DATA_DIR "/hopf.pd").with_state(0, a).with_state(1, b);
}

}  // namespace

TEST_CASE("hopf diagrams") {
  const auto linked = hopf(CrossingState::ResolvedA, CrossingState::ResolvedA);
  CHECK(oracle::link_determinant(linked) == 2);
  const auto v = decide_splittability(linked, 100);
  CHECK(v.kind == VerdictKind::Unsplittable);
  CHECK(std::abs(*v.linking_number) == 1);
  const auto s = simplify(linked, 100);
  CHECK(s.diagram.crossing_count() == 2);
  CHECK(s.trace.empty());
}

TEST_CASE("opposite bigon cancels") {
  const auto loose = hopf(CrossingState::ResolvedA, CrossingState::ResolvedB);
  CHECK(oracle::link_determinant(loose) == 0);
  const auto s = simplify(loose, 100);
  CHECK(s.diagram.crossing_count() == 0);
  CHECK(s.diagram.component_count() == 2);
  REQUIRE(s.trace.size() == 1);
  CHECK(s.trace[0].kind == ReidemeisterKind::R2);
  const auto v = decide_splittability(loose, 100);
  CHECK(v.kind == VerdictKind::Splittable);
  CHECK(is_split(replay_trace(loose, v.trace)));
}

TEST_CASE("simplify rejects bad input") {
  const auto shadow = load_pd_file(LUG_DATA_DIR "/hopf.pd");
  CHECK_THROWS_AS(simplify(shadow, 10), Error);
  CHECK_THROWS_AS(simplify(hopf(CrossingState::ResolvedA, CrossingState::ResolvedA), 0), Error);
  CHECK_THROWS_AS(decide_splittability(shadow, 10), Error);
  const SimplifyStep bogus{ReidemeisterKind::R2, {0, 1}, {0, 0}};
  CHECK_THROWS_AS(apply_step(hopf(CrossingState::ResolvedA, CrossingState::ResolvedA), bogus), Error);
}

TEST_CASE("kink removal") {
  auto d = parse_pd("X 1,1,2,2 /\n");
  REQUIRE(r1_moves(d).size() == 1);
  d = apply_step(d, r1_moves(d)[0]);
  CHECK(d.crossing_count() == 0);
  CHECK(d.component_count() == 1);
}

TEST_CASE("random shadows are valid") {
  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    const int comps = 1 + i % 2;
    const auto d = random_shadow(rng, comps, 10);
    CAPTURE(write_pd(d));
    REQUIRE(is_planar(d));
    CHECK(d.component_count() == comps);
    CHECK(d.crossing_count() <= 10);
    CHECK(d.fully_unresolved());
    if (comps == 2) CHECK(count_intersections(d).nsi % 2 == 0);
    if (comps == 1) {
      const auto col = checkerboard(d);
      CHECK(col.colors[col.unbounded] == FaceColor::White);
    }
  }
}

TEST_CASE("moves preserve invariants") {
  Rng rng(11);
  int r3_seen = 0;
  for (int i = 0; i < 400; ++i) {
    const auto d = random_resolution(random_shadow(rng, 2, 9), rng);
    const long long det = oracle::link_determinant(d);
    const int lk = pseudo_linking_twice(d, canonical_orientation(d));
    auto check = [&](const ShadowDiagram& e) {
      REQUIRE(is_planar(e));
      CHECK(e.component_count() == 2);
      CHECK(oracle::link_determinant(e) == det);
      CHECK(std::abs(pseudo_linking_twice(e, canonical_orientation(e))) == std::abs(lk));
    };
    CAPTURE(write_pd(d));
    for (const auto& m : r1_moves(d)) check(apply_step(d, m));
    for (const auto& m : r2_moves(d)) check(apply_step(d, m));
    for (const auto& m : r3_moves(d)) {
      ++r3_seen;
      const auto e = apply_step(d, m);
      check(e);
      // flipping the new triangle again restores the diagram
      bool back = false;
      for (const auto& m2 : r3_moves(e))
        if (diagram_key(apply_step(e, m2)) == diagram_key(d)) back = true;
      CHECK(back);
    }
    const auto s = simplify(d, 200);
    check(s.diagram);
    CHECK(diagram_key(replay_trace(d, s.trace)) == diagram_key(s.diagram));
    const auto v = decide_splittability(d, 200);
    if (v.kind == VerdictKind::Splittable) CHECK(det == 0);
    if (v.kind == VerdictKind::Unsplittable) CHECK(*v.linking_number != 0);
  }
  CHECK(r3_seen > 50);
}

TEST_CASE("diagram keys ignore numbering") {
  const auto a = parse_pd("X 4,1,3,2 /\nX 2,3,1,4 /\n");
  const auto b = parse_pd("X 20,30,10,40 /\nX 40,10,30,20 /\n");
  CHECK(diagram_key(a) == diagram_key(b));
  CHECK(diagram_key(a) != diagram_key(a.with_state(0, CrossingState::ResolvedB)));
}

TEST_CASE("rational verdicts agree with the diagram decider") {
  oracle::for_each_net_word_by_crossings(6, 6, [](const PseudoTangleWord& w) {
    const auto info = closure_components(w);
    if (!info.two_component) return;
    CAPTURE(render_word(w));
    const auto d = build_rational_shadow(w, *info.two_component, true);
    const auto v = decide_splittability(d, 500);
    if (v.definite()) CHECK(v.kind == rational_splittability(w).kind);
  });
}
