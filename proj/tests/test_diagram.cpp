#include <algorithm>

#include "doctest.h"
#include "lug/diagram.hpp"
#include "lug/error.hpp"
#include "lug/rational_shadow.hpp"
#include "oracles.hpp"

using namespace lug;

namespace {

std::vector<int> region_sizes(const ShadowDiagram& d) {
  std::vector<int> out;
  for (const auto& r : twist_regions(d)) out.push_back(static_cast<int>(r.crossings.size()));
  std::sort(out.begin(), out.end());
  return out;
}

ShadowDiagram resolved(ShadowDiagram d, const std::vector<CrossingState>& states) {
  for (std::size_t c = 0; c < states.size(); ++c) d = d.with_state(static_cast<int>(c), states[c]);
  return d;
}

}  // namespace

TEST_CASE("hopf shadow") {
  const auto d = load_pd_file(LUG_DATA_DIR "/hopf.pd", true);
  CHECK(d.crossing_count() == 2);
  CHECK(d.component_count() == 2);
  CHECK(count_intersections(d).nsi == 2);
  CHECK(classify_crossing(d, 0) == SyllableKind::NSI);
  CHECK(classify_crossing(d, 1) == SyllableKind::NSI);
  CHECK(region_sizes(d) == std::vector{2});
  CHECK(pseudo_linking_twice(d, canonical_orientation(d)) == 0);
}

TEST_CASE("whitehead shadow") {
  const auto d = load_pd_file(LUG_DATA_DIR "/whitehead.pd", true);
  CHECK(d.crossing_count() == 5);
  CHECK(d.component_count() == 2);
  const auto counts = count_intersections(d);
  CHECK(counts.nsi == 4);
  CHECK(counts.si == 1);
  CHECK(classify_crossing(d, 0) == SyllableKind::SI);
  CHECK(faces(d).size() == 7);
  CHECK(region_sizes(d) == std::vector{1, 2, 2});
}

TEST_CASE("parse errors") {
  CHECK_THROWS_WITH_AS(parse_pd("X 1,2,2,1 ?\n", true), doctest::Contains("2 components"), Error);
  CHECK_THROWS_WITH_AS(parse_pd("X 1,2,3,4\n"), doctest::Contains("dangling"), Error);
  // two crossings glued with a twisted rotation at one of them
  CHECK_THROWS_WITH_AS(parse_pd("X 1,2,3,4\nX 1,3,2,4\n"), doctest::Contains("non-planar"), Error);
  CHECK_THROWS_AS(parse_pd("X 1,2,3\n"), Error);
  CHECK_THROWS_AS(parse_pd("Y 1\n"), Error);
  CHECK_THROWS_AS(parse_pd("X 1,2,2,1 ?\nO 2\n"), Error);
}

TEST_CASE("pd round trip keeps states, layout and names") {
  auto d = parse_pd("X 4,1,3,2 / @0,0\nX 2,3,1,4 \\ @1,0\nC 1:red\nC 3:blue\n");
  CHECK(d.crossing(0).state == CrossingState::ResolvedA);
  CHECK(d.crossing(1).state == CrossingState::ResolvedB);
  CHECK(d.component_name(d.component_of_arc(0)) == "red");
  const auto again = parse_pd(write_pd(d));
  CHECK(write_pd(again) == write_pd(d));
  const auto loops = parse_pd("O 1\nO 2\n", true);
  CHECK(loops.component_count() == 2);
  CHECK(loops.crossing_count() == 0);
  CHECK(is_split(loops));
}

TEST_CASE("hopf signs across resolutions and orientations") {
  const auto d = load_pd_file(LUG_DATA_DIR "/hopf.pd");
  const CrossingState rs[] = {CrossingState::ResolvedA, CrossingState::ResolvedB};
  for (auto a : rs) {
    for (auto b : rs) {
      const auto r = resolved(d, {a, b});
      const auto o = canonical_orientation(r);
      for (int flip = 0; flip < 4; ++flip) {
        auto oo = o;
        if (flip & 1) oo = reverse_component(r, oo, 0);
        if (flip & 2) oo = reverse_component(r, oo, 1);
        const int s0 = crossing_sign(r, oo, 0);
        const int s1 = crossing_sign(r, oo, 1);
        // same-sign pairs exactly for the linked resolutions
        CHECK((s0 == s1) == (oracle::link_determinant(r) != 0));
        if (flip == 1) CHECK(s0 == -crossing_sign(r, o, 0));
        if (flip == 3) CHECK(pseudo_linking_twice(r, oo) == pseudo_linking_twice(r, o));
      }
    }
  }
}

TEST_CASE("built rational shadows") {
  auto d = build_rational_shadow(parse_word("(2)"), ClosureKind::Denominator, true);
  CHECK(d.crossing_count() == 2);
  CHECK(region_sizes(d) == std::vector{2});
  CHECK(count_intersections(d).nsi == 2);

  d = build_rational_shadow(parse_word("(0)"), ClosureKind::Denominator, true);
  CHECK(d.crossing_count() == 0);
  CHECK(is_split(d));

  d = build_rational_shadow(parse_word("((2),(3),(2),(1))"), ClosureKind::Denominator, true);
  CHECK(d.crossing_count() == 8);
  for (int c = 0; c < 8; ++c) {
    const int syl = *d.crossing(c).syllable;
    CHECK((classify_crossing(d, c) == SyllableKind::NSI) == (syl == 0 || syl == 2));
  }
  CHECK(region_sizes(d) == std::vector{1, 2, 2, 3});
  CHECK(d.has_layout());

  CHECK_THROWS_AS(build_rational_shadow(parse_word("(1,1)"), ClosureKind::Denominator, true), Error);
  CHECK(build_rational_shadow(parse_word("(1,1)"), ClosureKind::Numerator, true).component_count() == 2);
}

TEST_CASE("built shadows agree with strand tracing") {
  oracle::for_each_size_word(4, 3, [](const PseudoTangleWord& w) {
    const auto kinds = classify_syllables(w);
    const auto info = closure_components(w);
    for (auto closure : {ClosureKind::Numerator, ClosureKind::Denominator}) {
      CAPTURE(render_word(w));
      CAPTURE(to_string(closure));
      const auto d = build_rational_shadow(w, closure);
      REQUIRE(is_planar(d));
      CHECK(d.crossing_count() == w.crossing_count());
      const auto traced = oracle::traced_tangle_kinds(d);
      for (int c = 0; c < d.crossing_count(); ++c) CHECK(traced[c] == kinds[*d.crossing(c).syllable]);
      const bool two = d.component_count() == 2;
      CHECK(two == (info.two_component == closure));
      if (two) {
        for (int c = 0; c < d.crossing_count(); ++c) CHECK(classify_crossing(d, c) == kinds[*d.crossing(c).syllable]);
        CHECK(count_intersections(d).nsi % 2 == 0);
      }
    }
  });
}

TEST_CASE("rational fractions match the colouring determinant and linking numbers") {
  oracle::for_each_net_word_by_crossings(4, 6, [](const PseudoTangleWord& w) {
    const auto info = closure_components(w);
    if (!info.two_component) return;
    CAPTURE(render_word(w));
    const auto d = build_rational_shadow(w, *info.two_component, true);
    const auto f = tangle_fraction(w);
    const long long expect = *info.two_component == ClosureKind::Denominator ? f.denominator() : std::llabs(f.numerator());
    CHECK(oracle::link_determinant(d) == expect);
    const auto o = canonical_orientation(d);
    const int lk2 = pseudo_linking_twice(d, o);
    CHECK(lk2 % 2 == 0);
    CHECK(lk2 == oracle::linking_twice_by_traversal(d));
    if (lk2 != 0) CHECK(rational_splittability(w).kind == VerdictKind::Unsplittable);
  });
}

TEST_CASE("pseudo-linking number moves by half per NSI resolution") {
  const auto d = load_pd_file(LUG_DATA_DIR "/whitehead.pd", true);
  const auto o = canonical_orientation(d);
  for (int c = 0; c < d.crossing_count(); ++c) {
    for (auto s : {CrossingState::ResolvedA, CrossingState::ResolvedB}) {
      const int delta = pseudo_linking_twice(d.with_state(c, s), o);
      if (classify_crossing(d, c) == SyllableKind::NSI)
        CHECK(std::abs(delta) == 1);
      else
        CHECK(delta == 0);
    }
  }
  CHECK(format_half(-1) == "-1/2");
  CHECK(format_half(-2) == "-1");
}

TEST_CASE("checkerboard") {
  const auto circle = parse_pd("O 1\n");
  const auto c = checkerboard(circle);
  REQUIRE(c.loop_colors);
  CHECK(c.loop_colors->first == FaceColor::Black);
  CHECK(c.loop_colors->second == FaceColor::White);
  CHECK_THROWS_AS(checkerboard(load_pd_file(LUG_DATA_DIR "/hopf.pd")), Error);

  const auto trefoil = load_pd_file(LUG_DATA_DIR "/trefoil.pd");
  const auto col = checkerboard(trefoil);
  REQUIRE(col.faces.size() == 5);
  CHECK(col.colors[col.unbounded] == FaceColor::White);
  CHECK(col.faces[col.unbounded].darts.size() == 3);
  int black = 0;
  for (std::size_t f = 0; f < col.faces.size(); ++f) {
    if (col.colors[f] == FaceColor::Black) {
      ++black;
      CHECK(col.faces[f].darts.size() == 2);
    }
  }
  CHECK(black == 3);
}
