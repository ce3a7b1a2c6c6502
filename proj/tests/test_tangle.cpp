#include <functional>
#include <numeric>

#include "doctest.h"
#include "lug/error.hpp"
#include "lug/tangle.hpp"
#include "oracles.hpp"

using namespace lug;

TEST_CASE("word parse and render") {
  const auto w = parse_word("(1, -4(2), (3), 0)");
  REQUIRE(w.length() == 4);
  CHECK(w.syllables[0] == Syllable{1, 0});
  CHECK(w.syllables[1] == Syllable{-4, 2});
  CHECK(w.syllables[2] == Syllable{0, 3});
  CHECK(w.syllables[3] == Syllable{0, 0});
  CHECK(render_word(w) == "(1,-4(2),(3),0)");
  CHECK(render_word(parse_word(render_word(w))) == render_word(w));
  CHECK(w.crossing_count() == 1 + 6 + 3);
}

TEST_CASE("word syntax errors carry a position") {
  for (const char* bad : {"", "(", "()", "(1,)", "(1 2)", "(1(-2))", "(1)x", "1,2"}) {
    CAPTURE(bad);
    try {
      parse_word(bad);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::Syntax);
      CHECK(e.position().has_value());
    }
  }
}

TEST_CASE("classification of known words") {
  const auto kinds = classify_syllables(parse_word("(2,-3,-2,1)"));
  CHECK(kinds == std::vector{SyllableKind::NSI, SyllableKind::SI, SyllableKind::NSI, SyllableKind::SI});
  const auto c = count_intersections(parse_word("(2,-3,-2,1)"));
  CHECK(c.nsi == 4);
  CHECK(c.si == 4);
  CHECK(classify_syllables(parse_word("(1,1)")) == std::vector{SyllableKind::NSI, SyllableKind::NSI});
}

TEST_CASE("starred decomposition of the long example") {
  const auto w = parse_word("(1,4,2,1,3,5,3,2,1,2,0,5,2,6,4)");
  const auto d = decompose_word(w);
  CHECK(render_decomposition(w, d) == "(1,4,2,1,3*,5,3,2*,1,2,0,5,2*,6,4*)");
  REQUIRE(d.blocks.size() == 8);
  CHECK(d.blocks[0].tag == BlockTag::OddEvensOdd);
  CHECK(d.blocks[0].syllables == std::vector{0, 1, 2, 3});
  CHECK(d.blocks[1].tag == BlockTag::IsolatedSi);
  CHECK(d.blocks[2].tag == BlockTag::TwoOdd);
  CHECK(d.blocks[4].tag == BlockTag::OddEvensOdd);
  CHECK(d.blocks[6].tag == BlockTag::SingleEven);
  CHECK(d.blocks[7].syllables == std::vector{14});
}

TEST_CASE("small decompositions") {
  auto d = decompose_word(parse_word("(2)"));
  REQUIRE(d.blocks.size() == 1);
  CHECK(d.blocks[0].tag == BlockTag::SingleEven);
  d = decompose_word(parse_word("(1,1)"));
  REQUIRE(d.blocks.size() == 1);
  CHECK(d.blocks[0].tag == BlockTag::TwoOdd);
  d = decompose_word(parse_word("(1)"));
  CHECK(d.blocks[0].tag == BlockTag::FinalSingleOdd);
}

TEST_CASE("reductions") {
  CHECK(render_word(reduce_word(parse_word("(1,0,-1)"))) == "(0)");
  CHECK(render_word(reduce_word(parse_word("(1,1)"))) == "(2)");
  CHECK(render_word(reduce_word(parse_word("(0,4,0,6)"))) == "(0)");
  CHECK(render_word(reduce_word(parse_word("(1,-1)"))) == "(0)");
  CHECK(render_word(reduce_word(parse_word("(2,0,0)"))) == "(2)");
  CHECK(render_word(reduce_word(parse_word("(3,2)"))) == "(3,2)");
  // partial words only merge and drop zeros
  CHECK(render_word(reduce_word(parse_word("(1(1),0,(2))"))) == "(1(3))");
  CHECK(render_word(reduce_word(parse_word("(1,(1))"))) == "(1,(1))");
}

TEST_CASE("fractions") {
  CHECK(tangle_fraction(parse_word("(0)")).is_infinite());
  CHECK(tangle_fraction(parse_word("(2)")) == TangleFraction(1, 2));
  CHECK(tangle_fraction(parse_word("(2,-3,-2,1)")) == TangleFraction(7, 12));
  CHECK(tangle_fraction(parse_word("(1,1)")) == TangleFraction(2, 1));
  CHECK(tangle_fraction(parse_word("(1,-1)")).is_zero());
  CHECK_THROWS_AS(tangle_fraction(parse_word("(1(1))")), Error);
  CHECK(oracle::continued_fraction(parse_word("(2,-3,-2,1)").nets()) == TangleFraction(7, 12));
}

TEST_CASE("closures") {
  auto info = closure_components(parse_word("(2)"));
  CHECK(info.pairing == EndpointPairing::LeftRight);
  CHECK(info.two_component == ClosureKind::Denominator);
  CHECK(closure_components(parse_word("(2,-3,-2,1)")).two_component == ClosureKind::Denominator);
  CHECK(closure_components(parse_word("(1,1)")).two_component == ClosureKind::Numerator);
  CHECK_FALSE(closure_components(parse_word("(1)")).two_component.has_value());
}

TEST_CASE("rational splittability anchors") {
  CHECK(rational_splittability(parse_word("(0)")).kind == VerdictKind::Splittable);
  CHECK(rational_splittability(parse_word("(2)")).kind == VerdictKind::Unsplittable);
  CHECK(rational_splittability(parse_word("(-2)")).kind == VerdictKind::Unsplittable);
  CHECK(rational_splittability(parse_word("(1,-1)")).kind == VerdictKind::Splittable);
  CHECK_THROWS_AS(rational_splittability(parse_word("(3)")), Error);
}

TEST_CASE("classification matches the corner-strand oracle") {
  oracle::for_each_size_word(4, 3, [](const PseudoTangleWord& w) {
    const auto kinds = classify_syllables(w);
    const auto traced = oracle::corner_strand_kinds(w);
    CAPTURE(render_word(w));
    CHECK(kinds == traced.kinds);
    CHECK(oracle::satisfies_six_conditions(w, kinds));
    const auto counts = count_intersections(w);
    const auto info = closure_components(w);
    CHECK((counts.nsi % 2 == 0) == info.two_component.has_value());
    CHECK(info.pairing == traced.pairing);
  });
}

TEST_CASE("decomposition covers every syllable and alternates") {
  oracle::for_each_size_word(5, 3, [](const PseudoTangleWord& w) {
    CAPTURE(render_word(w));
    const auto d = decompose_word(w);
    int next = 0;
    bool prev_si = true;
    for (const auto& b : d.blocks) {
      CHECK(b.is_si() != prev_si);
      prev_si = b.is_si();
      for (int i : b.syllables) CHECK(i == next++);
    }
    CHECK(next == static_cast<int>(w.length()));
  });
}

TEST_CASE("statements preserve the fraction up to reciprocal") {
  oracle::for_each_net_word(4, 2, [](const PseudoTangleWord& w) {
    const auto f = tangle_fraction(w);
    for (int st = 0; st <= 5; ++st) {
      for (std::size_t pos = 0; pos < w.length(); ++pos) {
        const auto next = apply_statement(w, static_cast<TangleStatement>(st), pos);
        if (!next) continue;
        CAPTURE(render_word(w));
        CAPTURE(st);
        const auto g = tangle_fraction(*next);
        if (st <= 3)
          CHECK(g == f);
        else
          CHECK(g == f.reciprocal());
        const bool split_f = f.is_zero() || f.is_infinite();
        const bool split_g = g.is_zero() || g.is_infinite();
        CHECK(split_f == split_g);
      }
    }
  });
}

TEST_CASE("reduction keeps the verdict and mirroring negates the fraction") {
  oracle::for_each_net_word(4, 3, [](const PseudoTangleWord& w) {
    CAPTURE(render_word(w));
    const auto r = reduce_word(w);
    const auto f = tangle_fraction(w);
    const auto g = tangle_fraction(r);
    CHECK((f.is_zero() || f.is_infinite()) == (g.is_zero() || g.is_infinite()));
    PseudoTangleWord m = w;
    for (auto& s : m.syllables) s.net = -s.net;
    CHECK(tangle_fraction(m) == f.negated());
    CHECK(oracle::continued_fraction(w.nets()) == f);
  });
}
