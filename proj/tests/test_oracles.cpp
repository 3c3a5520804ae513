#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlink/fox.hpp"
#include "qlink/kauffman.hpp"

using namespace qlink;

namespace {

LaurentPoly t(int32_t e, const Rat& c = Rat(1)) {
    return LaurentPoly::monomial(tvar(1), e, c);
}
LaurentPoly A(int32_t e, const Rat& c = Rat(1)) {
    return LaurentPoly::monomial(avar(), e, c);
}
LaurentPoly lone() { return LaurentPoly::constant(Rat(1)); }

}  // namespace

TEST_CASE("knot polynomial oracle on standard knots") {
    CHECK(fox_alexander(parse_braid("1:")) == lone());
    CHECK(fox_alexander(parse_braid("2: 1")) == lone());
    CHECK(fox_alexander(parse_braid("2: -1")) == lone());

    LaurentPoly tref = t(2) - lone() + t(-2);
    CHECK(fox_alexander(parse_braid("2: 1 1 1")) == tref);
    CHECK(fox_alexander(parse_braid("2: -1 -1 -1")) == tref);
    CHECK(fox_alexander(parse_braid("3: 1 2 1 2")) == tref);

    LaurentPoly fig8 = LaurentPoly::constant(Rat(3)) - t(2) - t(-2);
    CHECK(fox_alexander(parse_braid("3: 1 -2 1 -2")) == fig8);

    LaurentPoly cinq = t(4) - t(2) + lone() - t(-2) + t(-4);
    CHECK(fox_alexander(parse_braid("2: 1 1 1 1 1")) == cinq);

    // Granny knot: product of two trefoils.
    CHECK(fox_alexander(parse_braid("3: 1 1 1 2 2 2")) == tref * tref);

    CHECK_THROWS_AS(fox_alexander(parse_braid("2: 1 1")), NotAKnot);
    CHECK_THROWS_AS(fox_alexander(parse_braid("2:")), NotAKnot);
}

TEST_CASE("knot polynomial oracle is presentation independent") {
    for (const char* text : {"2: 1 1 1", "3: 1 -2 1 -2"}) {
        BraidWord b = parse_braid(text);
        LaurentPoly base = fox_alexander(b);
        for (const auto& m : markov_moves(b)) CHECK(fox_alexander(m) == base);
    }
}

TEST_CASE("bracket state sum basics") {
    CHECK(kauffman_bracket(parse_braid("1:")) == lone());
    LaurentPoly delta = A(2, Rat(-1)) + A(-2, Rat(-1));
    CHECK(kauffman_bracket(parse_braid("2:")) == delta);

    // One-crossing diagrams reduce to the unknot.
    CHECK(kauffman_normalized(parse_braid("2: 1")) == lone());
    CHECK(kauffman_normalized(parse_braid("2: -1")) == lone());

    CHECK(resolution_loops(parse_braid("2: 1 1"), 0b00) == 2);
    CHECK(resolution_loops(parse_braid("2: 1 1"), 0b11) == 2);
    CHECK(resolution_loops(parse_braid("2: 1 1"), 0b01) == 1);
}

TEST_CASE("skein oracle matches tabulated invariants") {
    // Positive Hopf link and both trefoils, plus the figure-eight; frozen
    // from the standard tables in the A variable.
    LaurentPoly hopf_expect = A(-2, Rat(-1)) + A(-10, Rat(-1));
    CHECK(kauffman_normalized(parse_braid("2: 1 1")) == hopf_expect);

    LaurentPoly tref_expect = A(-4) + A(-12) - A(-16);
    CHECK(kauffman_normalized(parse_braid("2: 1 1 1")) == tref_expect);
    CHECK(kauffman_normalized(parse_braid("3: 1 2 1 2")) == tref_expect);

    LaurentPoly mirror_expect = A(4) + A(12) - A(16);
    CHECK(kauffman_normalized(parse_braid("2: -1 -1 -1")) == mirror_expect);

    LaurentPoly fig8_expect = A(8) - A(4) + lone() - A(-4) + A(-8);
    CHECK(kauffman_normalized(parse_braid("3: 1 -2 1 -2")) == fig8_expect);
}

TEST_CASE("skein oracle is presentation independent") {
    for (const char* text : {"2: 1 1 1", "2: 1 1", "3: 1 -2 1 -2", "2: 1 1 1 1"}) {
        BraidWord b = parse_braid(text);
        LaurentPoly base = kauffman_normalized(b);
        for (const auto& m : markov_moves(b))
            CHECK(kauffman_normalized(m) == base);
    }
}
