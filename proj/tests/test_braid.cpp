#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlink/braid.hpp"
#include "qlink/catalog.hpp"

using namespace qlink;

TEST_CASE("parse and format round trip") {
    for (const char* text : {"2: 1 1 1", "3: 1 -2", "1:", "2:", "3: 1 -2 1 -2"}) {
        BraidWord b = parse_braid(text);
        CHECK(braid_to_text(b) == text);
    }
    CHECK(parse_braid("2: 1 1 1").letters == std::vector<int>{1, 1, 1});
    CHECK(parse_braid("1:").strands == 1);

    CHECK_THROWS_AS(parse_braid("2: 2"), ParseError);
    CHECK_THROWS_AS(parse_braid("2: 0"), ParseError);
    CHECK_THROWS_AS(parse_braid("x: 1"), ParseError);
    CHECK_THROWS_AS(parse_braid("3 1 2"), ParseError);
    CHECK_THROWS_AS(parse_braid("2: one"), ParseError);
}

TEST_CASE("closure components and linking") {
    LinkClosure tref = close_braid(parse_braid("2: 1 1 1"));
    CHECK(tref.components == 1);
    CHECK(tref.linking[1][1] == 3);
    CHECK(tref.strands_of_component[1] == 2);
    CHECK(tref.writhe == 3);

    LinkClosure hopf = close_braid(parse_braid("2: 1 1"));
    CHECK(hopf.components == 2);
    CHECK(hopf.linking[1][2] == 1);
    CHECK(hopf.linking[2][1] == 1);
    CHECK(hopf.linking[1][1] == 0);
    CHECK(hopf.strands_of_component[1] == 1);
    CHECK(hopf.crossing_components ==
          std::vector<std::pair<int, int>>{{1, 2}, {2, 1}});

    LinkClosure split = close_braid(parse_braid("2:"));
    CHECK(split.components == 2);
    CHECK(split.linking[1][2] == 0);

    LinkClosure t24 = close_braid(parse_braid("2: 1 1 1 1"));
    CHECK(t24.components == 2);
    CHECK(t24.linking[1][2] == 2);

    LinkClosure neg = close_braid(parse_braid("2: -1 -1"));
    CHECK(neg.components == 2);
    CHECK(neg.linking[1][2] == -1);

    LinkClosure fig8 = close_braid(parse_braid("3: 1 -2 1 -2"));
    CHECK(fig8.components == 1);
    CHECK(fig8.linking[1][1] == 0);
    CHECK(fig8.writhe == 0);
}

TEST_CASE("sign sum decomposes over the linking matrix") {
    for (const char* text :
         {"2: 1 1 1", "2: 1 1", "3: 1 -2 1 -2", "2: 1 1 1 1", "3: 1 2 1 2",
          "3: 1 1 -2 2 2", "4: 1 -2 3 -2 1 3"}) {
        LinkClosure lc = close_braid(parse_braid(text));
        CHECK(lc.writhe == lc.total_linking_diag() + 2 * lc.total_linking_off());
    }
}

TEST_CASE("component labels constant along permutation cycles") {
    for (const char* text : {"3: 1 2 1 2", "4: 1 -2 3 -2 1 3", "3: 1 1"}) {
        LinkClosure lc = close_braid(parse_braid(text));
        for (int i = 1; i <= lc.strands; ++i)
            CHECK(lc.component_of_position[i] ==
                  lc.component_of_position[lc.perm[i]]);
    }
}

TEST_CASE("markov moves preserve the closure's link data where expected") {
    BraidWord tref = parse_braid("2: 1 1 1");
    auto moves = markov_moves(tref);
    CHECK(moves.size() >= 4);
    for (const auto& m : moves) {
        LinkClosure lc = close_braid(m);
        CHECK(lc.components == 1);
        CHECK(lc.linking[1][1] >= 2);  // stabilization may add +-1
    }
    bool saw_bigger = false;
    for (const auto& m : moves) saw_bigger |= (m.strands == 3);
    CHECK(saw_bigger);
}

TEST_CASE("catalog entries parse and close") {
    CHECK(catalog_entries().size() == 7);
    for (const auto& e : catalog_entries()) {
        auto b = catalog_lookup(e.name);
        REQUIRE(b.has_value());
        LinkClosure lc = close_braid(*b);
        CHECK(lc.strands == b->strands);
    }
    CHECK(catalog_lookup("T(2,4)").has_value());
    CHECK(catalog_lookup("Hopf").has_value());
    CHECK_FALSE(catalog_lookup("granny").has_value());

    LinkClosure t24 = close_braid(*catalog_lookup("t24"));
    CHECK(t24.components == 2);
    LinkClosure fig8 = close_braid(*catalog_lookup("figure-eight"));
    CHECK(fig8.components == 1);
    LinkClosure alt = close_braid(*catalog_lookup("trefoil-alt"));
    CHECK(alt.components == 1);
    CHECK(alt.linking[1][1] == 4);
}
