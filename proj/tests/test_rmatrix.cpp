#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <vector>

#include "qlink/rmatrix.hpp"

using namespace qlink;

namespace {

using State = std::vector<int>;
using Front = std::map<State, LaurentPoly>;

LaurentPoly q(int32_t e, const Rat& c = Rat(1)) {
    return LaurentPoly::monomial(qvar(), e, c);
}

// Applies the word to one basis state, tracking per-slot colors.
Front apply_word(const std::vector<int>& letters, std::vector<int> cols,
                 const State& start) {
    Front front;
    front[start] = LaurentPoly::constant(Rat(1));
    for (int g : letters) {
        int p = std::abs(g) - 1;
        const CrossingOp& op = crossing_op(cols[p], cols[p + 1], g > 0);
        Front next;
        for (const auto& [s, c] : front) {
            auto it = op.terms.find({s[p], s[p + 1]});
            if (it == op.terms.end()) continue;
            for (const auto& [out, oc] : it->second) {
                State ns = s;
                ns[p] = out.first;
                ns[p + 1] = out.second;
                next[ns] += c * oc;
            }
        }
        for (auto it = next.begin(); it != next.end();)
            it = it->second.is_zero() ? next.erase(it) : std::next(it);
        front = std::move(next);
        std::swap(cols[p], cols[p + 1]);
    }
    return front;
}

void check_words_equal(const std::vector<int>& w1, const std::vector<int>& w2,
                       const std::vector<int>& cols) {
    long dim = 1;
    for (int g : cols) dim *= g;
    for (long idx = 0; idx < dim; ++idx) {
        State s(cols.size());
        long rest = idx;
        for (size_t i = 0; i < cols.size(); ++i) {
            s[i] = (int)(rest % cols[i]);
            rest /= cols[i];
        }
        CHECK(apply_word(w1, cols, s) == apply_word(w2, cols, s));
    }
}

LaurentPoly jones(const std::string& text, const std::vector<int>& colors) {
    return colored_jones(parse_braid(text), colors).jones;
}

}  // namespace

TEST_CASE("quantum integers and binomials") {
    CHECK(q_int(1) == LaurentPoly::constant(Rat(1)));
    CHECK(q_int(2) == q(2) + q(-2));
    CHECK(q_int(3) == q(4) + LaurentPoly::constant(Rat(1)) + q(-4));
    CHECK(q_int(-2) == -q_int(2));
    CHECK(q_binomial(4, 2) == q_binomial(4, 2).with_all_vars_inverted());
    CHECK(q_binomial(4, 0) == LaurentPoly::constant(Rat(1)));
    CHECK(q_binomial(2, 1) == q_int(2));
    // [4 choose 2] = [3][4]/[2] = q^2 + q + 2 + q^-1 + q^-2.
    CHECK(q_binomial(4, 2) ==
          q(8) + q(4) + LaurentPoly::constant(Rat(2)) + q(-4) + q(-8));
}

TEST_CASE("crossing operators invert each other") {
    for (int g1 = 1; g1 <= 3; ++g1) {
        for (int g2 = 1; g2 <= 3; ++g2) {
            std::vector<int> cols{g1, g2};
            check_words_equal({1, -1}, {}, cols);
            check_words_equal({-1, 1}, {}, cols);
        }
    }
}

TEST_CASE("braid relations hold on the strand modules") {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c = 1; c <= 3; ++c)
                check_words_equal({1, 2, 1}, {2, 1, 2}, {a, b, c});
    check_words_equal({1, 3}, {3, 1}, {2, 3, 2, 3});
    check_words_equal({1, -3}, {-3, 1}, {2, 2, 3, 3});
}

TEST_CASE("unknot and stabilization anchors") {
    for (int g = 1; g <= 5; ++g) {
        CHECK(jones("1:", {g}) == q_int(g));
        CHECK(jones("2: 1", {g}) == q_int(g));
        CHECK(jones("2: -1", {g}) == q_int(g));
    }
    CHECK(jones("3: 1 -2", {4}) == q_int(4));
}

TEST_CASE("split and linked unknot pairs") {
    for (int a = 1; a <= 3; ++a) {
        for (int b = 1; b <= 3; ++b) {
            CHECK(jones("2:", {a, b}) == q_int(a) * q_int(b));
            CHECK(jones("2: 1 1", {a, b}) == q_int(a * b));
        }
    }
}

TEST_CASE("deleting a color-one component changes nothing") {
    CHECK(jones("3: 1 1 1 2 2", {2, 1}) == jones("2: 1 1 1", {2}));
    CHECK(jones("3: 1 1 1 2 2", {3, 1}) == jones("2: 1 1 1", {3}));
    // The middle component of the chain keeps the ends apart, so coloring
    // it trivially leaves a split pair.
    CHECK(jones("3: 1 1 2 2", {2, 1, 2}) == jones("2:", {2, 2}));
}

TEST_CASE("framed trace values from the tables") {
    // Right trefoil at color 2 equals [2] times the Jones polynomial
    // in t = 1/q.
    CHECK(jones("2: 1 1 1", {2}) == q(-18, Rat(-1)) + q(-10) + q(-6) + q(-2));
    CHECK(jones("3: 1 2 1 2", {2}) == jones("2: 1 1 1", {2}));
}

TEST_CASE("presentation invariance of the colored trace") {
    for (int g = 2; g <= 3; ++g)
        CHECK(jones("2: 1 1 1", {g}) == jones("3: 1 2 1 2", {g}));
    BraidWord tref = parse_braid("2: 1 1 1");
    for (const auto& m : markov_moves(tref))
        CHECK(colored_jones(m, {3}).jones == jones("2: 1 1 1", {3}));
    BraidWord hopf = parse_braid("2: 1 1");
    for (const auto& m : markov_moves(hopf))
        CHECK(colored_jones(m, {2, 2}).jones == jones("2: 1 1", {2, 2}));
}

TEST_CASE("serial and parallel traces agree") {
    for (const char* text : {"2: 1 1 1", "3: 1 -2 1 -2", "2: 1 1"}) {
        BraidWord b = parse_braid(text);
        LinkClosure lc = close_braid(b);
        std::vector<int> cols(b.strands, 3);
        CHECK(quantum_trace_serial(b, cols) == quantum_trace_parallel(b, cols));
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(colored_jones(parse_braid("2: 1 1"), {2}), Error);
    CHECK_THROWS_AS(colored_jones(parse_braid("1:"), {0}), Error);
    CHECK_THROWS_AS(colored_jones(parse_braid("1:"), {200000}), SizeError);
}

TEST_CASE("color expansion coefficients") {
    MMExpansion mm = melvin_morton_coeffs(parse_braid("1:"), 2);
    LaurentPoly a1 = LaurentPoly::monomial(LVar{"a1", 1}, 1);
    CHECK(mm.pn[0] == a1);
    CHECK(mm.pn[1] == LaurentPoly());
    CHECK(mm.pn[2] ==
          LaurentPoly::monomial(LVar{"a1", 1}, 3, Rat(1, 24)) +
              LaurentPoly::monomial(LVar{"a1", 1}, 1, Rat(-1, 24)));

    mm = melvin_morton_coeffs(parse_braid("2: 1 1 1"), 3);
    CHECK(mm.pn[0] == a1);
    CHECK(mm.pn[1] == LaurentPoly());

    mm = melvin_morton_coeffs(parse_braid("2: 1 1"), 2);
    LaurentPoly a1a2 = LaurentPoly::monomial(LVar{"a1", 1}, 1) *
                       LaurentPoly::monomial(LVar{"a2", 1}, 1);
    CHECK(mm.pn[0] == a1a2);

    // Degree bound: every exponent is odd and at most 2n+1.
    for (int n = 0; n <= 2; ++n) {
        for (const auto& [key, c] : mm.pn[n].terms()) {
            (void)c;
            for (int32_t e : key) {
                CHECK(e % 2 == 1);
                CHECK(e <= 2 * n + 1);
            }
        }
    }
}

TEST_CASE("color reflection at a root of unity") {
    SymmetryCheck sc =
        symmetry_principle_check(parse_braid("2: 1 1"), {2, 3}, 2, 5, 50);
    CHECK(sc.sign == -1);
    CHECK(sc.colors_reflected == std::vector<int>{2, 2});
    CHECK(sc.residual < BigFloat("1e-40"));

    sc = symmetry_principle_check(parse_braid("2: 1 1 1"), {2}, 1, 5, 50);
    CHECK(sc.sign == 1);
    CHECK(sc.colors_reflected == std::vector<int>{3});
    CHECK(sc.residual < BigFloat("1e-40"));

    sc = symmetry_principle_check(parse_braid("3: 1 -2 1 -2"), {3}, 1, 6, 50);
    CHECK(sc.colors_reflected == std::vector<int>{3});
    CHECK(sc.residual < BigFloat("1e-40"));

    CHECK_THROWS_AS(
        symmetry_principle_check(parse_braid("2: 1 1"), {2, 5}, 1, 5, 50),
        Error);
}
