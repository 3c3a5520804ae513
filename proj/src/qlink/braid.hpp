#pragma once

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace qlink {

// A braid word on `strands` strands. Letters are nonzero integers: +p is the
// positive crossing of positions p and p+1, -p its inverse. Letters act
// bottom to top in list order.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    friend bool operator==(const BraidWord& a, const BraidWord& b) {
        return a.strands == b.strands && a.letters == b.letters;
    }
};

// Text form "N: w1 w2 ...", e.g. "3: 1 -2 1 -2"; "1:" is the unknot.
BraidWord parse_braid(const std::string& text);
std::string braid_to_text(const BraidWord& b);

// Combinatorial data of the braid closure. Components are numbered from 1
// in order of first appearance at the bottom, left to right.
struct LinkClosure {
    int strands = 1;
    int components = 1;
    // Component of each bottom position (1-based entries, index 0 unused).
    std::vector<int> component_of_position;
    // Closure permutation: the strand entering bottom position i leaves at
    // top position perm[i].
    std::vector<int> perm;
    // Number of strands each component contributes (index 0 unused).
    std::vector<int> strands_of_component;
    // Pairwise linking numbers l_ij (half the signed crossing count between
    // distinct components) and self-writhes l_jj on the diagonal.
    std::vector<std::vector<int>> linking;
    // For each letter, the components of the strands entering the crossing
    // at positions (p, p+1), in that order.
    std::vector<std::pair<int, int>> crossing_components;
    int writhe = 0;

    int total_linking_diag() const {
        int s = 0;
        for (int j = 1; j <= components; ++j) s += linking[j][j];
        return s;
    }
    int total_linking_off() const {
        int s = 0;
        for (int i = 1; i <= components; ++i)
            for (int j = i + 1; j <= components; ++j) s += linking[i][j];
        return s;
    }
};

LinkClosure close_braid(const BraidWord& b);

// Markov-equivalent presentations of the same link: conjugations by each
// generator, one cyclic rotation, and both stabilizations on a new strand.
std::vector<BraidWord> markov_moves(const BraidWord& b);

}  // namespace qlink
