#include "braid.hpp"

#include <algorithm>
#include <sstream>

namespace qlink {

BraidWord parse_braid(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("braid text needs 'N: ...'");
    BraidWord b;
    {
        std::istringstream head(text.substr(0, colon));
        if (!(head >> b.strands)) throw ParseError("bad strand count");
        std::string rest;
        if (head >> rest) throw ParseError("junk before ':'");
        if (b.strands < 1) throw ParseError("strand count must be positive");
    }
    std::istringstream body(text.substr(colon + 1));
    int w;
    while (body >> w) {
        int p = w < 0 ? -w : w;
        if (p < 1 || p >= b.strands)
            throw ParseError("letter " + std::to_string(w) + " out of range for " +
                             std::to_string(b.strands) + " strands");
        b.letters.push_back(w);
    }
    if (!body.eof()) throw ParseError("non-integer letter");
    return b;
}

std::string braid_to_text(const BraidWord& b) {
    std::ostringstream os;
    os << b.strands << ":";
    for (int w : b.letters) os << " " << w;
    return os.str();
}

LinkClosure close_braid(const BraidWord& b) {
    const int n = b.strands;
    LinkClosure lc;
    lc.strands = n;
    lc.writhe = 0;

    // Track which bottom position each strand started from while the word
    // permutes them upward.
    std::vector<int> origin(n + 1);
    for (int i = 1; i <= n; ++i) origin[i] = i;
    struct Cross {
        int p;
        int sign;
        int s1, s2;  // origins of the strands entering positions p, p+1
    };
    std::vector<Cross> crossings;
    crossings.reserve(b.letters.size());
    for (int w : b.letters) {
        int p = w < 0 ? -w : w;
        crossings.push_back({p, w < 0 ? -1 : 1, origin[p], origin[p + 1]});
        std::swap(origin[p], origin[p + 1]);
        lc.writhe += w < 0 ? -1 : 1;
    }

    lc.perm.assign(n + 1, 0);
    for (int top = 1; top <= n; ++top) lc.perm[origin[top]] = top;

    // Components: cycles of the closure permutation, numbered by smallest
    // bottom position.
    lc.component_of_position.assign(n + 1, 0);
    int comp = 0;
    for (int i = 1; i <= n; ++i) {
        if (lc.component_of_position[i]) continue;
        ++comp;
        for (int j = i; !lc.component_of_position[j]; j = lc.perm[j])
            lc.component_of_position[j] = comp;
    }
    lc.components = comp;

    lc.strands_of_component.assign(comp + 1, 0);
    for (int i = 1; i <= n; ++i) ++lc.strands_of_component[lc.component_of_position[i]];

    std::vector<std::vector<int>> signed_count(comp + 1, std::vector<int>(comp + 1, 0));
    for (const Cross& c : crossings) {
        int c1 = lc.component_of_position[c.s1];
        int c2 = lc.component_of_position[c.s2];
        signed_count[c1][c2] += c.sign;
        if (c1 != c2) signed_count[c2][c1] += c.sign;
        lc.crossing_components.emplace_back(c1, c2);
    }
    lc.linking.assign(comp + 1, std::vector<int>(comp + 1, 0));
    for (int i = 1; i <= comp; ++i) {
        for (int j = 1; j <= comp; ++j) {
            if (i == j) {
                lc.linking[i][i] = signed_count[i][i];
            } else {
                if (signed_count[i][j] % 2 != 0)
                    throw Error("odd signed crossing count between components");
                lc.linking[i][j] = signed_count[i][j] / 2;
            }
        }
    }
    return lc;
}

std::vector<BraidWord> markov_moves(const BraidWord& b) {
    std::vector<BraidWord> out;
    for (int g = 1; g < b.strands; ++g) {
        for (int dir : {1, -1}) {
            BraidWord c;
            c.strands = b.strands;
            c.letters.push_back(-dir * g);
            c.letters.insert(c.letters.end(), b.letters.begin(), b.letters.end());
            c.letters.push_back(dir * g);
            out.push_back(std::move(c));
        }
    }
    if (b.letters.size() > 1) {
        BraidWord rot = b;
        std::rotate(rot.letters.begin(), rot.letters.begin() + 1, rot.letters.end());
        out.push_back(std::move(rot));
    }
    for (int dir : {1, -1}) {
        BraidWord s = b;
        s.strands = b.strands + 1;
        s.letters.push_back(dir * b.strands);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace qlink
