#pragma once

#include "braid.hpp"
#include "laurent.hpp"

namespace qlink {

// Arc-level crossing data of the closed-braid diagram: at each crossing the
// incoming under-arc `in` ends, `out` begins, and `over` is the arc passing
// across, with the crossing sign.
struct WirtingerPresentation {
    int generators = 0;
    struct Relation {
        int out, over, in;
        int sign;
    };
    std::vector<Relation> relations;
};

// Builds the Wirtinger presentation of the closure; requires one component.
WirtingerPresentation wirtinger(const BraidWord& b);

// Alexander polynomial of a knot via Fox calculus on the Wirtinger
// presentation, normalized to be symmetric in t <-> t^{-1} with value 1 at
// t = 1. Completely independent of the Burau route; used as its oracle.
LaurentPoly fox_alexander(const BraidWord& b);

}  // namespace qlink
