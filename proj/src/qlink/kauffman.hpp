#pragma once

#include "braid.hpp"
#include "laurent.hpp"

namespace qlink {

// Diagram skein oracle for the Jones polynomial, fully independent of the
// representation-theoretic route: resolves every crossing of the closed
// braid diagram both ways, counts loops, and sums monomials in the skein
// variable A with loop value -A^2 - A^{-2}.
struct TLDiagram {
    // Loop count of the closure when each letter is resolved; resolution
    // bit 1 means the cup-cap smoothing, 0 the through-strands smoothing.
    int loops = 0;
};

// Raw bracket polynomial of the braid closure in A (scale 1).
LaurentPoly kauffman_bracket(const BraidWord& b);

// Writhe-corrected invariant (-A^3)^{-w} <closure>, normalized so the
// unknot gives 1. Returned in A; substitute A -> q^{±1/4} downstream.
LaurentPoly kauffman_normalized(const BraidWord& b);

// Loop count for one resolution state (exposed for the module tests).
int resolution_loops(const BraidWord& b, unsigned long state);

inline LVar avar() { return LVar{"A", 1}; }

}  // namespace qlink
