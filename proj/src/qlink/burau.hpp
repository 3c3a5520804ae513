#pragma once

#include <vector>

#include "braid.hpp"
#include "laurent.hpp"

namespace qlink {

using LMat = std::vector<std::vector<LaurentPoly>>;

LMat mat_identity(int n);
LMat mat_mul(const LMat& a, const LMat& b);
// Fraction-free determinant (Bareiss elimination with exact divisions).
LaurentPoly bareiss_det(LMat m);

// Reduced Burau matrix of the braid word with strands carrying the t
// variable of their link component. Letters act bottom to top, so the first
// letter is the rightmost factor of the product.
LMat burau_matrix(const BraidWord& b, const LinkClosure& lc);

struct AlexanderData {
    LinkClosure closure;
    // det(1 - Q B) with Q = diag(0,1,...,1).
    LaurentPoly det_part;
    // Unit monomial making the determinant into the Alexander invariant.
    LaurentPoly phi0;
    // L >= 2: the Alexander-Conway function, a genuine Laurent polynomial.
    // Zero when the link splits.
    LaurentPoly conway;
    // L == 1: the Alexander polynomial phi0*det, symmetric with value 1 at
    // t = 1 (the Conway function divides this by t^{1/2}-t^{-1/2}).
    LaurentPoly alexander;
};

AlexanderData alexander_conway(const BraidWord& b);

// Deletes every strand of one link component, renumbering the rest.
// `orig_component` maps the sublink's component indices (1-based) back to
// the input link's numbering.
struct SublinkBraid {
    BraidWord braid;
    std::vector<int> orig_component;
};
SublinkBraid remove_component(const BraidWord& b, int comp);

// Difference between nabla(L) at t_i = 1 and its predicted factorization
// over the sublink with component i deleted; zero iff the identity holds.
LaurentPoly torres_residual(const BraidWord& b, int comp);

// Quantum integer (t^{a/2} - t^{-a/2})/(t^{1/2} - t^{-1/2}) in the given
// variable; zero for a = 0, and defined for negative a by antisymmetry.
LaurentPoly quantum_integer(const LVar& v, int a);

}  // namespace qlink
