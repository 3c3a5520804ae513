#pragma once

#include <vector>

#include "braid.hpp"
#include "burau.hpp"
#include "hseries.hpp"
#include "laurent.hpp"

namespace qlink {

// Reducible-connection contribution to the colored Jones function of a braid
// closure, computed as an exact h-adic series with the colors kept as formal
// t variables. The result is presented over powers of the Alexander-Conway
// invariant:
//
//   h * Jhr = sum_n pn[n] h^n / denom^{2n+1},
//
// where denom is the Conway function for links and the Alexander polynomial
// for knots, and the pn are Laurent polynomials in the component variables
// on the half lattice with dyadic rational coefficients.
struct U1RCSeries {
    LinkClosure closure;
    int order = 0;
    // Unit monomial relating det_part to the Alexander invariant.
    LaurentPoly phi0;
    // det(1 - Q B) of the undeformed reduced matrix.
    LaurentPoly det_part;
    LaurentPoly denom;
    std::vector<LaurentPoly> pn;
};

// Throws VanishingAlexander when det(1 - Q B) = 0 (split closures).
U1RCSeries u1rc_series(const BraidWord& b, int order);

// The series after the color substitution t_j -> q^{alpha_j}: an honest
// truncated h-Laurent series with exact rational coefficients. Throws
// DenominatorVanishesToOrder when the substituted denominator vanishes
// through the requested order; a pole of the denominator below that order is
// inverted as a Laurent series instead.
struct ColoredU1RC {
    std::vector<long> colors;
    int order = 0;
    // q^{lk} * Jhr at t = q^alpha, where lk = (1/2) sum_{i<j} l_ij a_i a_j.
    // Laurent in h: the lower order can reach -1 for links; the coefficients
    // are exact through h^order.
    HSeries<Rat> series;
};

// Colors must be nonzero integers, one per component; order defaults to
// s.order - 1, the deepest truncation the stored numerators determine.
ColoredU1RC substitute_colors(const U1RCSeries& s, const std::vector<long>& colors,
                              int order = -1);

}  // namespace qlink
