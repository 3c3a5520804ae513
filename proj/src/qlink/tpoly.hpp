#pragma once

#include <vector>

#include "hseries.hpp"
#include "laurent.hpp"

namespace qlink {

// Coefficients c[k][n] (0 <= n <= k <= kmax) of the expansions
// (1/n!) ((1+h)^{-1/2} - 1)^n = sum_{k>=n} c[k][n] h^k.
std::vector<std::vector<Rat>> half_power_coeffs(int kmax);

// Taylor tables of the crossing jets. plus[j][k] and minus[j][k] are exact
// polynomials in the variables m1, m2, n carrying h-weight j+k; the j index
// counts inverse powers of the deformation direction, k the residual
// h-order. Entries exist for j + k <= order.
//
// They are recovered from closed-form expansions at integer arguments by
// exact interpolation, with degree bounds enforced and every table entry
// re-checked against a held-out argument triple.
struct TaylorTables {
    int order = 0;
    std::vector<std::vector<LaurentPoly>> plus, minus;
    const LaurentPoly& at(bool positive, int j, int k) const;
};

// Cached per order.
const TaylorTables& taylor_tables(int order);

// Coefficient of m1^a m2^b n^d in a table entry (handles entries whose
// roster omits unused variables).
Rat table_coeff(const LaurentPoly& p, int a, int b, int d);

// Evaluates a table entry at rational arguments.
Rat table_eval(const LaurentPoly& p, const Rat& m1, const Rat& m2, const Rat& n);

}  // namespace qlink
