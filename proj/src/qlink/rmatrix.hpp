#pragma once

#include <map>
#include <utility>
#include <vector>

#include "braid.hpp"
#include "ceval.hpp"
#include "hseries.hpp"
#include "laurent.hpp"

namespace qlink {

// Quantum integer [a] = (q^{a/2}-q^{-a/2})/(q^{1/2}-q^{-1/2}), quantum
// factorial [a]! and quantum binomial [m]!/([n]![m-n]!), all exact Laurent
// polynomials in q.
LaurentPoly q_int(int a);
LaurentPoly q_factorial(int a);
LaurentPoly q_binomial(int m, int n);

// Elementary crossing operator for incoming slot colors (g1, g2), sending
// V_{g1} (x) V_{g2} to V_{g2} (x) V_{g1}. Keys are incoming basis pairs
// (m1, m2); each maps to its outgoing pairs with exact coefficients. The
// operator conserves m1 + m2, which keeps the inverse blockwise.
struct CrossingOp {
    int g1 = 0;
    int g2 = 0;
    bool positive = true;
    std::map<std::pair<int, int>,
             std::vector<std::pair<std::pair<int, int>, LaurentPoly>>>
        terms;
};

// Cached; build every operator a braid word needs before using them from
// parallel code.
const CrossingOp& crossing_op(int g1, int g2, bool positive);

// Trace of the quantum-weighted braid operator over the strand modules.
// slot_colors[i] is the module dimension entering bottom slot i (0-based).
// The two kernels compute the same sum; the serial one is the reference
// for the parallel one.
LaurentPoly quantum_trace_serial(const BraidWord& b,
                                 const std::vector<int>& slot_colors);
LaurentPoly quantum_trace_parallel(const BraidWord& b,
                                   const std::vector<int>& slot_colors);

struct JonesResult {
    LinkClosure closure;
    std::vector<int> colors;
    // Framing-corrected invariant, a Laurent polynomial in q on the
    // quarter-exponent lattice.
    LaurentPoly jones;
};

// Colored Jones polynomial of the braid closure; colors are the module
// dimensions per link component, in component order.
JonesResult colored_jones(const BraidWord& b, const std::vector<int>& colors);

// Coefficients of the expansion J = sum_n P_n(colors) h^n, h = q-1.
// P_n is a polynomial in variables a1..aL (one per component), odd in each
// variable, of degree <= 2n+1 in each. Fitted by exact interpolation on
// integer colors and cross-checked on a held-out color tuple.
struct MMExpansion {
    int order = 0;
    LinkClosure closure;
    std::vector<LaurentPoly> pn;
};

MMExpansion melvin_morton_coeffs(const BraidWord& b, int order);

// Numeric check of the color reflection alpha_j -> K - alpha_j at
// q = exp(2 pi i / K): residual = |J' - sign * J| evaluated with the
// given precision, magnitude = max(|J|, |J'|) for scale.
struct SymmetryCheck {
    std::vector<int> colors;
    std::vector<int> colors_reflected;
    int j = 0;
    int K = 0;
    int sign = 1;
    BigFloat residual;
    BigFloat magnitude;
};

SymmetryCheck symmetry_principle_check(const BraidWord& b,
                                       const std::vector<int>& colors, int j,
                                       int K, unsigned digits);

}  // namespace qlink
