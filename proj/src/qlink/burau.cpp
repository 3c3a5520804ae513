#include "burau.hpp"

#include <algorithm>

#include "errors.hpp"

namespace qlink {

LMat mat_identity(int n) {
    LMat m(n, std::vector<LaurentPoly>(n));
    for (int i = 0; i < n; ++i) m[i][i] = LaurentPoly::constant(Rat(1));
    return m;
}

LMat mat_mul(const LMat& a, const LMat& b) {
    const int n = static_cast<int>(a.size());
    const int k = static_cast<int>(b.size());
    const int m = static_cast<int>(b[0].size());
    LMat out(n, std::vector<LaurentPoly>(m));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            for (int l = 0; l < k; ++l)
                if (!a[i][l].is_zero() && !b[l][j].is_zero())
                    out[i][j] += a[i][l] * b[l][j];
    return out;
}

LaurentPoly bareiss_det(LMat m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return LaurentPoly::constant(Rat(1));
    LaurentPoly prev = LaurentPoly::constant(Rat(1));
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) { swap_row = i; break; }
            if (swap_row < 0) return LaurentPoly();
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                LaurentPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = num.divide_exact(prev);
            }
            m[i][k] = LaurentPoly();
        }
        prev = m[k][k];
    }
    LaurentPoly det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

namespace {

// Reduced two-strand blocks: the positive block in variables of the strands
// entering slots (p, p+1) and its inverse pattern for negative letters.
void apply_letter_block(LMat& m, int p, int sign, const LVar& v1, const LVar& v2) {
    // Left-multiplies m by the block acting on rows p-1, p (0-based).
    LaurentPoly a, b, c, d;
    if (sign > 0) {
        LaurentPoly t2inv = LaurentPoly::monomial(v2, -2);
        a = LaurentPoly::constant(Rat(1)) - t2inv;
        b = LaurentPoly::monomial(v1, -2);
        c = LaurentPoly::constant(Rat(1));
        d = LaurentPoly();
    } else {
        LaurentPoly t1 = LaurentPoly::monomial(v1, 2);
        a = LaurentPoly();
        b = LaurentPoly::constant(Rat(1));
        c = LaurentPoly::monomial(v2, 2);
        d = LaurentPoly::monomial(v1, -2) * LaurentPoly::monomial(v2, 2) *
            (LaurentPoly::constant(Rat(1)) - t1);
    }
    const int n = static_cast<int>(m.size());
    int r0 = p - 1, r1 = p;
    for (int j = 0; j < n; ++j) {
        LaurentPoly top = a * m[r0][j] + b * m[r1][j];
        LaurentPoly bot = c * m[r0][j] + d * m[r1][j];
        m[r0][j] = std::move(top);
        m[r1][j] = std::move(bot);
    }
}

}  // namespace

LMat burau_matrix(const BraidWord& b, const LinkClosure& lc) {
    LMat m = mat_identity(b.strands);
    for (size_t l = 0; l < b.letters.size(); ++l) {
        int w = b.letters[l];
        int p = w < 0 ? -w : w;
        auto [c1, c2] = lc.crossing_components[l];
        apply_letter_block(m, p, w < 0 ? -1 : 1, tvar(c1), tvar(c2));
    }
    return m;
}

LaurentPoly quantum_integer(const LVar& v, int a) {
    if (a == 0) return LaurentPoly();
    if (a < 0) return -quantum_integer(v, -a);
    if (v.scale % 2 != 0)
        throw Error("quantum integer needs a variable with half powers");
    LaurentPoly sum;
    for (int k = 0; k < a; ++k)
        sum += LaurentPoly::monomial(v, (a - 1 - 2 * k) * (v.scale / 2));
    return sum;
}

AlexanderData alexander_conway(const BraidWord& b) {
    AlexanderData out;
    out.closure = close_braid(b);
    const LinkClosure& lc = out.closure;
    const int n = b.strands;

    LMat bm = burau_matrix(b, lc);
    LMat one_minus(n, std::vector<LaurentPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // Q = diag(0,1,...,1) kills the first row of B.
            LaurentPoly v = (i == 0) ? LaurentPoly() : -bm[i][j];
            if (i == j) v += LaurentPoly::constant(Rat(1));
            one_minus[i][j] = std::move(v);
        }
    out.det_part = bareiss_det(std::move(one_minus));

    LaurentPoly phi0 = LaurentPoly::monomial(tvar(1), 1);
    for (int j = 1; j <= lc.components; ++j) {
        int colsum = 0;
        for (int i = 1; i <= lc.components; ++i) colsum += lc.linking[i][j];
        int scaled = colsum - lc.strands_of_component[j];
        if (scaled != 0) phi0 *= LaurentPoly::monomial(tvar(j), scaled);
    }
    out.phi0 = phi0;

    LaurentPoly numerator = out.phi0 * out.det_part;
    if (lc.components == 1) {
        out.alexander = numerator;
    } else {
        LaurentPoly den = LaurentPoly::monomial(tvar(1), 1) -
                          LaurentPoly::monomial(tvar(1), -1);
        out.conway = numerator.divide_exact(den);
    }
    return out;
}

SublinkBraid remove_component(const BraidWord& b, int comp) {
    LinkClosure lc = close_braid(b);
    if (comp < 1 || comp > lc.components) throw Error("no such component");

    SublinkBraid out;
    for (int j = 1; j <= lc.components; ++j)
        if (j != comp) out.orig_component.push_back(j);

    // Ghost flag per current position while replaying the word.
    std::vector<char> ghost(b.strands + 1, 0);
    int kept = 0;
    for (int i = 1; i <= b.strands; ++i) {
        ghost[i] = (lc.component_of_position[i] == comp);
        if (!ghost[i]) ++kept;
    }
    out.braid.strands = std::max(kept, 1);
    for (int w : b.letters) {
        int p = w < 0 ? -w : w;
        bool g1 = ghost[p], g2 = ghost[p + 1];
        if (!g1 && !g2) {
            int shift = 0;
            for (int i = 1; i < p; ++i)
                if (ghost[i]) ++shift;
            out.braid.letters.push_back(w > 0 ? p - shift : -(p - shift));
        }
        std::swap(ghost[p], ghost[p + 1]);
    }
    return out;
}

LaurentPoly torres_residual(const BraidWord& b, int comp) {
    AlexanderData full = alexander_conway(b);
    if (full.closure.components < 2) throw Error("Torres check needs L >= 2");

    LaurentPoly lhs = full.conway.subst_one(tvar(comp).name);

    SublinkBraid sub = remove_component(b, comp);
    AlexanderData part = alexander_conway(sub.braid);
    // Rename sublink variables back to the original component numbering.
    auto rename = [&](const LaurentPoly& p) {
        LaurentPoly r = p;
        // Two passes via temporary names avoid collisions.
        for (size_t k = 0; k < sub.orig_component.size(); ++k) {
            LVar tmp{"was" + std::to_string(k + 1), 2};
            r = r.subst_var_power(tvar(static_cast<int>(k + 1)).name, tmp, 1, 1);
        }
        for (size_t k = 0; k < sub.orig_component.size(); ++k)
            r = r.subst_var_power("was" + std::to_string(k + 1),
                                  tvar(sub.orig_component[k]), 1, 1);
        return r;
    };

    LaurentPoly rhs;
    if (part.closure.components == 1) {
        // The deleted-component factor divided by the knot's own
        // denominator is a quantum integer in the surviving variable.
        int j_orig = sub.orig_component[0];
        int a = full.closure.linking[comp][j_orig];
        rhs = quantum_integer(tvar(j_orig), a) * rename(part.alexander);
    } else {
        LaurentPoly pref_pos = LaurentPoly::constant(Rat(1));
        LaurentPoly pref_neg = LaurentPoly::constant(Rat(1));
        for (size_t k = 0; k < sub.orig_component.size(); ++k) {
            int j_orig = sub.orig_component[k];
            int l = full.closure.linking[comp][j_orig];
            pref_pos *= LaurentPoly::monomial(tvar(j_orig), l);
            pref_neg *= LaurentPoly::monomial(tvar(j_orig), -l);
        }
        rhs = (pref_pos - pref_neg) * rename(part.conway);
    }
    return lhs - rhs;
}

}  // namespace qlink
