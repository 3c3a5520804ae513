#include "fox.hpp"

#include <algorithm>
#include <numeric>

#include "burau.hpp"
#include "errors.hpp"

namespace qlink {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

WirtingerPresentation wirtinger(const BraidWord& b) {
    LinkClosure lc = close_braid(b);
    if (lc.components != 1) throw NotAKnot("closure has " +
                                           std::to_string(lc.components) +
                                           " components");
    const int n = b.strands;
    std::vector<int> arc_at(n + 1);
    for (int i = 1; i <= n; ++i) arc_at[i] = i - 1;
    int next_id = n;

    WirtingerPresentation pres;
    for (int w : b.letters) {
        int p = w < 0 ? -w : w;
        int a = arc_at[p], bb = arc_at[p + 1];
        int c = next_id++;
        if (w > 0) {
            // Strand at p passes over; the under-strand arrives from p+1.
            pres.relations.push_back({c, a, bb, +1});
            arc_at[p] = c;
            arc_at[p + 1] = a;
        } else {
            pres.relations.push_back({c, bb, a, -1});
            arc_at[p] = bb;
            arc_at[p + 1] = c;
        }
    }

    UnionFind uf(next_id);
    for (int i = 1; i <= n; ++i) uf.unite(arc_at[i], i - 1);

    std::vector<int> compact(next_id, -1);
    int g = 0;
    for (int id = 0; id < next_id; ++id) {
        int root = uf.find(id);
        if (compact[root] < 0) compact[root] = g++;
    }
    pres.generators = g;
    for (auto& r : pres.relations) {
        r.out = compact[uf.find(r.out)];
        r.over = compact[uf.find(r.over)];
        r.in = compact[uf.find(r.in)];
    }
    return pres;
}

namespace {

// Dense univariate polynomials over Q for the minor gcd; exponents are the
// t-lattice of the Alexander matrix entries shifted to start at zero.
using Poly = std::vector<Rat>;

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_rem(Poly a, const Poly& b) {
    poly_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        poly_trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

Poly laurent_to_dense(const LaurentPoly& p, int32_t lo) {
    Poly out;
    for (const auto& [k, c] : p.terms()) {
        int32_t e = k.empty() ? 0 : k[0];
        size_t idx = static_cast<size_t>((e - lo) / 2);
        if (out.size() <= idx) out.resize(idx + 1, Rat(0));
        out[idx] = c;
    }
    poly_trim(out);
    return out;
}

}  // namespace

LaurentPoly fox_alexander(const BraidWord& b) {
    WirtingerPresentation pres = wirtinger(b);
    const int g = pres.generators;
    if (g <= 1) return LaurentPoly::constant(Rat(1));

    const LVar t = tvar(1);
    LaurentPoly one = LaurentPoly::constant(Rat(1));
    LaurentPoly tp = LaurentPoly::monomial(t, 2);
    LaurentPoly tm = LaurentPoly::monomial(t, -2);

    // Fox derivative rows of out * over^e * in^{-1} * over^{-e} at s -> t.
    const int rows = static_cast<int>(pres.relations.size());
    LMat mat(rows, std::vector<LaurentPoly>(g));
    for (int r = 0; r < rows; ++r) {
        const auto& rel = pres.relations[r];
        mat[r][rel.out] += one;
        if (rel.sign > 0) {
            mat[r][rel.over] += tp - one;
            mat[r][rel.in] -= tp;
        } else {
            mat[r][rel.over] += tm - one;
            mat[r][rel.in] -= tm;
        }
    }

    // Delete one generator column, then take the gcd of all maximal minors.
    const int cols = g - 1;
    if (rows < cols) throw Error("underdetermined Wirtinger matrix");
    std::vector<int> pick(cols);
    std::iota(pick.begin(), pick.end(), 0);
    Poly acc;
    while (true) {
        LMat sub(cols, std::vector<LaurentPoly>(cols));
        for (int i = 0; i < cols; ++i)
            for (int j = 0; j < cols; ++j) sub[i][j] = mat[pick[i]][j + 1];
        LaurentPoly det = bareiss_det(std::move(sub));
        if (!det.is_zero()) {
            auto [lo, hi] = det.exp_range(t.name);
            acc = poly_gcd(std::move(acc), laurent_to_dense(det, lo));
            if (acc.size() == 1) break;  // gcd already trivial
        }
        // Next row combination.
        int i = cols - 1;
        while (i >= 0 && pick[i] == rows - cols + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < cols; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (acc.empty()) throw Error("vanishing Alexander matrix for a knot");

    LaurentPoly delta;
    for (size_t i = 0; i < acc.size(); ++i)
        if (acc[i] != 0) delta += LaurentPoly::monomial(t, static_cast<int32_t>(2 * i), acc[i]);

    // Center exponents, then scale so the value at t = 1 is 1.
    auto [lo, hi] = delta.exp_range(t.name);
    delta = delta.shifted(t, -static_cast<int32_t>((lo + hi) / 2));
    Rat at_one = delta.subst_one(t.name).constant_value();
    if (at_one == 0) throw Error("knot polynomial vanishes at 1");
    delta *= Rat(1) / at_one;
    if (!(delta.with_var_inverted(t.name) == delta))
        throw Error("normalized knot polynomial not symmetric");
    return delta;
}

}  // namespace qlink
