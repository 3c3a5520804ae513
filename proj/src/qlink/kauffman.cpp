#include "kauffman.hpp"

#include <numeric>

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

int resolution_loops(const BraidWord& b, unsigned long state) {
    const int n = b.strands;
    const int levels = static_cast<int>(b.letters.size()) + 1;
    auto node = [n](int level, int pos) { return level * n + (pos - 1); };
    UnionFind uf(levels * n);

    for (int l = 0; l < static_cast<int>(b.letters.size()); ++l) {
        int w = b.letters[l];
        int p = w < 0 ? -w : w;
        bool cupcap = (state >> l) & 1u;
        for (int pos = 1; pos <= n; ++pos) {
            if (pos == p || pos == p + 1) continue;
            uf.unite(node(l, pos), node(l + 1, pos));
        }
        if (cupcap) {
            uf.unite(node(l, p), node(l, p + 1));
            uf.unite(node(l + 1, p), node(l + 1, p + 1));
        } else {
            uf.unite(node(l, p), node(l + 1, p));
            uf.unite(node(l, p + 1), node(l + 1, p + 1));
        }
    }
    for (int pos = 1; pos <= n; ++pos) uf.unite(node(0, pos), node(levels - 1, pos));

    int loops = 0;
    for (int x = 0; x < levels * n; ++x)
        if (uf.find(x) == x) ++loops;
    return loops;
}

LaurentPoly kauffman_bracket(const BraidWord& b) {
    const size_t m = b.letters.size();
    if (m > 24) throw SizeError("too many crossings for state-sum bracket");
    const LVar a = avar();
    LaurentPoly delta = -(LaurentPoly::monomial(a, 2) + LaurentPoly::monomial(a, -2));
    LaurentPoly total;
    for (unsigned long state = 0; state < (1ul << m); ++state) {
        int apow = 0;
        for (size_t l = 0; l < m; ++l) {
            bool cupcap = (state >> l) & 1u;
            // sigma_p resolves to A*(through) + A^{-1}*(cup-cap); the
            // inverse crossing swaps the weights.
            int s = b.letters[l] > 0 ? 1 : -1;
            apow += cupcap ? -s : s;
        }
        int loops = resolution_loops(b, state);
        total += LaurentPoly::monomial(a, apow) * delta.pow(loops - 1);
    }
    return total;
}

LaurentPoly kauffman_normalized(const BraidWord& b) {
    LinkClosure lc = close_braid(b);
    LaurentPoly bracket = kauffman_bracket(b);
    const LVar a = avar();
    // (-A^3)^{-w}
    LaurentPoly corr = LaurentPoly::monomial(a, -3 * lc.writhe,
                                             lc.writhe % 2 == 0 ? Rat(1) : Rat(-1));
    return bracket * corr;
}

}  // namespace qlink
