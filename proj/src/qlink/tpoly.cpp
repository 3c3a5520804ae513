#include "tpoly.hpp"

#include <map>
#include <memory>
#include <tuple>
#include <utility>

#include "errors.hpp"

namespace qlink {

namespace {

const char* kSlotNames[3] = {"m1", "m2", "n"};

LVar slot_var(int slot) { return LVar{kSlotNames[slot], 1}; }

LaurentPoly qmono(long e) {
    return LaurentPoly::monomial(qvar(), static_cast<int32_t>(4 * e));
}

LaurentPoly one() { return LaurentPoly::constant(Rat(1)); }

// Closed-form crossing value at integer arguments. The variable w stands
// for the single t-dependence of the crossing (1/t2 on positive crossings,
// t1 on negative ones), so the result is a polynomial in w of degree n with
// Laurent coefficients in q.
LaurentPoly crossing_value(bool positive, int m1, int m2, int n) {
    LaurentPoly w = LaurentPoly::monomial(LVar{"w", 1}, 1);
    LaurentPoly num = one(), den = one();
    for (int l = 1; l <= n; ++l) {
        if (positive) {
            num *= qmono(-(m2 + l)) - w;
            num *= qmono(m1 - n + l) - one();
            den *= qmono(l) - one();
        } else {
            num *= qmono(m1 + l) - w;
            num *= qmono(-(m2 - n + l)) - one();
            den *= qmono(-l) - one();
        }
    }
    LaurentPoly x = num.divide_exact(den);
    long e = positive ? static_cast<long>(m1 + 1) * m2 + static_cast<long>(n) * (n + 1) / 2
                      : -(static_cast<long>(m1) * (m2 + 1) + static_cast<long>(n) * (n + 1) / 2);
    x *= qmono(e);
    return x;
}

// Rewrites the w-dependence in the basis v = 1 - w and splits the result by
// v-degree into pure-q polynomials; out[i] is the coefficient of v^i.
std::vector<LaurentPoly> split_by_v(const LaurentPoly& x, int n) {
    std::vector<LaurentPoly> out(static_cast<size_t>(n) + 1);
    int wi = x.var_index("w");
    for (const auto& [key, c] : x.terms()) {
        int32_t d = wi >= 0 ? key[wi] : 0;
        if (d < 0 || d > n) throw Error("crossing value has unexpected w-degree");
        LaurentPoly mono = LaurentPoly::constant(c);
        for (size_t i = 0; i < key.size(); ++i) {
            if (static_cast<int>(i) == wi || key[i] == 0) continue;
            mono *= LaurentPoly::monomial(x.vars()[i], key[i]);
        }
        for (int32_t i = 0; i <= d; ++i) {
            Rat b = rat_binom(Rat(d), i);
            if (i % 2) b = -b;
            out[i] += mono * b;
        }
    }
    return out;
}

// Layered expansion at one argument triple: s[j] = sum_k T_{j,k} h^{j+k},
// recovered as the v^{n-j} coefficient divided by the falling factorial
// n(n-1)...(n-j+1). Layers beyond the truncation order carry no usable
// coefficients and are skipped.
struct LayerSeries {
    std::vector<HSeries<Rat>> s;
};

LayerSeries expand_crossing(bool positive, int m1, int m2, int n, int order) {
    Rat lead = rat_binom(Rat(positive ? m1 : m2), n);
    if (lead == 0) throw Error("crossing expansion needs the strand weight to cover n");
    LaurentPoly x = crossing_value(positive, m1, m2, n);
    x *= Rat(1) / lead;
    std::vector<LaurentPoly> by_v = split_by_v(x, n);
    const int jcap = std::min(n, order);
    LayerSeries out;
    out.s.assign(static_cast<size_t>(jcap) + 1, HSeries<Rat>(order));
    Rat falling(1);
    for (int j = 0; j <= jcap; ++j) {
        if (j > 0) falling *= (n - j + 1);
        HSeries<Rat> se = h_expand_q(by_v[static_cast<size_t>(n - j)], order);
        if (se.lowest() < j)
            throw DegreeBoundViolated("crossing layer " + std::to_string(j) +
                                      " starts below its h-order");
        se.scale(Rat(1) / falling);
        out.s[static_cast<size_t>(j)] = std::move(se);
    }
    return out;
}

using NodeCache = std::map<std::tuple<bool, int, int, int>, LayerSeries>;

const LayerSeries& node(NodeCache& cache, bool positive, int m1, int m2, int n,
                        int order) {
    auto key = std::make_tuple(positive, m1, m2, n);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, expand_crossing(positive, m1, m2, n, order)).first;
    return it->second;
}

// Dense coefficients (constant first) of the polynomial through the points
// (xs[i], ys[i]); xs must be strictly increasing.
std::vector<LaurentPoly> newton_coeffs(const std::vector<int>& xs,
                                       std::vector<LaurentPoly> ys) {
    const size_t m = xs.size();
    for (size_t lvl = 1; lvl < m; ++lvl) {
        for (size_t i = m - 1; i >= lvl; --i) {
            LaurentPoly d = ys[i];
            d -= ys[i - 1];
            d *= rat(1, xs[i] - xs[i - lvl]);
            ys[i] = std::move(d);
            if (i == lvl) break;
        }
    }
    std::vector<LaurentPoly> cs(m);
    std::vector<Rat> basis{Rat(1)};
    for (size_t i = 0; i < m; ++i) {
        for (size_t d = 0; d < basis.size(); ++d)
            if (basis[d] != 0) cs[d] += ys[i] * basis[d];
        if (i + 1 == m) break;
        std::vector<Rat> next(basis.size() + 1, Rat(0));
        for (size_t d = 0; d < basis.size(); ++d) {
            next[d + 1] += basis[d];
            next[d] -= Rat(xs[i]) * basis[d];
        }
        basis = std::move(next);
    }
    return cs;
}

// Interpolates one table entry from exact values on integer grids and
// validates it against a held-out argument triple.
LaurentPoly build_entry(bool positive, int j, int k, int order, NodeCache& cache) {
    std::vector<int> ns;
    std::vector<LaurentPoly> per_n;
    for (int n = j; n <= 2 * j + 2 * k; ++n) {
        std::vector<int> bs;
        std::vector<LaurentPoly> rows;
        for (int mb = n; mb <= n + k; ++mb) {
            std::vector<int> fs;
            std::vector<LaurentPoly> vals;
            for (int mf = 0; mf <= j + k; ++mf) {
                int m1 = positive ? mb : mf;
                int m2 = positive ? mf : mb;
                const LayerSeries& ls = node(cache, positive, m1, m2, n, order);
                vals.push_back(LaurentPoly::constant(ls.s[static_cast<size_t>(j)].at(j + k)));
                fs.push_back(mf);
            }
            std::vector<LaurentPoly> cs = newton_coeffs(fs, std::move(vals));
            LaurentPoly p;
            for (size_t d = 0; d < cs.size(); ++d)
                if (!cs[d].is_zero())
                    p += cs[d] * LaurentPoly::monomial(slot_var(positive ? 1 : 0),
                                                       static_cast<int32_t>(d));
            rows.push_back(std::move(p));
            bs.push_back(mb);
        }
        std::vector<LaurentPoly> cs = newton_coeffs(bs, std::move(rows));
        LaurentPoly p;
        for (size_t d = 0; d < cs.size(); ++d)
            if (!cs[d].is_zero())
                p += cs[d] * LaurentPoly::monomial(slot_var(positive ? 0 : 1),
                                                   static_cast<int32_t>(d));
        per_n.push_back(std::move(p));
        ns.push_back(n);
    }
    std::vector<LaurentPoly> cs = newton_coeffs(ns, std::move(per_n));
    LaurentPoly entry;
    for (size_t d = 0; d < cs.size(); ++d)
        if (!cs[d].is_zero())
            entry += cs[d] * LaurentPoly::monomial(slot_var(2), static_cast<int32_t>(d));

    for (const auto& [key, c] : entry.terms()) {
        long total = 0;
        for (size_t i = 0; i < key.size(); ++i) {
            if (key[i] < 0) throw DegreeBoundViolated("table entry with inverse power");
            total += key[i];
            int bound = j + 2 * k;
            const std::string& name = entry.vars()[i].name;
            if (name == (positive ? "m1" : "m2"))
                bound = k;
            else if (name == (positive ? "m2" : "m1"))
                bound = j + k;
            if (key[i] > bound)
                throw DegreeBoundViolated("table entry exceeds its " + name + " degree");
        }
        if (total > j + 2 * k)
            throw DegreeBoundViolated("table entry exceeds its total degree");
    }

    const int hn = 2 * j + 2 * k + 1;
    const int hb = hn + k + 1;
    const int hf = j + k + 1;
    int m1 = positive ? hb : hf;
    int m2 = positive ? hf : hb;
    Rat direct = node(cache, positive, m1, m2, hn, order).s[static_cast<size_t>(j)].at(j + k);
    if (table_eval(entry, Rat(m1), Rat(m2), Rat(hn)) != direct)
        throw InterpolationInconsistent("table entry (" + std::to_string(j) + "," +
                                        std::to_string(k) + ") fails its held-out check");
    return entry;
}

}  // namespace

std::vector<std::vector<Rat>> half_power_coeffs(int kmax) {
    if (kmax < 0) throw Error("negative truncation order");
    std::vector<std::vector<Rat>> out(static_cast<size_t>(kmax) + 1,
                                      std::vector<Rat>(static_cast<size_t>(kmax) + 1, Rat(0)));
    HSeries<Rat> base = binomial_series(rat(-1, 2), kmax);
    base -= HSeries<Rat>::one(kmax);
    HSeries<Rat> pw = HSeries<Rat>::one(kmax);
    Rat fact(1);
    for (int n = 0; n <= kmax; ++n) {
        if (n > 0) {
            pw *= base;
            fact *= n;
        }
        for (int k = n; k <= kmax; ++k)
            out[static_cast<size_t>(k)][static_cast<size_t>(n)] = pw.at(k) / fact;
    }
    return out;
}

const LaurentPoly& TaylorTables::at(bool positive, int j, int k) const {
    const auto& side = positive ? plus : minus;
    if (j < 0 || k < 0 || j + k > order)
        throw Error("Taylor table index out of range");
    return side[static_cast<size_t>(j)][static_cast<size_t>(k)];
}

const TaylorTables& taylor_tables(int order) {
    static std::map<int, std::unique_ptr<const TaylorTables>> cache;
    if (order < 0) throw Error("negative truncation order");
    auto it = cache.find(order);
    if (it != cache.end()) return *it->second;

    auto t = std::make_unique<TaylorTables>();
    t->order = order;
    NodeCache nodes;
    for (auto* side : {&t->plus, &t->minus}) {
        bool positive = side == &t->plus;
        side->resize(static_cast<size_t>(order) + 1);
        for (int j = 0; j <= order; ++j) {
            (*side)[static_cast<size_t>(j)].resize(static_cast<size_t>(order - j) + 1);
            for (int k = 0; k + j <= order; ++k)
                (*side)[static_cast<size_t>(j)][static_cast<size_t>(k)] =
                    build_entry(positive, j, k, order, nodes);
        }
    }
    it = cache.emplace(order, std::move(t)).first;
    return *it->second;
}

Rat table_eval(const LaurentPoly& p, const Rat& m1, const Rat& m2, const Rat& n) {
    Rat total(0);
    for (const auto& [key, c] : p.terms()) {
        Rat term = c;
        for (size_t i = 0; i < key.size(); ++i) {
            if (key[i] == 0) continue;
            const std::string& name = p.vars()[i].name;
            const Rat* v = nullptr;
            if (name == "m1")
                v = &m1;
            else if (name == "m2")
                v = &m2;
            else if (name == "n")
                v = &n;
            else
                throw Error("table entry has unexpected variable '" + name + "'");
            term *= rat_pow(*v, key[i]);
        }
        total += term;
    }
    return total;
}

Rat table_coeff(const LaurentPoly& p, int a, int b, int d) {
    int want[3] = {a, b, d};
    for (const auto& [key, c] : p.terms()) {
        bool match = true;
        int seen[3] = {0, 0, 0};
        for (size_t i = 0; i < key.size(); ++i) {
            const std::string& name = p.vars()[i].name;
            bool known = false;
            for (int s = 0; s < 3; ++s) {
                if (name == kSlotNames[s]) {
                    seen[s] = key[i];
                    known = true;
                }
            }
            if (!known && key[i] != 0)
                throw Error("table entry has unexpected variable '" + name + "'");
        }
        for (int s = 0; s < 3; ++s)
            if (seen[s] != want[s]) match = false;
        if (match) return c;
    }
    return Rat(0);
}

}  // namespace qlink
