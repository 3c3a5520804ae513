#include "rmatrix.hpp"

#include <algorithm>
#include <memory>
#include <tuple>

#include "burau.hpp"
#include "errors.hpp"

namespace qlink {

namespace {

constexpr long kMaxTraceDim = 100000;

LaurentPoly qpow(int32_t lattice_exp, const Rat& c = Rat(1)) {
    return LaurentPoly::monomial(qvar(), lattice_exp, c);
}

// Coefficient of f_{m2+n} (x) f_{m1-n} in the image of f_{m1} (x) f_{m2}
// under the positive crossing operator on V_{g1} (x) V_{g2}.
LaurentPoly r_coefficient(int g1, int g2, int m1, int m2, int n) {
    LaurentPoly c = q_binomial(m1, n);
    for (int i = 0; i < n; ++i) {
        int32_t e = 2 * (g2 - m2 - 1 - i);
        c *= qpow(e) - qpow(-e);
    }
    int64_t quarter = (int64_t)(g1 - 2 * m1 - 1) * (g2 - 2 * m2 - 1) -
                      (int64_t)n * (g1 - g2 - 2 * m1 + 2 * m2 + n + 1);
    c *= qpow((int32_t)quarter);
    return c;
}

CrossingOp build_positive(int g1, int g2) {
    CrossingOp op;
    op.g1 = g1;
    op.g2 = g2;
    op.positive = true;
    for (int m1 = 0; m1 < g1; ++m1) {
        for (int m2 = 0; m2 < g2; ++m2) {
            auto& outs = op.terms[{m1, m2}];
            int nmax = std::min(m1, g2 - 1 - m2);
            for (int n = 0; n <= nmax; ++n)
                outs.push_back({{m2 + n, m1 - n}, r_coefficient(g1, g2, m1, m2, n)});
        }
    }
    return op;
}

LaurentPoly minor_det(const LMat& m, size_t drop_row, size_t drop_col) {
    size_t k = m.size();
    LMat sub(k - 1, std::vector<LaurentPoly>(k - 1));
    for (size_t r = 0, rr = 0; r < k; ++r) {
        if (r == drop_row) continue;
        for (size_t c = 0, cc = 0; c < k; ++c) {
            if (c == drop_col) continue;
            sub[rr][cc] = m[r][c];
            ++cc;
        }
        ++rr;
    }
    return bareiss_det(std::move(sub));
}

// The negative crossing on incoming colors (g1, g2) is the inverse of the
// positive crossing on (g2, g1). Inversion is done per block of constant
// m1 + m2; each block determinant is a unit monomial, so the adjugate
// divides exactly.
CrossingOp build_negative(int g1, int g2) {
    CrossingOp pos = build_positive(g2, g1);
    CrossingOp op;
    op.g1 = g1;
    op.g2 = g2;
    op.positive = false;
    for (int total = 0; total <= g1 + g2 - 2; ++total) {
        std::vector<std::pair<int, int>> ins, outs;
        for (int a = 0; a < g2; ++a) {
            int b = total - a;
            if (b >= 0 && b < g1) ins.push_back({a, b});
        }
        for (int c = 0; c < g1; ++c) {
            int d = total - c;
            if (d >= 0 && d < g2) outs.push_back({c, d});
        }
        if (ins.empty()) continue;
        size_t k = ins.size();
        LMat m(k, std::vector<LaurentPoly>(k));
        for (size_t j = 0; j < k; ++j) {
            for (const auto& [out_pair, c] : pos.terms.at(ins[j])) {
                size_t r = std::lower_bound(outs.begin(), outs.end(), out_pair) -
                           outs.begin();
                m[r][j] = c;
            }
        }
        LaurentPoly det = bareiss_det(m);
        if (!det.is_monomial())
            throw Error("crossing operator block determinant is not a unit");
        for (size_t o = 0; o < k; ++o) {
            auto& entry = op.terms[outs[o]];
            for (size_t i = 0; i < k; ++i) {
                LaurentPoly cof = k == 1 ? LaurentPoly::constant(Rat(1))
                                         : minor_det(m, o, i);
                if ((o + i) % 2 != 0) cof = -cof;
                LaurentPoly x = cof.divide_exact(det);
                if (!x.is_zero()) entry.push_back({ins[i], x});
            }
            if (entry.empty()) op.terms.erase(outs[o]);
        }
    }
    return op;
}

using State = std::vector<int>;

struct WordOp {
    const CrossingOp* op;
    int pos;
};

std::vector<WordOp> prepare_ops(const BraidWord& b,
                                const std::vector<int>& slot_colors) {
    std::vector<int> cols = slot_colors;
    std::vector<WordOp> ops;
    ops.reserve(b.letters.size());
    for (int g : b.letters) {
        int p = std::abs(g) - 1;
        ops.push_back({&crossing_op(cols[p], cols[p + 1], g > 0), p});
        std::swap(cols[p], cols[p + 1]);
    }
    if (cols != slot_colors)
        throw Error("strand colors do not close up around the braid");
    return ops;
}

// <state| B |state> times the per-strand quantum weight of the state.
LaurentPoly state_amplitude(const std::vector<WordOp>& ops,
                            const std::vector<int>& slot_colors,
                            const State& state) {
    std::map<State, LaurentPoly> front;
    front[state] = LaurentPoly::constant(Rat(1));
    for (const WordOp& w : ops) {
        std::map<State, LaurentPoly> next;
        for (const auto& [s, c] : front) {
            auto it = w.op->terms.find({s[w.pos], s[w.pos + 1]});
            if (it == w.op->terms.end()) continue;
            for (const auto& [out, oc] : it->second) {
                State ns = s;
                ns[w.pos] = out.first;
                ns[w.pos + 1] = out.second;
                next[std::move(ns)] += c * oc;
            }
        }
        for (auto it = next.begin(); it != next.end();)
            it = it->second.is_zero() ? next.erase(it) : std::next(it);
        front = std::move(next);
    }
    auto it = front.find(state);
    if (it == front.end()) return LaurentPoly();
    int32_t wexp = 0;
    for (size_t i = 0; i < state.size(); ++i)
        wexp += 2 * (slot_colors[i] - 2 * state[i] - 1);
    return it->second * qpow(wexp);
}

long state_space_dim(const std::vector<int>& slot_colors) {
    long dim = 1;
    for (int g : slot_colors) {
        if (g < 1) throw Error("colors must be positive integers");
        dim *= g;
        if (dim > kMaxTraceDim)
            throw SizeError("state space exceeds the trace size limit");
    }
    return dim;
}

State state_of_index(long idx, const std::vector<int>& slot_colors) {
    State s(slot_colors.size());
    for (size_t i = 0; i < slot_colors.size(); ++i) {
        s[i] = (int)(idx % slot_colors[i]);
        idx /= slot_colors[i];
    }
    return s;
}

Rat eval_at_integers(const LaurentPoly& p, const std::vector<Rat>& vals) {
    Rat sum(0);
    for (const auto& [key, c] : p.terms()) {
        Rat term = c;
        for (size_t i = 0; i < key.size(); ++i) {
            if (key[i] < 0) throw Error("negative exponent in color polynomial");
            term *= rat_pow(vals[i], key[i]);
        }
        sum += term;
    }
    return sum;
}

// Exact polynomial interpolation through (xs[i], ys[i]) by divided
// differences; returns dense coefficients, constant term first.
std::vector<Rat> newton_interp(const std::vector<Rat>& xs, std::vector<Rat> ys) {
    size_t n = xs.size();
    for (size_t k = 1; k < n; ++k)
        for (size_t i = n - 1; i >= k; --i) {
            ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - k]);
            if (i == k) break;
        }
    std::vector<Rat> c(n, Rat(0));
    c[0] = ys[n - 1];
    size_t deg = 0;
    for (size_t ii = n - 1; ii-- > 0;) {
        for (size_t k = deg + 1; k >= 1; --k) c[k] = c[k - 1] - xs[ii] * c[k];
        c[0] = -xs[ii] * c[0] + ys[ii];
        ++deg;
    }
    return c;
}

}  // namespace

LaurentPoly q_int(int a) { return quantum_integer(qvar(), a); }

LaurentPoly q_factorial(int a) {
    LaurentPoly p = LaurentPoly::constant(Rat(1));
    for (int k = 2; k <= a; ++k) p *= q_int(k);
    return p;
}

LaurentPoly q_binomial(int m, int n) {
    if (n < 0 || n > m) return LaurentPoly();
    return q_factorial(m).divide_exact(q_factorial(n)).divide_exact(
        q_factorial(m - n));
}

const CrossingOp& crossing_op(int g1, int g2, bool positive) {
    static std::map<std::tuple<int, int, bool>, std::unique_ptr<CrossingOp>>
        cache;
    auto key = std::make_tuple(g1, g2, positive);
    auto it = cache.find(key);
    if (it == cache.end()) {
        auto op = std::make_unique<CrossingOp>(
            positive ? build_positive(g1, g2) : build_negative(g1, g2));
        it = cache.emplace(key, std::move(op)).first;
    }
    return *it->second;
}

LaurentPoly quantum_trace_serial(const BraidWord& b,
                                 const std::vector<int>& slot_colors) {
    long dim = state_space_dim(slot_colors);
    std::vector<WordOp> ops = prepare_ops(b, slot_colors);
    LaurentPoly sum;
    for (long idx = 0; idx < dim; ++idx)
        sum += state_amplitude(ops, slot_colors, state_of_index(idx, slot_colors));
    return sum;
}

LaurentPoly quantum_trace_parallel(const BraidWord& b,
                                   const std::vector<int>& slot_colors) {
    long dim = state_space_dim(slot_colors);
    std::vector<WordOp> ops = prepare_ops(b, slot_colors);
    std::vector<LaurentPoly> amp(dim);
#pragma omp parallel for schedule(dynamic, 16)
    for (long idx = 0; idx < dim; ++idx)
        amp[idx] = state_amplitude(ops, slot_colors, state_of_index(idx, slot_colors));
    LaurentPoly sum;
    for (LaurentPoly& a : amp) sum += a;
    return sum;
}

JonesResult colored_jones(const BraidWord& b, const std::vector<int>& colors) {
    JonesResult out;
    out.closure = close_braid(b);
    out.colors = colors;
    if ((int)colors.size() != out.closure.components)
        throw Error("need one color per link component");
    std::vector<int> slot_colors(b.strands);
    for (int i = 0; i < b.strands; ++i)
        slot_colors[i] = colors[out.closure.component_of_position[i + 1] - 1];
    LaurentPoly trace = quantum_trace_parallel(b, slot_colors);
    int64_t framing = 0;
    for (int j = 1; j <= out.closure.components; ++j)
        framing += (int64_t)out.closure.linking[j][j] *
                   ((int64_t)colors[j - 1] * colors[j - 1] - 1);
    out.jones = trace * qpow((int32_t)-framing);
    return out;
}

MMExpansion melvin_morton_coeffs(const BraidWord& b, int order) {
    MMExpansion out;
    out.order = order;
    out.closure = close_braid(b);
    int L = out.closure.components;
    int D = 2 * order + 2;

    long total = 1;
    for (int j = 0; j < L; ++j) total *= D;
    std::vector<HSeries<Rat>> grid;
    grid.reserve(total);
    std::vector<int> colors(L);
    for (long idx = 0; idx < total; ++idx) {
        long rest = idx;
        for (int j = 0; j < L; ++j) {
            colors[j] = 1 + (int)(rest % D);
            rest /= D;
        }
        grid.push_back(h_expand_q(colored_jones(b, colors).jones, order));
    }

    std::vector<Rat> xs(D);
    for (int i = 0; i < D; ++i) xs[i] = Rat(i + 1);

    std::vector<int> held(L, D + 1);
    HSeries<Rat> held_series =
        h_expand_q(colored_jones(b, held).jones, order);
    std::vector<Rat> held_vals(L, Rat(D + 1));

    for (int n = 0; n <= order; ++n) {
        std::vector<Rat> vals(total);
        for (long idx = 0; idx < total; ++idx) vals[idx] = grid[idx].at(n);
        long stride = 1;
        for (int axis = 0; axis < L; ++axis) {
            for (long base = 0; base < total; ++base) {
                if ((base / stride) % D != 0) continue;
                std::vector<Rat> ys(D);
                for (int i = 0; i < D; ++i) ys[i] = vals[base + i * stride];
                std::vector<Rat> cs = newton_interp(xs, ys);
                for (int i = 0; i < D; ++i) vals[base + i * stride] = cs[i];
            }
            stride *= D;
        }
        LaurentPoly pn;
        for (long idx = 0; idx < total; ++idx) {
            if (vals[idx] == 0) continue;
            long rest = idx;
            LaurentPoly term = LaurentPoly::constant(vals[idx]);
            for (int j = 0; j < L; ++j) {
                int e = (int)(rest % D);
                rest /= D;
                term *= LaurentPoly::monomial(
                    LVar{"a" + std::to_string(j + 1), 1}, e);
            }
            pn += term;
        }
        for (const auto& [key, c] : pn.terms()) {
            (void)c;
            for (int32_t e : key)
                if (e % 2 == 0)
                    throw InterpolationInconsistent(
                        "coefficient polynomial has an even-degree term");
        }
        if (eval_at_integers(pn, held_vals) != held_series.at(n))
            throw InterpolationInconsistent(
                "held-out color disagrees with the fitted polynomial");
        out.pn.push_back(std::move(pn));
    }
    return out;
}

SymmetryCheck symmetry_principle_check(const BraidWord& b,
                                       const std::vector<int>& colors, int j,
                                       int K, unsigned digits) {
    SymmetryCheck out;
    out.colors = colors;
    out.j = j;
    out.K = K;
    LinkClosure lc = close_braid(b);
    if (j < 1 || j > lc.components) throw Error("component index out of range");
    for (int a : colors)
        if (a < 1 || a > K - 1) throw Error("colors must lie between 1 and K-1");
    out.colors_reflected = colors;
    out.colors_reflected[j - 1] = K - colors[j - 1];

    long exponent = 0;
    for (int k = 1; k <= lc.components; ++k)
        if (k != j) exponent += (long)lc.linking[j][k] * (colors[k - 1] - 1);
    out.sign = exponent % 2 == 0 ? 1 : -1;

    LaurentPoly jp = colored_jones(b, colors).jones;
    LaurentPoly jr = colored_jones(b, out.colors_reflected).jones;
    CF vp = eval_q_at_root(jp, K, digits);
    CF vr = eval_q_at_root(jr, K, digits);
    CF scaled{vp.re * out.sign, vp.im * out.sign};
    out.residual = cf_abs(cf_sub(vr, scaled));
    out.magnitude = std::max(cf_abs(vp), cf_abs(vr));
    return out;
}

}  // namespace qlink
