#include "u1rc.hpp"

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <utility>

#include "denfrac.hpp"
#include "errors.hpp"
#include "jet.hpp"
#include "rat.hpp"
#include "tpoly.hpp"

namespace qlink {

namespace {

using Jet = EpsJet<LaurentPoly>;
using JMat = std::vector<std::vector<Jet>>;

Jet jet_var(const JetShape* shape, int var, const LaurentPoly& c) {
    Jet j(shape);
    Jet::Key k(shape->nvars(), 0);
    k[static_cast<size_t>(var)] = 1;
    j.insert_term(k, c);
    return j;
}

// Parametrized two-strand blocks. The letter's first two jet variables tag
// uses of its left and right incoming columns, the third tags the binomial
// entry, and the fourth deforms that binomial additively.
void apply_jet_block(JMat& m, const JetShape* shape, int letter_index, int p,
                     int sign, const LVar& v1, const LVar& v2) {
    const int e = 4 * letter_index;
    const LaurentPoly one = LaurentPoly::constant(Rat(1));
    Jet a(shape), b(shape), c(shape), d(shape);
    if (sign > 0) {
        Jet e13 = jet_var(shape, e + 0, one);
        e13 += jet_var(shape, e + 2, one);
        Jet bin = Jet::constant(shape, one - LaurentPoly::monomial(v2, -2));
        bin += jet_var(shape, e + 3, one);
        a = jet_exp(e13) * bin;
        b = jet_exp(jet_var(shape, e + 1, one));
        b.scale(LaurentPoly::monomial(v1, -2));
        c = jet_exp(jet_var(shape, e + 0, one));
    } else {
        Jet e23 = jet_var(shape, e + 1, one);
        e23 += jet_var(shape, e + 2, one);
        Jet bin = Jet::constant(shape, one - LaurentPoly::monomial(v1, 2));
        bin += jet_var(shape, e + 3, one);
        d = jet_exp(e23) * bin;
        d.scale(LaurentPoly::monomial(v1, -2) * LaurentPoly::monomial(v2, 2));
        b = jet_exp(jet_var(shape, e + 1, one));
        c = jet_exp(jet_var(shape, e + 0, one));
        c.scale(LaurentPoly::monomial(v2, 2));
    }
    const int n = static_cast<int>(m.size());
    int r0 = p - 1, r1 = p;
    for (int j = 0; j < n; ++j) {
        Jet top = a * m[r0][j];
        top += b * m[r1][j];
        Jet bot = c * m[r0][j];
        bot += d * m[r1][j];
        m[r0][j] = std::move(top);
        m[r1][j] = std::move(bot);
    }
}

// Cofactor determinant with memoization on the active column set; the jet
// ring has no division, and the matrices are small.
Jet jet_det(const std::vector<std::vector<Jet>>& m, const JetShape* shape) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return Jet::constant(shape, LaurentPoly::constant(Rat(1)));
    if (n > 30) throw SizeError("determinant too large");
    std::map<uint32_t, Jet> memo;
    memo.emplace(0u, Jet::constant(shape, LaurentPoly::constant(Rat(1))));
    std::function<const Jet&(uint32_t)> go = [&](uint32_t mask) -> const Jet& {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int r = n - __builtin_popcount(mask);
        Jet acc(shape);
        int sign = 1;
        for (int col = 0; col < n; ++col) {
            if (!(mask >> col & 1u)) continue;
            if (!m[static_cast<size_t>(r)][static_cast<size_t>(col)].is_zero()) {
                Jet sub = m[static_cast<size_t>(r)][static_cast<size_t>(col)] *
                          go(mask & ~(1u << col));
                if (sign < 0) sub = -sub;
                acc += sub;
            }
            sign = -sign;
        }
        return memo.emplace(mask, std::move(acc)).first->second;
    };
    return go((1u << n) - 1);
}

struct Consumer {
    int order;
    const TaylorTables* tables;
    std::vector<std::vector<Rat>> ctable;
    std::vector<int> signs;
    std::map<std::array<int, 5>, HSeries<Rat>> letter_memo;
    std::vector<HSeries<Rat>> mu_memo;

    Consumer(int order_, const std::vector<int>& signs_)
        : order(order_),
          tables(&taylor_tables(order_)),
          ctable(half_power_coeffs(order_)),
          signs(signs_) {
        for (int m = 0; m <= order; ++m) {
            HSeries<Rat> s(order);
            Rat w(factorial(m));
            for (int k = m; k <= order; ++k) {
                Rat c = ctable[static_cast<size_t>(k)][static_cast<size_t>(m)] * w;
                if (c != 0) s.set(k, c);
            }
            mu_memo.push_back(std::move(s));
        }
    }

    const HSeries<Rat>& letter_series(int sign, int a, int b, int d, int j) {
        std::array<int, 5> key{sign, a, b, d, j};
        auto it = letter_memo.find(key);
        if (it != letter_memo.end()) return it->second;
        HSeries<Rat> s(order);
        Rat w = Rat(factorial(a)) * Rat(factorial(b)) * Rat(factorial(d)) *
                Rat(factorial(j));
        for (int k = 0; j + k <= order; ++k) {
            Rat c = table_coeff(tables->at(sign > 0, j, k), a, b, d);
            if (c != 0) s.set(j + k, c * w);
        }
        return letter_memo.emplace(key, std::move(s)).first->second;
    }

    // h-series a jet monomial contributes once its deformation degrees are
    // consumed by the crossing tables and the closure weight expansion.
    HSeries<Rat> weight(const Jet::Key& key) {
        HSeries<Rat> f = HSeries<Rat>::one(order);
        for (size_t l = 0; l < signs.size(); ++l) {
            const uint8_t* e = key.data() + 4 * l;
            if (!(e[0] | e[1] | e[2] | e[3])) continue;
            f *= letter_series(signs[l], e[0], e[1], e[2], e[3]);
            if (f.is_zero()) return f;
        }
        int m = key[4 * signs.size()];
        if (m > order) return HSeries<Rat>(order);
        if (m > 0) f *= mu_memo[static_cast<size_t>(m)];
        return f;
    }
};

}  // namespace

U1RCSeries u1rc_series(const BraidWord& b, int order) {
    if (order < 0) throw Error("negative truncation order");
    U1RCSeries out;
    out.order = order;
    out.closure = close_braid(b);
    const LinkClosure& lc = out.closure;
    const int n = b.strands;

    AlexanderData ad = alexander_conway(b);
    out.phi0 = ad.phi0;
    out.det_part = ad.det_part;
    out.denom = lc.components == 1 ? ad.alexander : ad.conway;
    if (out.det_part.is_zero())
        throw VanishingAlexander("split closure has no reducible-connection series");

    JetShape shape;
    for (int w : b.letters) shape.letter_signs.push_back(w < 0 ? -1 : 1);
    shape.budget = order;

    JMat bm(static_cast<size_t>(n), std::vector<Jet>(static_cast<size_t>(n), Jet(&shape)));
    for (int i = 0; i < n; ++i)
        bm[static_cast<size_t>(i)][static_cast<size_t>(i)] =
            Jet::constant(&shape, LaurentPoly::constant(Rat(1)));
    for (size_t l = 0; l < b.letters.size(); ++l) {
        int w = b.letters[l];
        int p = w < 0 ? -w : w;
        auto [c1, c2] = lc.crossing_components[l];
        apply_jet_block(bm, &shape, static_cast<int>(l), p, w < 0 ? -1 : 1,
                        tvar(c1), tvar(c2));
    }

    // Rows and columns 2..n of 1 - (1+mu)^2 Q B; the first row of the full
    // matrix is e_1, so its determinant equals this minor's.
    Jet mu2 = Jet::constant(&shape, LaurentPoly::constant(Rat(1)));
    {
        Jet::Key k(static_cast<size_t>(shape.nvars()), 0);
        k[static_cast<size_t>(shape.mu_index())] = 1;
        mu2.insert_term(k, LaurentPoly::constant(Rat(2)));
        k[static_cast<size_t>(shape.mu_index())] = 2;
        mu2.insert_term(k, LaurentPoly::constant(Rat(1)));
    }
    std::vector<std::vector<Jet>> mm(static_cast<size_t>(n - 1),
                                     std::vector<Jet>(static_cast<size_t>(n - 1), Jet(&shape)));
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            Jet v = -(mu2 * bm[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            if (i == j) v += Jet::constant(&shape, LaurentPoly::constant(Rat(1)));
            mm[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = std::move(v);
        }
    Jet det = jet_det(mm, &shape);

    LaurentPoly d0 = det.value_at_zero();
    if (!(d0 == out.det_part))
        throw Error("deformed determinant disagrees with the Alexander determinant");

    // Geometric inversion of det around d0 with shared denominator powers,
    // consuming each deformation monomial into its h-series on the fly. A
    // monomial's cost is at least half its total degree, so powers beyond
    // 2 * order carry no monomial within the budget.
    auto base = std::make_shared<const LaurentPoly>(d0);
    Consumer consumer(order, shape.letter_signs);
    std::vector<DenFrac> acc(static_cast<size_t>(order) + 1);
    Jet w = det;
    w -= Jet::constant(&shape, d0);
    Jet power = Jet::constant(&shape, LaurentPoly::constant(Rat(1)));
    for (int k = 0; k <= 2 * order; ++k) {
        if (k > 0) {
            power = power * w;
            if (power.is_zero()) break;
        }
        for (const auto& [key, coeff] : power.terms()) {
            HSeries<Rat> f = consumer.weight(key);
            for (int nn = f.lowest(); nn <= order; ++nn) {
                Rat v = f.at(nn);
                if (v == 0) continue;
                if (k % 2) v = -v;
                acc[static_cast<size_t>(nn)] += DenFrac(coeff * v, k + 1, base);
            }
        }
    }

    // Common prefactor: (1 - 1/t_1) / (1 - 1/q) times fixed q and t powers.
    // The t powers reduce to (t_1^{1/2} - t_1^{-1/2}) / phi0, folded into the
    // closed presentation below; the q power joins the (1+h)/h pole factor.
    Rat x = rat(lc.total_linking_diag() + lc.total_linking_off() - n, 2);
    HSeries<Rat> pref = binomial_series(x + 1, order);
    std::vector<DenFrac> conv(static_cast<size_t>(order) + 1);
    for (int nn = 0; nn <= order; ++nn)
        for (int i = 0; i <= nn; ++i) {
            Rat c = pref.at(i);
            if (c == 0 || acc[static_cast<size_t>(nn - i)].is_zero()) continue;
            conv[static_cast<size_t>(nn)] += acc[static_cast<size_t>(nn - i)] * c;
        }

    LaurentPoly s1 = LaurentPoly::monomial(tvar(1), 1) - LaurentPoly::monomial(tvar(1), -1);
    for (int nn = 0; nn <= order; ++nn) {
        DenFrac f = conv[static_cast<size_t>(nn)];
        f.reduce();
        if (f.is_zero()) {
            out.pn.emplace_back();
            continue;
        }
        if (f.pow > 2 * nn + 1)
            throw DegreeBoundViolated("denominator power exceeds its order bound");
        LaurentPoly num = f.num * out.phi0.pow(2 * nn) * out.det_part.pow(2 * nn + 1 - f.pow);
        if (lc.components == 1)
            num *= s1;
        else
            num = num.divide_exact(s1.pow(2 * nn));
        out.pn.push_back(std::move(num));
    }
    return out;
}

ColoredU1RC substitute_colors(const U1RCSeries& s, const std::vector<long>& colors,
                              int order) {
    if (static_cast<int>(colors.size()) != s.closure.components)
        throw Error("need one color per component");
    for (long a : colors)
        if (a == 0) throw Error("colors must be nonzero");
    if (order < 0) order = s.order - 1;
    if (order > s.order - 1)
        throw Error("color substitution deeper than the stored truncation");
    ColoredU1RC out;
    out.colors = colors;
    out.order = order;

    // The stored series is h * Jhr, so one extra order feeds the 1/h shift.
    const int target = order + 1;
    HSeries<Rat> den = h_expand_q(s.denom.t_to_qpow(colors), target);
    if (den.lowest() > order)
        throw DenominatorVanishesToOrder("denominator vanishes at these colors through h^" +
                                         std::to_string(order));
    const int v = den.lowest();
    // With a pole of order v in 1/den, each product loses v orders of
    // precision per denominator factor; widen the working order to land every
    // term exact through h^target.
    const int work = target + (2 * s.order + 2) * v;
    if (v > 0) den = h_expand_q(s.denom.t_to_qpow(colors), work);

    HSeries<Rat> invd = den.invert();
    HSeries<Rat> invd2 = invd * invd;
    HSeries<Rat> dpow = invd;
    HSeries<Rat> total(target);
    for (int nn = 0; nn <= s.order; ++nn) {
        if (nn > 0) dpow = dpow * invd2;
        const LaurentPoly& p = s.pn[static_cast<size_t>(nn)];
        if (p.is_zero()) continue;
        HSeries<Rat> pq = h_expand_q(p.t_to_qpow(colors), work);
        total += (pq * dpow).shifted(nn);
    }

    Rat lk(0);
    for (int i = 1; i <= s.closure.components; ++i)
        for (int j = i + 1; j <= s.closure.components; ++j)
            lk += rat(s.closure.linking[static_cast<size_t>(i)][static_cast<size_t>(j)], 2) *
                  Rat(colors[static_cast<size_t>(i - 1)]) * Rat(colors[static_cast<size_t>(j - 1)]);
    HSeries<Rat> qlk = binomial_series(lk, work);
    out.series = (total * qlk).shifted(-1).truncated(order);
    return out;
}

}  // namespace qlink
