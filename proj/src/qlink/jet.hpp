#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "denfrac.hpp"
#include "errors.hpp"
#include "laurent.hpp"

namespace qlink {

// Variable layout for crossing jets: four deformation variables per braid
// letter, in letter order, then one global closure variable mu. The cost of
// a monomial is the least series order that can consume it, so truncating
// every intermediate to cost <= budget is lossless for results up to that
// order: costs add over variable groups and are monotone in each degree.
struct JetShape {
    std::vector<int> letter_signs;
    bool has_mu = true;
    int budget = 0;

    int nvars() const {
        return 4 * static_cast<int>(letter_signs.size()) + (has_mu ? 1 : 0);
    }
    int mu_index() const { return 4 * static_cast<int>(letter_signs.size()); }

    // Least h-order of an operator term that extracts eps1^a eps2^b
    // eps3^d eps4^j at one positive letter; the negative letter swaps the
    // roles of the first two degrees.
    static int letter_cost(int sign, int a, int b, int d, int j) {
        if (sign < 0) std::swap(a, b);
        int m = a;
        m = std::max(m, b - j);
        int y = a + b + d - j;
        if (y > 0) m = std::max(m, (y + 1) / 2);
        m = std::max(m, 0);
        return j + m;
    }

    int cost(const std::vector<uint8_t>& key) const {
        int c = 0;
        for (size_t l = 0; l < letter_signs.size(); ++l) {
            const uint8_t* e = key.data() + 4 * l;
            c += letter_cost(letter_signs[l], e[0], e[1], e[2], e[3]);
            if (c > budget) return c;
        }
        if (has_mu) c += key[mu_index()];
        return c;
    }
};

template <class R>
struct JetRingOne;

template <>
struct JetRingOne<LaurentPoly> {
    static LaurentPoly value() { return LaurentPoly::constant(Rat(1)); }
};

template <>
struct JetRingOne<DenFrac> {
    static DenFrac value() { return DenFrac(LaurentPoly::constant(Rat(1)), 0, nullptr); }
};

// Sparse truncated polynomial in the jet variables over a coefficient ring
// (Laurent polynomials while multiplying braid letters, fractions with
// denominator powers after inverting the determinant). Multiplication drops
// every monomial whose cost exceeds the shape budget.
template <class R>
class EpsJet {
public:
    using Key = std::vector<uint8_t>;
    using TermMap = std::map<Key, R>;

    EpsJet() : shape_(nullptr) {}
    explicit EpsJet(const JetShape* shape) : shape_(shape) {}

    static EpsJet constant(const JetShape* shape, const R& c) {
        EpsJet j(shape);
        j.insert_term(Key(shape->nvars(), 0), c);
        return j;
    }

    const JetShape* shape() const { return shape_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void insert_term(const Key& k, const R& v) {
        if (ring_is_zero(v)) return;
        if (shape_->cost(k) > shape_->budget) return;
        auto [it, fresh] = terms_.emplace(k, v);
        if (!fresh) {
            it->second += v;
            if (ring_is_zero(it->second)) terms_.erase(it);
        }
    }

    EpsJet& operator+=(const EpsJet& o) {
        check_shape(o);
        for (const auto& [k, v] : o.terms_) insert_term(k, v);
        return *this;
    }

    EpsJet operator-() const {
        EpsJet j(shape_);
        for (const auto& [k, v] : terms_) j.terms_.emplace(k, -v);
        return j;
    }

    EpsJet& operator-=(const EpsJet& o) { return *this += -o; }

    friend EpsJet operator*(const EpsJet& a, const EpsJet& b) {
        a.check_shape(b);
        EpsJet out(a.shape_);
        const int nv = a.shape_->nvars();
        Key k(nv);
        for (const auto& [ka, va] : a.terms_) {
            for (const auto& [kb, vb] : b.terms_) {
                bool overflow = false;
                for (int i = 0; i < nv; ++i) {
                    int s = ka[i] + kb[i];
                    if (s > 255) { overflow = true; break; }
                    k[i] = static_cast<uint8_t>(s);
                }
                if (overflow) throw JetCapExceeded("jet degree exceeds 255");
                if (out.shape_->cost(k) > out.shape_->budget) continue;
                out.insert_term(k, va * vb);
            }
        }
        return out;
    }

    EpsJet& operator*=(const EpsJet& o) { return *this = *this * o; }

    template <class S>
    EpsJet& scale(const S& c) {
        TermMap out;
        for (auto& [k, v] : terms_) {
            R nv = v * c;
            if (!ring_is_zero(nv)) out.emplace(k, std::move(nv));
        }
        terms_ = std::move(out);
        return *this;
    }

    // exp(j) = sum j^k/k! for jets with vanishing constant term; terminates
    // because every non-constant monomial has positive cost.
    friend EpsJet jet_exp(const EpsJet& j) {
        Key zero_key(j.shape_->nvars(), 0);
        if (j.terms_.count(zero_key))
            throw NonzeroConstantTerm("jet exponential");
        EpsJet acc = EpsJet::constant(j.shape_, JetRingOne<R>::value());
        acc += j;
        EpsJet power = j;
        Rat fact(1);
        // Degree alone does not bound cost, so run until pruning empties the
        // power; monomial costs grow without bound in total degree.
        const int hard_cap = 4 * j.shape_->budget * (j.shape_->nvars() + 1) + 4;
        for (int k = 2; k <= hard_cap; ++k) {
            power = power * j;
            if (power.is_zero()) break;
            fact *= k;
            EpsJet term = power;
            term.scale(Rat(1) / fact);
            acc += term;
        }
        return acc;
    }

    R value_at_zero() const {
        for (const auto& [k, v] : terms_) {
            bool zero = true;
            for (uint8_t e : k)
                if (e) { zero = false; break; }
            if (zero) return v;
        }
        return R();
    }

private:
    const JetShape* shape_;
    TermMap terms_;

    static bool ring_is_zero(const R& v) { return v.is_zero(); }

    void check_shape(const EpsJet& o) const {
        if (shape_ != o.shape_) throw Error("jet shape mismatch");
    }
};

}  // namespace qlink
