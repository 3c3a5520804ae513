#pragma once

#include <algorithm>
#include <sstream>
#include <vector>

#include "errors.hpp"
#include "laurent.hpp"
#include "rat.hpp"

namespace qlink {

template <class R>
struct RingTraits;

template <>
struct RingTraits<Rat> {
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static bool is_zero(const Rat& x) { return x == 0; }
    static Rat invert(const Rat& c) {
        if (c == 0) throw Error("inverting zero coefficient");
        return Rat(1) / c;
    }
    static std::string text(const Rat& x) { return rat_to_string(x); }
};

template <>
struct RingTraits<LaurentPoly> {
    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly::constant(Rat(1)); }
    static bool is_zero(const LaurentPoly& x) { return x.is_zero(); }
    static LaurentPoly invert(const LaurentPoly& c) { return c.inverse_monomial(); }
    static std::string text(const LaurentPoly& x) { return x.to_text(); }
};

// Truncated Laurent series in h. A series holds coefficients of h^lo..h^hi
// and is understood modulo h^{hi+1}; lo may be negative. Reading a
// coefficient above the truncation order throws, which keeps order
// bookkeeping honest throughout.
template <class R>
class HSeries {
public:
    explicit HSeries(int order = 0) : lo_(0), hi_(order) {}

    static HSeries zero(int order) { return HSeries(order); }

    static HSeries term(int k, const R& c, int order) {
        HSeries s(order);
        if (k <= order && !RingTraits<R>::is_zero(c)) {
            s.lo_ = k;
            s.c_.assign(1, c);
        }
        return s;
    }

    static HSeries one(int order) { return term(0, RingTraits<R>::one(), order); }

    int order() const { return hi_; }
    // Lowest order with a (possibly) nonzero coefficient; hi+1 if zero.
    int lowest() const { return c_.empty() ? hi_ + 1 : lo_; }
    bool is_zero() const { return c_.empty(); }

    R at(int n) const {
        if (n > hi_) throw Error("series coefficient beyond truncation order");
        if (c_.empty() || n < lo_ || n > lo_ + static_cast<int>(c_.size()) - 1)
            return RingTraits<R>::zero();
        return c_[n - lo_];
    }

    void set(int n, const R& v) {
        if (n > hi_) throw Error("series coefficient beyond truncation order");
        ensure_slot(n);
        c_[n - lo_] = v;
        trim();
    }

    HSeries& operator+=(const HSeries& o) {
        int order = std::min(hi_, o.hi_);
        HSeries out(order);
        int lo = std::min(lowest(), o.lowest());
        if (lo <= order) {
            out.lo_ = lo;
            out.c_.assign(order - lo + 1, RingTraits<R>::zero());
            for (int n = lo; n <= order; ++n) {
                R v = at(n);
                v += o.at(n);
                out.c_[n - lo] = std::move(v);
            }
        }
        out.trim();
        *this = std::move(out);
        return *this;
    }

    HSeries operator-() const {
        HSeries s = *this;
        for (auto& v : s.c_) {
            R nv = -v;
            v = std::move(nv);
        }
        return s;
    }

    HSeries& operator-=(const HSeries& o) { return *this += -o; }

    friend HSeries operator+(HSeries a, const HSeries& b) { return a += b; }
    friend HSeries operator-(HSeries a, const HSeries& b) { return a -= b; }

    friend HSeries operator*(const HSeries& a, const HSeries& b) {
        int order = std::min(a.hi_ + b.lowest(), b.hi_ + a.lowest());
        HSeries out(order);
        if (a.is_zero() || b.is_zero()) return out;
        int lo = a.lo_ + b.lo_;
        if (lo > order) return out;
        out.lo_ = lo;
        out.c_.assign(order - lo + 1, RingTraits<R>::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (RingTraits<R>::is_zero(a.c_[i])) continue;
            int na = a.lo_ + static_cast<int>(i);
            for (size_t j = 0; j < b.c_.size(); ++j) {
                int n = na + b.lo_ + static_cast<int>(j);
                if (n > order) break;
                out.c_[n - lo] += a.c_[i] * b.c_[j];
            }
        }
        out.trim();
        return out;
    }

    HSeries& operator*=(const HSeries& o) { return *this = *this * o; }

    HSeries& scale(const R& c) {
        for (auto& v : c_) v = v * c;
        trim();
        return *this;
    }

    // Multiplies by h^k.
    HSeries shifted(int k) const {
        HSeries s = *this;
        s.lo_ += k;
        s.hi_ += k;
        return s;
    }

    HSeries truncated(int order) const {
        HSeries s(std::min(order, hi_));
        if (!c_.empty() && lo_ <= s.hi_) {
            s.lo_ = lo_;
            size_t keep = std::min(c_.size(), static_cast<size_t>(s.hi_ - lo_ + 1));
            s.c_.assign(c_.begin(), c_.begin() + keep);
        }
        s.trim();
        return s;
    }

    HSeries pow(long e) const {
        if (e < 0) return invert().pow(-e);
        HSeries r = one(hi_);
        HSeries base = *this;
        long ee = e;
        while (ee > 0) {
            if (ee & 1) r = r * base;
            ee >>= 1;
            if (ee) base = base * base;
        }
        return r;
    }

    // Multiplicative inverse; requires the lowest coefficient to be
    // invertible (a nonzero rational, or a monomial Laurent coefficient).
    HSeries invert() const {
        if (is_zero()) throw Error("inverting zero series");
        const int v = lo_;
        const int m = hi_ - v;
        std::vector<R> u(c_);
        u.resize(static_cast<size_t>(m) + 1, RingTraits<R>::zero());
        R lead_inv = RingTraits<R>::invert(u[0]);
        std::vector<R> w(static_cast<size_t>(m) + 1, RingTraits<R>::zero());
        w[0] = lead_inv;
        for (int n = 1; n <= m; ++n) {
            R acc = RingTraits<R>::zero();
            for (int k = 1; k <= n; ++k) acc += u[k] * w[n - k];
            R wn = -(lead_inv * acc);
            w[n] = std::move(wn);
        }
        HSeries out(m - v);
        out.lo_ = -v;
        out.c_ = std::move(w);
        out.trim();
        return out;
    }

    friend bool operator==(const HSeries& a, const HSeries& b) {
        int order = std::min(a.hi_, b.hi_);
        int lo = std::min(a.lowest(), b.lowest());
        for (int n = lo; n <= order; ++n) {
            R d = a.at(n);
            d -= b.at(n);
            if (!RingTraits<R>::is_zero(d)) return false;
        }
        return true;
    }

    std::string to_text() const {
        if (is_zero()) return "O(h^" + std::to_string(hi_ + 1) + ")";
        std::ostringstream os;
        for (int n = lo_; n <= hi_; ++n) {
            R v = at(n);
            if (RingTraits<R>::is_zero(v)) continue;
            os << "(" << RingTraits<R>::text(v) << ")*h^" << n << " + ";
        }
        os << "O(h^" << hi_ + 1 << ")";
        return os.str();
    }

private:
    int lo_;
    int hi_;
    std::vector<R> c_;

    void ensure_slot(int n) {
        if (c_.empty()) {
            lo_ = n;
            c_.assign(1, RingTraits<R>::zero());
            return;
        }
        if (n < lo_) {
            c_.insert(c_.begin(), static_cast<size_t>(lo_ - n), RingTraits<R>::zero());
            lo_ = n;
        } else if (n > lo_ + static_cast<int>(c_.size()) - 1) {
            c_.resize(static_cast<size_t>(n - lo_) + 1, RingTraits<R>::zero());
        }
    }

    void trim() {
        if (!c_.empty() && lo_ + static_cast<int>(c_.size()) - 1 > hi_)
            c_.resize(static_cast<size_t>(hi_ - lo_) + 1);
        while (!c_.empty() && RingTraits<R>::is_zero(c_.front())) {
            c_.erase(c_.begin());
            ++lo_;
        }
        while (!c_.empty() && RingTraits<R>::is_zero(c_.back())) c_.pop_back();
        if (c_.empty()) lo_ = 0;
    }
};

// (1+h)^r expanded through h^order with exact rational coefficients.
inline HSeries<Rat> binomial_series(const Rat& r, int order) {
    HSeries<Rat> s(order);
    Rat c(1);
    for (int n = 0; n <= order; ++n) {
        if (c != 0) s.set(n, c);
        c *= (r - n);
        c /= (n + 1);
    }
    return s;
}

// Expands a Laurent polynomial in q alone under q = 1+h. Exponents live on
// the quarter lattice, so coefficients pick up powers of 2 from the
// fractional binomials but stay exact rationals.
inline HSeries<Rat> h_expand_q(const LaurentPoly& p, int order) {
    HSeries<Rat> out(order);
    if (p.is_zero()) return out;
    for (const auto& [k, c] : p.terms()) {
        Rat e(0);
        for (size_t i = 0; i < k.size(); ++i) {
            if (k[i] == 0) continue;
            if (p.vars()[i].name != "q")
                throw Error("h expansion of polynomial with non-q variable '" +
                            p.vars()[i].name + "'");
            e = Rat(k[i], p.vars()[i].scale);
            e.canonicalize();
        }
        HSeries<Rat> term = binomial_series(e, order);
        term.scale(c);
        out += term;
    }
    return out;
}

}  // namespace qlink
