#pragma once

#include <memory>

#include "laurent.hpp"

namespace qlink {

// num / base^pow where `base` is a fixed Laurent polynomial shared by all
// fractions in one computation. Addition aligns denominator powers by
// multiplying the lower-power numerator up; reduce() divides the numerator
// by the base while it divides exactly.
struct DenFrac {
    LaurentPoly num;
    int pow = 0;
    std::shared_ptr<const LaurentPoly> base;

    DenFrac() = default;
    DenFrac(LaurentPoly n, int p, std::shared_ptr<const LaurentPoly> b)
        : num(std::move(n)), pow(p), base(std::move(b)) {}

    static DenFrac zero() { return DenFrac(); }

    bool is_zero() const { return num.is_zero(); }

    void raise_to(int p) {
        if (num.is_zero()) {
            pow = p;
            return;
        }
        if (p < pow) throw Error("denominator power cannot decrease");
        if (p > pow) {
            num *= base->pow(p - pow);
            pow = p;
        }
    }

    DenFrac& operator+=(const DenFrac& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) {
            *this = o;
            return *this;
        }
        if (!base) base = o.base;
        int p = std::max(pow, o.pow);
        raise_to(p);
        DenFrac rhs = o;
        rhs.base = base;
        rhs.raise_to(p);
        num += rhs.num;
        if (num.is_zero()) pow = 0;
        return *this;
    }

    DenFrac operator-() const {
        DenFrac r = *this;
        r.num = -r.num;
        return r;
    }

    DenFrac& operator-=(const DenFrac& o) { return *this += -o; }

    friend DenFrac operator*(const DenFrac& a, const DenFrac& b) {
        if (a.is_zero() || b.is_zero()) return DenFrac();
        DenFrac r(a.num * b.num, a.pow + b.pow, a.base ? a.base : b.base);
        return r;
    }

    DenFrac& operator*=(const DenFrac& o) { return *this = *this * o; }

    friend DenFrac operator*(const DenFrac& a, const LaurentPoly& p) {
        if (a.is_zero() || p.is_zero()) return DenFrac();
        return DenFrac(a.num * p, a.pow, a.base);
    }

    friend DenFrac operator*(const DenFrac& a, const Rat& c) {
        if (a.is_zero() || c == 0) return DenFrac();
        return DenFrac(a.num * c, a.pow, a.base);
    }

    // Cancels full powers of the base out of the numerator.
    void reduce() {
        if (!base || num.is_zero()) {
            if (num.is_zero()) pow = 0;
            return;
        }
        LaurentPoly q;
        while (pow > 0 && num.try_divide(*base, q)) {
            num = std::move(q);
            --pow;
        }
    }
};

}  // namespace qlink
