#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "errors.hpp"

namespace qlink {

// Exact rational numbers. mpq_class does all the heavy lifting; the helpers
// here exist because mpq_class(a, b) does not canonicalize on its own.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw Error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "n" or "n/d" with optional sign, arbitrary precision.
inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

// r must fit a signed long; used for exponents held as rationals.
inline long rat_to_long(const Rat& r) {
    if (!rat_is_integer(r)) throw Error("expected integer rational");
    if (!r.get_num().fits_slong_p()) throw SizeError("rational exceeds long");
    return r.get_num().get_si();
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    mpz_class num = base.get_num(), den = base.get_den();
    if (e < 0) {
        if (num == 0) throw Error("zero to negative power");
        std::swap(num, den);
        if (den < 0) { den = -den; num = -num; }
        e = -e;
    }
    mpz_class rn, rd;
    mpz_pow_ui(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(e));
    Rat r(rn, rd);
    r.canonicalize();
    return r;
}

// Generalized binomial coefficient binom(r, n) = r(r-1)...(r-n+1)/n!.
inline Rat rat_binom(const Rat& r, long n) {
    if (n < 0) return Rat(0);
    Rat acc(1);
    for (long i = 0; i < n; ++i) {
        acc *= (r - i);
        acc /= (i + 1);
    }
    return acc;
}

inline mpz_class factorial(long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

}  // namespace qlink
