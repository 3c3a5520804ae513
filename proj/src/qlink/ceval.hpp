#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <map>
#include <string>

#include "laurent.hpp"

namespace qlink {

using BigFloat = boost::multiprecision::mpfr_float;

// Minimal complex value on arbitrary-precision reals; enough for evaluating
// polynomials at roots of unity and measuring residuals.
struct CF {
    BigFloat re, im;
};

CF cf_add(const CF& a, const CF& b);
CF cf_sub(const CF& a, const CF& b);
CF cf_mul(const CF& a, const CF& b);
CF cf_pow(const CF& a, long e);
BigFloat cf_abs(const CF& a);

// e^{2 pi i k / n} at the given working precision.
CF root_of_unity(long k, long n, unsigned digits);

// Evaluates p given, for each variable, the numeric value of its lattice
// root name^{1/scale}. Throws MissingAssignment for unassigned variables
// that occur with nonzero exponent.
CF eval_complex(const LaurentPoly& p, const std::map<std::string, CF>& roots,
                unsigned digits);

// Shortcut for polynomials in q alone at q = e^{2 pi i/K} on the branch
// q^{1/4} = e^{i pi/(2K)}.
CF eval_q_at_root(const LaurentPoly& p, long K, unsigned digits);

std::string bigfloat_to_string(const BigFloat& x, unsigned digits);

}  // namespace qlink
