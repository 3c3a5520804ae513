#include "ceval.hpp"

#include <sstream>

#include "errors.hpp"

namespace qlink {

CF cf_add(const CF& a, const CF& b) { return {a.re + b.re, a.im + b.im}; }
CF cf_sub(const CF& a, const CF& b) { return {a.re - b.re, a.im - b.im}; }
CF cf_mul(const CF& a, const CF& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
BigFloat cf_abs(const CF& a) { return sqrt(a.re * a.re + a.im * a.im); }

CF cf_pow(const CF& a, long e) {
    if (e < 0) {
        BigFloat n = a.re * a.re + a.im * a.im;
        CF inv{a.re / n, -a.im / n};
        return cf_pow(inv, -e);
    }
    CF r{BigFloat(1), BigFloat(0)};
    CF base = a;
    while (e > 0) {
        if (e & 1) r = cf_mul(r, base);
        e >>= 1;
        if (e) base = cf_mul(base, base);
    }
    return r;
}

CF root_of_unity(long k, long n, unsigned digits) {
    BigFloat::default_precision(digits);
    BigFloat pi = atan(BigFloat(1)) * 4;
    BigFloat angle = pi * 2 * k / n;
    return {cos(angle), sin(angle)};
}

CF eval_complex(const LaurentPoly& p, const std::map<std::string, CF>& roots,
                unsigned digits) {
    BigFloat::default_precision(digits);
    CF acc{BigFloat(0), BigFloat(0)};
    for (const auto& [k, c] : p.terms()) {
        CF mono{BigFloat(1), BigFloat(0)};
        for (size_t i = 0; i < k.size(); ++i) {
            if (k[i] == 0) continue;
            auto it = roots.find(p.vars()[i].name);
            if (it == roots.end())
                throw MissingAssignment("variable '" + p.vars()[i].name + "'");
            mono = cf_mul(mono, cf_pow(it->second, k[i]));
        }
        BigFloat coeff = BigFloat(c.get_num().get_str()) / BigFloat(c.get_den().get_str());
        acc.re += coeff * mono.re;
        acc.im += coeff * mono.im;
    }
    return acc;
}

CF eval_q_at_root(const LaurentPoly& p, long K, unsigned digits) {
    if (K < 1) throw Error("root order must be positive");
    std::map<std::string, CF> roots;
    roots["q"] = root_of_unity(1, 4 * K, digits);
    return eval_complex(p, roots, digits);
}

std::string bigfloat_to_string(const BigFloat& x, unsigned digits) {
    std::ostringstream os;
    os.precision(digits);
    os << x;
    return os.str();
}

}  // namespace qlink
