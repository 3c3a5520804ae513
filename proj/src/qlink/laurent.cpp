#include "laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "errors.hpp"

namespace qlink {

LaurentPoly LaurentPoly::constant(const Rat& c) {
    LaurentPoly p;
    if (c != 0) p.terms_[{}] = c;
    return p;
}

LaurentPoly LaurentPoly::monomial(const LVar& v, int32_t scaled_exp, const Rat& coeff) {
    LaurentPoly p;
    if (coeff == 0) return p;
    p.vars_ = {v};
    p.terms_[{scaled_exp}] = coeff;
    return p;
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const Key& k = terms_.begin()->first;
    return std::all_of(k.begin(), k.end(), [](int32_t e) { return e == 0; });
}

Rat LaurentPoly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw Error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

int LaurentPoly::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i].name == name) return static_cast<int>(i);
    return -1;
}

std::vector<LVar> LaurentPoly::merged_roster(const std::vector<LVar>& a,
                                             const std::vector<LVar>& b) {
    std::vector<LVar> out;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].name < b[j].name)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].name < a[i].name) {
            out.push_back(b[j++]);
        } else {
            if (a[i].scale != b[j].scale)
                throw Error("variable '" + a[i].name + "' used with two scales");
            out.push_back(a[i++]);
            ++j;
        }
    }
    return out;
}

void LaurentPoly::align_to(const std::vector<LVar>& extra) {
    std::vector<LVar> merged = merged_roster(vars_, extra);
    if (merged == vars_) return;
    std::vector<int> pos(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find_if(merged.begin(), merged.end(),
                               [&](const LVar& v) { return v.name == vars_[i].name; });
        pos[i] = static_cast<int>(it - merged.begin());
    }
    TermMap remapped;
    for (const auto& [k, c] : terms_) {
        Key nk(merged.size(), 0);
        for (size_t i = 0; i < k.size(); ++i) nk[pos[i]] = k[i];
        remapped.emplace(std::move(nk), c);
    }
    vars_ = std::move(merged);
    terms_ = std::move(remapped);
}

void LaurentPoly::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = (it->second == 0) ? terms_.erase(it) : std::next(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    LaurentPoly rhs = o;
    align_to(o.vars_);
    rhs.align_to(vars_);
    for (const auto& [k, c] : rhs.terms_) {
        auto [it, fresh] = terms_.emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& [k, c] : p.terms_) c = -c;
    return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    LaurentPoly rhs = o;
    align_to(o.vars_);
    rhs.align_to(vars_);
    TermMap prod;
    Key sum(vars_.size());
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : rhs.terms_) {
            for (size_t i = 0; i < sum.size(); ++i) sum[i] = ka[i] + kb[i];
            auto [it, fresh] = prod.emplace(sum, ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    }
    terms_ = std::move(prod);
    normalize();
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly d = a;
    d -= b;
    return d.is_zero();
}

LaurentPoly LaurentPoly::pow(long e) const {
    if (e < 0) {
        if (!is_monomial()) throw Error("negative power of non-monomial");
        return inverse_monomial().pow(-e);
    }
    LaurentPoly acc = constant(Rat(1));
    LaurentPoly base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

LaurentPoly LaurentPoly::inverse_monomial() const {
    if (!is_monomial()) throw Error("inverse of non-monomial");
    const auto& [k, c] = *terms_.begin();
    LaurentPoly p;
    p.vars_ = vars_;
    Key nk = k;
    for (auto& e : nk) e = -e;
    p.terms_[nk] = Rat(1) / c;
    return p;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& d) const {
    LaurentPoly q;
    if (!try_divide(d, q)) throw InexactDivision("remainder nonzero");
    return q;
}

bool LaurentPoly::try_divide(const LaurentPoly& d, LaurentPoly& quotient) const {
    if (d.is_zero()) throw Error("division by zero polynomial");
    if (is_zero()) {
        quotient = LaurentPoly();
        return true;
    }
    LaurentPoly f = *this, g = d;
    f.align_to(g.vars_);
    g.align_to(f.vars_);
    const size_t nv = f.vars_.size();

    // Shift both operands to nonnegative exponents, divide as ordinary
    // polynomials by lex leading-term elimination, then shift back.
    Key fmin(nv, 0), gmin(nv, 0);
    auto min_key = [nv](const TermMap& tm, Key& out) {
        bool first = true;
        for (const auto& [k, c] : tm) {
            if (first) { out = k; first = false; continue; }
            for (size_t i = 0; i < nv; ++i) out[i] = std::min(out[i], k[i]);
        }
    };
    min_key(f.terms_, fmin);
    min_key(g.terms_, gmin);
    auto shift = [nv](TermMap& tm, const Key& by, int sign) {
        TermMap out;
        for (const auto& [k, c] : tm) {
            Key nk = k;
            for (size_t i = 0; i < nv; ++i) nk[i] += sign * by[i];
            out.emplace(std::move(nk), c);
        }
        tm = std::move(out);
    };
    shift(f.terms_, fmin, -1);
    shift(g.terms_, gmin, -1);

    TermMap quot;
    while (!f.terms_.empty()) {
        const auto& [fk, fc] = *f.terms_.rbegin();
        const auto& [gk, gc] = *g.terms_.rbegin();
        Key qk(nv);
        for (size_t i = 0; i < nv; ++i) {
            qk[i] = fk[i] - gk[i];
            if (qk[i] < 0) return false;
        }
        Rat qc = fc / gc;
        quot[qk] = qc;
        LaurentPoly qterm;
        qterm.vars_ = f.vars_;
        qterm.terms_[qk] = qc;
        f -= qterm * g;
    }

    quotient = LaurentPoly();
    quotient.vars_ = f.vars_;
    quotient.terms_ = std::move(quot);
    Key back(nv);
    for (size_t i = 0; i < nv; ++i) back[i] = fmin[i] - gmin[i];
    shift(quotient.terms_, back, +1);
    return true;
}

LaurentPoly LaurentPoly::with_var_inverted(const std::string& name) const {
    int idx = var_index(name);
    if (idx < 0) return *this;
    LaurentPoly p;
    p.vars_ = vars_;
    for (const auto& [k, c] : terms_) {
        Key nk = k;
        nk[idx] = -nk[idx];
        p.terms_.emplace(std::move(nk), c);
    }
    return p;
}

LaurentPoly LaurentPoly::with_all_vars_inverted() const {
    LaurentPoly p;
    p.vars_ = vars_;
    for (const auto& [k, c] : terms_) {
        Key nk = k;
        for (auto& e : nk) e = -e;
        p.terms_.emplace(std::move(nk), c);
    }
    return p;
}

LaurentPoly LaurentPoly::subst_var_power(const std::string& from, const LVar& to,
                                         long ratio_num, long ratio_den) const {
    int idx = var_index(from);
    if (idx < 0) return *this;
    if (ratio_den == 0) throw Error("zero substitution denominator");
    LaurentPoly out;
    for (const auto& [k, c] : terms_) {
        // Exponent value of `from` is k[idx]/scale_from; it becomes that
        // value times ratio on `to`, i.e. scaled exponent
        // k[idx]*ratio_num*scale_to / (scale_from*ratio_den).
        long num = static_cast<long>(k[idx]) * ratio_num * to.scale;
        long den = static_cast<long>(vars_[idx].scale) * ratio_den;
        if (num % den != 0)
            throw Error("substitution leaves lattice of '" + to.name + "'");
        long e = num / den;
        if (e < INT32_MIN || e > INT32_MAX) throw SizeError("exponent overflow");
        LaurentPoly term = LaurentPoly::monomial(to, static_cast<int32_t>(e), c);
        Key rest = k;
        rest[idx] = 0;
        LaurentPoly shell;
        shell.vars_ = vars_;
        shell.terms_[rest] = Rat(1);
        out += term * shell.subst_one(from);
    }
    return out;
}

LaurentPoly LaurentPoly::subst_one(const std::string& name) const {
    int idx = var_index(name);
    if (idx < 0) return *this;
    LaurentPoly p;
    p.vars_ = vars_;
    p.vars_.erase(p.vars_.begin() + idx);
    for (const auto& [k, c] : terms_) {
        Key nk;
        nk.reserve(k.size() - 1);
        for (size_t i = 0; i < k.size(); ++i)
            if (static_cast<int>(i) != idx) nk.push_back(k[i]);
        auto [it, fresh] = p.terms_.emplace(std::move(nk), c);
        if (!fresh) it->second += c;
    }
    p.normalize();
    return p;
}

LaurentPoly LaurentPoly::shifted(const LVar& v, int32_t scaled_exp) const {
    return *this * monomial(v, scaled_exp);
}

std::pair<int32_t, int32_t> LaurentPoly::exp_range(const std::string& name) const {
    int idx = var_index(name);
    if (idx < 0 || terms_.empty()) return {0, 0};
    int32_t lo = terms_.begin()->first[idx], hi = lo;
    for (const auto& [k, c] : terms_) {
        lo = std::min(lo, k[idx]);
        hi = std::max(hi, k[idx]);
    }
    return {lo, hi};
}

namespace {
std::string exp_text(int32_t scaled, int32_t scale) {
    int32_t g = std::gcd(scaled < 0 ? -scaled : scaled, scale);
    int32_t num = scaled / g, den = scale / g;
    std::ostringstream os;
    if (den == 1) {
        if (num == 1) return "";
        os << "^" << num;
    } else {
        os << "^{" << num << "/" << den << "}";
    }
    return os.str();
}
}  // namespace

LaurentPoly LaurentPoly::t_to_qpow(const std::vector<long>& alpha) const {
    LaurentPoly out = *this;
    std::vector<std::string> names;
    for (const auto& v : vars_)
        if (v.name.size() > 1 && v.name[0] == 't') names.push_back(v.name);
    for (const auto& name : names) {
        size_t j = std::stoul(name.substr(1));
        if (j < 1 || j > alpha.size())
            throw Error("no color for variable '" + name + "'");
        out = out.subst_var_power(name, qvar(), alpha[j - 1], 1);
    }
    return out;
}

std::string LaurentPoly::to_text() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool any_var = false;
        std::ostringstream vs;
        for (size_t i = 0; i < k.size(); ++i) {
            if (k[i] == 0) continue;
            if (any_var) vs << " ";
            vs << vars_[i].name << exp_text(k[i], vars_[i].scale);
            any_var = true;
        }
        if (!any_var) {
            os << rat_to_string(c);
        } else if (c == 1) {
            os << vs.str();
        } else {
            os << rat_to_string(c) << " * " << vs.str();
        }
    }
    return os.str();
}

}  // namespace qlink
