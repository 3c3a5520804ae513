#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rat.hpp"

namespace qlink {

// A formal variable living on a fractional exponent lattice. Exponents of
// `name` are stored as integer multiples of 1/scale, so scale=2 lets a
// variable carry half-integer powers and scale=4 quarter-integer powers.
struct LVar {
    std::string name;
    int32_t scale = 1;

    friend bool operator==(const LVar& a, const LVar& b) {
        return a.name == b.name && a.scale == b.scale;
    }
};

inline LVar qvar() { return LVar{"q", 4}; }
inline LVar tvar(int component) { return LVar{"t" + std::to_string(component), 2}; }

// Sparse multivariate Laurent polynomial with exact rational coefficients.
// The variable roster is kept sorted by name and grows by union when two
// polynomials with different rosters meet. Terms map scaled exponent
// vectors (aligned with the roster) to nonzero coefficients.
class LaurentPoly {
public:
    using Key = std::vector<int32_t>;
    using TermMap = std::map<Key, Rat>;

    LaurentPoly() = default;
    static LaurentPoly constant(const Rat& c);
    static LaurentPoly monomial(const LVar& v, int32_t scaled_exp, const Rat& coeff = Rat(1));

    const std::vector<LVar>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Requires is_constant(); the zero polynomial yields 0.
    Rat constant_value() const;
    bool is_monomial() const { return terms_.size() == 1; }

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rat& c);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    friend LaurentPoly operator*(LaurentPoly a, const Rat& c) { return a *= c; }
    friend LaurentPoly operator*(const Rat& c, LaurentPoly a) { return a *= c; }
    LaurentPoly operator-() const;
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

    // Nonnegative e for general polynomials; negative e only for monomials.
    LaurentPoly pow(long e) const;
    LaurentPoly inverse_monomial() const;

    // Exact quotient this/d; throws InexactDivision when d does not divide.
    LaurentPoly divide_exact(const LaurentPoly& d) const;

    // Exact quotient, or false when d does not divide this.
    bool try_divide(const LaurentPoly& d, LaurentPoly& quotient) const;

    // name -> name^{-1} (negates that variable's exponents).
    LaurentPoly with_var_inverted(const std::string& name) const;
    // Inverts every variable whose name is not excluded.
    LaurentPoly with_all_vars_inverted() const;

    // Replaces `from` by `to^ratio`, i.e. an exponent value x of `from`
    // becomes exponent x*ratio_num/ratio_den of `to`. The resulting scaled
    // exponent must be integral; throws Error otherwise.
    LaurentPoly subst_var_power(const std::string& from, const LVar& to,
                                long ratio_num, long ratio_den) const;

    // Sets a variable to 1 (drops it, merging coefficients).
    LaurentPoly subst_one(const std::string& name) const;

    // Multiplies by a single-variable monomial v^{scaled_exp/scale}.
    LaurentPoly shifted(const LVar& v, int32_t scaled_exp) const;

    // Scaled exponent range of one variable over all terms; {0,0} if absent.
    std::pair<int32_t, int32_t> exp_range(const std::string& name) const;

    // Human-readable monomial list, e.g. "3 * t1^{1/2} q^{-3/4} + -1".
    std::string to_text() const;

    // Color substitution t_j -> q^{alpha_j} for every t-variable present;
    // alpha is indexed by component (alpha[0] for t1).
    LaurentPoly t_to_qpow(const std::vector<long>& alpha) const;

    // Drops explicit zero coefficients; called by mutating ops.
    void normalize();

    // Returns the index of `name` in the roster or -1.
    int var_index(const std::string& name) const;

    // Extends the roster to the union with `extra`, remapping keys.
    void align_to(const std::vector<LVar>& extra);

private:
    std::vector<LVar> vars_;
    TermMap terms_;

    static std::vector<LVar> merged_roster(const std::vector<LVar>& a,
                                           const std::vector<LVar>& b);
};

}  // namespace qlink
