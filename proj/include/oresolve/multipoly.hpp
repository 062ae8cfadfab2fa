#ifndef ORESOLVE_MULTIPOLY_HPP
#define ORESOLVE_MULTIPOLY_HPP

#include <map>
#include <vector>

#include "oresolve/rational.hpp"
#include "oresolve/varset.hpp"

namespace oresolve {

using Exponents = std::vector<int>;

/// Graded lexicographic order: total degree first, then left-to-right
/// comparison of exponents.  Parameters sit before generators in the
/// variable table, so they dominate the lexicographic tie-break.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Exact multivariate polynomial over the rationals in the variables of a
/// shared VarSet.  Generator exponents are always >= 0; parameter exponents
/// may go negative (parameters are units of the coefficient field, and
/// applying the inverse shift to a Pi generator divides by them).
///
/// Canonical form: no zero coefficients are stored, and the term map is
/// ordered by GradedLexLess, so equal polynomials have identical
/// representations.
class MultiPoly {
  public:
    using TermMap = std::map<Exponents, Rational, GradedLexLess>;

    explicit MultiPoly(VarSetPtr vars) : vars_(std::move(vars)) {}

    static MultiPoly zero(VarSetPtr vars) { return MultiPoly(std::move(vars)); }
    static MultiPoly constant(VarSetPtr vars, const Rational& c);
    static MultiPoly variable(VarSetPtr vars, std::size_t index, int exp = 1);
    static MultiPoly monomial(VarSetPtr vars, const Exponents& e, const Rational& c);

    const VarSetPtr& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;  // free of every variable
    Rational constant_value() const;

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& c) const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);

    MultiPoly pow(unsigned long e) const;

    /// Degree in one variable; -1 for the zero polynomial.
    int degree(std::size_t var) const;
    /// Smallest exponent of `var` over all terms (0 for the zero polynomial).
    int valuation(std::size_t var) const;
    int total_degree() const;
    bool depends_on(std::size_t var) const { return degree(var) != 0 || valuation(var) != 0; }

    const Rational& leading_coeff() const;
    const Exponents& leading_monomial() const;

    /// Coefficient of var^k as a polynomial with the exponent of `var` zeroed.
    MultiPoly coeff_of(std::size_t var, int k) const;
    std::map<int, MultiPoly> by_degree(std::size_t var) const;

    /// Substitute a polynomial for one variable (the variable must not have
    /// negative exponents).
    MultiPoly substitute(std::size_t var, const MultiPoly& replacement) const;
    /// Fast path for var -> c * var.
    MultiPoly scale_var(std::size_t var, const Rational& c) const;
    /// Evaluate one variable at a rational point (exact; negative exponents
    /// require a nonzero point).
    MultiPoly eval_var(std::size_t var, const Rational& value) const;
    /// Multiply by var^delta (Laurent shift; generators must stay >= 0).
    MultiPoly shift_exponent(std::size_t var, int delta) const;

    /// Reinterpret over a larger VarSet that extends this one.
    MultiPoly embedded(const VarSetPtr& bigger) const;
    /// Inverse of `embedded`; the dropped variables must not occur.
    MultiPoly restricted(const VarSetPtr& smaller) const;

    void add_term(const Exponents& e, const Rational& c);

  private:
    VarSetPtr vars_;
    TermMap terms_;
};

inline MultiPoly operator*(const Rational& c, const MultiPoly& p) { return p * c; }

// ---- Ring operations (exact division, gcd, resultant) ----

/// Exact quotient b / a; throws Error if the division is not exact.
MultiPoly divide_exact(const MultiPoly& numerator, const MultiPoly& divisor);
bool try_divide(const MultiPoly& numerator, const MultiPoly& divisor, MultiPoly* quotient);
/// True when `multiple` is divisible by `divisor` (parameters count as units).
bool divides(const MultiPoly& divisor, const MultiPoly& multiple);

/// Gcd over the full polynomial ring (all variables alike), returned in
/// canonical associate form.  gcd(0, 0) = 0.
MultiPoly gcd_full(const MultiPoly& a, const MultiPoly& b);
MultiPoly lcm_full(const MultiPoly& a, const MultiPoly& b);

/// Gcd of a and b as univariate polynomials in `main_var` over the rational
/// function field of the remaining variables: content in the other variables
/// is removed and the result is in canonical associate form.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b, std::size_t main_var);

/// Resultant with respect to `main_var` (subresultant PRS).  Throws
/// ZeroInputError if an argument vanishes.
MultiPoly poly_resultant(const MultiPoly& a, const MultiPoly& b, std::size_t main_var);

/// Gcd of the coefficients of p viewed in `main_var`.
MultiPoly content_wrt(const MultiPoly& p, std::size_t main_var);
MultiPoly primitive_part_wrt(const MultiPoly& p, std::size_t main_var);

/// Canonical associate: parameter content (a unit of the coefficient field)
/// removed, then scaled so the leading coefficient is 1.
MultiPoly normalize_assoc(const MultiPoly& p);

/// Pseudo-remainder of a by b in `main_var`: lc(b)^(deg a - deg b + 1) * a mod b.
MultiPoly pseudo_rem(const MultiPoly& a, const MultiPoly& b, std::size_t main_var);

/// Equality up to units of the coefficient field.
inline bool assoc_equal(const MultiPoly& a, const MultiPoly& b) {
    return normalize_assoc(a) == normalize_assoc(b);
}

/// Group the terms of p by their generator monomials; the values collect the
/// parameter parts (Laurent exponents allowed).
std::map<Exponents, MultiPoly, GradedLexLess> split_by_generator_monomials(const MultiPoly& p);

}  // namespace oresolve

#endif
