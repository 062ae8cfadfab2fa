#include "oresolve/multipoly.hpp"

#include <algorithm>
#include <cstdlib>

namespace oresolve {

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
    long ta = 0, tb = 0;
    for (int e : a) ta += e;
    for (int e : b) tb += e;
    if (ta != tb) return ta < tb;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

namespace {

void check_same_vars(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars() != b.vars() && a.vars()->size() != b.vars()->size())
        throw VariableError("polynomials over different variable tables");
}

bool exponents_valid(const VarSet& vs, const Exponents& e) {
    if (e.size() != vs.size()) return false;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] < 0 && vs.is_generator(i)) return false;
    return true;
}

}  // namespace

MultiPoly MultiPoly::constant(VarSetPtr vars, const Rational& c) {
    MultiPoly p(std::move(vars));
    if (c != 0) p.terms_.emplace(Exponents(p.vars_->size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(VarSetPtr vars, std::size_t index, int exp) {
    MultiPoly p(std::move(vars));
    if (index >= p.vars_->size()) throw VariableError("variable index out of range");
    Exponents e(p.vars_->size(), 0);
    e[index] = exp;
    if (!exponents_valid(*p.vars_, e)) throw VariableError("negative exponent on generator");
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

MultiPoly MultiPoly::monomial(VarSetPtr vars, const Exponents& e, const Rational& c) {
    MultiPoly p(std::move(vars));
    if (!exponents_valid(*p.vars_, e)) throw VariableError("invalid exponent vector");
    if (c != 0) p.terms_.emplace(e, c);
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exponents& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw Error("constant_value on non-constant polynomial");
    return terms_.begin()->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_same_vars(*this, o);
    MultiPoly r(*this);
    r += o;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    check_same_vars(*this, o);
    MultiPoly r(*this);
    r -= o;
    return r;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_same_vars(*this, o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_same_vars(*this, o);
    MultiPoly r(vars_);
    Exponents e(vars_->size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly r(vars_);
    if (c == 0) return r;
    for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned long e) const {
    MultiPoly acc = MultiPoly::constant(vars_, 1);
    MultiPoly base(*this);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

int MultiPoly::degree(std::size_t var) const {
    if (terms_.empty()) return -1;
    int d = terms_.begin()->first[var];
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

int MultiPoly::valuation(std::size_t var) const {
    if (terms_.empty()) return 0;
    int d = terms_.begin()->first[var];
    for (const auto& [e, c] : terms_) d = std::min(d, e[var]);
    return d;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    long best = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        long t = 0;
        for (int x : e) t += x;
        if (first || t > best) best = t;
        first = false;
    }
    return static_cast<int>(best);
}

const Rational& MultiPoly::leading_coeff() const {
    if (terms_.empty()) throw ZeroInputError("leading_coeff of zero polynomial");
    return terms_.rbegin()->second;
}

const Exponents& MultiPoly::leading_monomial() const {
    if (terms_.empty()) throw ZeroInputError("leading_monomial of zero polynomial");
    return terms_.rbegin()->first;
}

MultiPoly MultiPoly::coeff_of(std::size_t var, int k) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] != k) continue;
        Exponents e2(e);
        e2[var] = 0;
        r.terms_.emplace(std::move(e2), c);
    }
    return r;
}

std::map<int, MultiPoly> MultiPoly::by_degree(std::size_t var) const {
    std::map<int, MultiPoly> out;
    for (const auto& [e, c] : terms_) {
        auto it = out.find(e[var]);
        if (it == out.end()) it = out.emplace(e[var], MultiPoly(vars_)).first;
        Exponents e2(e);
        e2[var] = 0;
        it->second.add_term(e2, c);
    }
    return out;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& replacement) const {
    check_same_vars(*this, replacement);
    // Horner over the powers of `var`.
    auto parts = by_degree(var);
    if (parts.empty()) return MultiPoly(vars_);
    if (parts.begin()->first < 0) throw Error("substitute into negative exponent");
    MultiPoly acc(vars_);
    int prev = -1;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        if (prev >= 0) {
            int steps = prev - it->first;
            for (int s = 0; s < steps; ++s) acc = acc * replacement;
        }
        acc += it->second;
        prev = it->first;
    }
    for (int s = 0; s < prev; ++s) acc = acc * replacement;
    return acc;
}

MultiPoly MultiPoly::scale_var(std::size_t var, const Rational& c) const {
    MultiPoly r(vars_);
    for (const auto& [e, coef] : terms_) {
        Rational nc = coef * rational_pow(c, e[var]);
        r.add_term(e, nc);
    }
    return r;
}

MultiPoly MultiPoly::eval_var(std::size_t var, const Rational& value) const {
    MultiPoly r(vars_);
    for (const auto& [e, coef] : terms_) {
        Exponents e2(e);
        e2[var] = 0;
        r.add_term(e2, coef * rational_pow(value, e[var]));
    }
    return r;
}

MultiPoly MultiPoly::shift_exponent(std::size_t var, int delta) const {
    if (delta == 0) return *this;
    MultiPoly r(vars_);
    for (const auto& [e, coef] : terms_) {
        Exponents e2(e);
        e2[var] += delta;
        if (e2[var] < 0 && vars_->is_generator(var))
            throw Error("shift produces negative generator exponent");
        r.terms_.emplace(std::move(e2), coef);
    }
    return r;
}

MultiPoly MultiPoly::embedded(const VarSetPtr& bigger) const {
    if (!vars_->same_prefix_of(*bigger)) throw VariableError("embedded: not a prefix extension");
    MultiPoly r(bigger);
    for (const auto& [e, c] : terms_) {
        Exponents e2(e);
        e2.resize(bigger->size(), 0);
        r.terms_.emplace(std::move(e2), c);
    }
    return r;
}

MultiPoly MultiPoly::restricted(const VarSetPtr& smaller) const {
    if (!smaller->same_prefix_of(*vars_)) throw VariableError("restricted: not a prefix extension");
    MultiPoly r(smaller);
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = smaller->size(); i < e.size(); ++i)
            if (e[i] != 0) throw VariableError("restricted: polynomial uses dropped variable");
        Exponents e2(e.begin(), e.begin() + smaller->size());
        r.terms_.emplace(std::move(e2), c);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Ring operations.  Division, gcd and resultant first clear any Laurent
// parameter exponents (a monomial unit), work in the plain polynomial ring,
// and shift back where needed.
// ---------------------------------------------------------------------------

namespace {

/// Multiply p by the monomial that makes every exponent nonnegative.
/// Returns the cleared polynomial; `shift` receives the per-variable shift.
MultiPoly clear_laurent(const MultiPoly& p, Exponents* shift_out = nullptr) {
    const std::size_t n = p.vars()->size();
    Exponents shift(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        int v = p.valuation(i);
        if (v < 0) shift[i] = -v;
    }
    if (shift_out) *shift_out = shift;
    bool trivial = std::all_of(shift.begin(), shift.end(), [](int x) { return x == 0; });
    if (trivial) return p;
    MultiPoly r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        Exponents e2(e);
        for (std::size_t i = 0; i < n; ++i) e2[i] += shift[i];
        r.add_term(e2, c);
    }
    return r;
}

MultiPoly apply_shift(const MultiPoly& p, const Exponents& shift, int sign) {
    bool trivial = std::all_of(shift.begin(), shift.end(), [](int x) { return x == 0; });
    if (trivial) return p;
    MultiPoly r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        Exponents e2(e);
        for (std::size_t i = 0; i < shift.size(); ++i) e2[i] += sign * shift[i];
        r.add_term(e2, c);
    }
    return r;
}

bool monomial_divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// Division in the nonnegative-exponent ring.  Returns false when not exact.
bool try_divide_cleared(const MultiPoly& num, const MultiPoly& div, MultiPoly* quotient) {
    MultiPoly q(num.vars());
    MultiPoly r(num);
    const Exponents& dlead = div.leading_monomial();
    const Rational& dcoef = div.leading_coeff();
    while (!r.is_zero()) {
        const Exponents& rlead = r.leading_monomial();
        if (!monomial_divides(dlead, rlead)) return false;
        Exponents m(rlead);
        for (std::size_t i = 0; i < m.size(); ++i) m[i] -= dlead[i];
        Rational c = r.leading_coeff() / dcoef;
        MultiPoly t = MultiPoly::monomial(num.vars(), m, c);
        q += t;
        r -= t * div;
    }
    if (quotient) *quotient = std::move(q);
    return true;
}

/// Gcd in the nonnegative-exponent ring by primitive PRS on the last
/// occurring variable; recursion bottoms out at rational constants.
MultiPoly gcd_cleared(MultiPoly a, MultiPoly b);

int last_used_variable(const MultiPoly& a, const MultiPoly& b) {
    const std::size_t n = a.vars()->size();
    for (std::size_t i = n; i-- > 0;) {
        if (a.degree(i) > 0 || b.degree(i) > 0) return static_cast<int>(i);
    }
    return -1;
}

MultiPoly content_cleared(const MultiPoly& p, std::size_t var) {
    MultiPoly g(p.vars());
    for (const auto& [d, coeff] : p.by_degree(var)) {
        (void)d;
        g = gcd_cleared(g, coeff);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

/// Gcd of the primitive (w.r.t. `var`) parts by the subresultant PRS: the
/// remainders shrink through exact division by the tracked g*h^delta
/// factors, so no content gcds are needed inside the loop.
MultiPoly gcd_primitive_subresultant(MultiPoly pa, MultiPoly pb, std::size_t var,
                                     MultiPoly (*content_fn)(const MultiPoly&, std::size_t)) {
    const VarSetPtr vars = pa.vars();
    if (pa.degree(var) < pb.degree(var)) std::swap(pa, pb);
    if (pb.degree(var) == 0) return MultiPoly::constant(vars, 1);
    MultiPoly g = MultiPoly::constant(vars, 1);
    MultiPoly h = MultiPoly::constant(vars, 1);
    while (true) {
        int delta = pa.degree(var) - pb.degree(var);
        MultiPoly r = pseudo_rem(pa, pb, var);
        if (r.is_zero()) break;
        if (r.degree(var) == 0) return MultiPoly::constant(vars, 1);
        pa = pb;
        pb = divide_exact(r, g * h.pow(static_cast<unsigned long>(delta)));
        g = pa.coeff_of(var, pa.degree(var));
        if (delta > 0)
            h = divide_exact(g.pow(static_cast<unsigned long>(delta)),
                             h.pow(static_cast<unsigned long>(delta - 1)));
    }
    return divide_exact(pb, content_fn(pb, var));
}

MultiPoly gcd_cleared(MultiPoly a, MultiPoly b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_constant() || b.is_constant()) return MultiPoly::constant(a.vars(), 1);
    int var = last_used_variable(a, b);
    if (var < 0) return MultiPoly::constant(a.vars(), 1);

    MultiPoly ca = content_cleared(a, var);
    MultiPoly cb = content_cleared(b, var);
    MultiPoly cg = gcd_cleared(ca, cb);
    MultiPoly pa = divide_exact(a, ca);
    MultiPoly pb = divide_exact(b, cb);
    MultiPoly pg = gcd_primitive_subresultant(std::move(pa), std::move(pb),
                                              static_cast<std::size_t>(var), &content_cleared);
    return cg * pg;
}

MultiPoly normalize_lc(const MultiPoly& p) {
    if (p.is_zero()) return p;
    const Rational& lc = p.leading_coeff();
    if (lc == 1) return p;
    return p * (Rational(1) / lc);
}

/// Content over the parameter block only: gcd of the coefficients grouped by
/// generator monomials, as polynomials in the parameters (and any working
/// variables appended after the generators).
MultiPoly parameter_content(const MultiPoly& p) {
    const VarSet& vs = *p.vars();
    std::map<Exponents, MultiPoly, GradedLexLess> groups;
    for (const auto& [e, c] : p.terms()) {
        Exponents gen_part(e.size(), 0);
        Exponents par_part(e.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            (vs.is_generator(i) ? gen_part[i] : par_part[i]) = e[i];
        auto it = groups.find(gen_part);
        if (it == groups.end()) it = groups.emplace(gen_part, MultiPoly(p.vars())).first;
        it->second.add_term(par_part, c);
    }
    MultiPoly g(p.vars());
    for (auto& [gen, coeff] : groups) {
        (void)gen;
        g = gcd_full(g, coeff);
        if (!g.is_zero() && g.is_constant()) break;
    }
    return g;
}

bool generator_free(const MultiPoly& p) {
    const VarSet& vs = *p.vars();
    for (const auto& [e, c] : p.terms()) {
        (void)c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (vs.is_generator(i) && e[i] != 0) return false;
    }
    return true;
}

}  // namespace

MultiPoly pseudo_rem(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
    if (b.is_zero()) throw ZeroInputError("pseudo_rem by zero");
    int da = a.degree(var);
    int db = b.degree(var);
    if (da < db) return a;
    MultiPoly lb = b.coeff_of(var, db);
    MultiPoly r(a);
    // lc(b)^(da-db+1) * a reduced against b.
    int steps = da - db + 1;
    int performed = 0;
    while (!r.is_zero() && r.degree(var) >= db) {
        int dr = r.degree(var);
        MultiPoly lr = r.coeff_of(var, dr);
        r = r * lb - (lr.shift_exponent(var, dr - db)) * b;
        ++performed;
        if (performed > steps) throw Error("pseudo_rem failed to terminate");
    }
    // Pad with the remaining power of lc(b) so the classical bookkeeping
    // (exact subresultant divisions) stays valid.
    for (int i = performed; i < steps; ++i) r = r * lb;
    return r;
}

bool try_divide(const MultiPoly& numerator, const MultiPoly& divisor, MultiPoly* quotient) {
    if (divisor.is_zero()) return false;
    if (numerator.is_zero()) {
        if (quotient) *quotient = MultiPoly(numerator.vars());
        return true;
    }
    Exponents sn, sd;
    MultiPoly n = clear_laurent(numerator, &sn);
    MultiPoly d = clear_laurent(divisor, &sd);
    MultiPoly q(n.vars());
    if (!try_divide_cleared(n, d, &q)) return false;
    if (quotient) {
        // numerator = q' * divisor with q' = q * x^(sd - sn).
        Exponents delta(sn.size());
        MultiPoly adjusted = q;
        for (std::size_t i = 0; i < sn.size(); ++i) delta[i] = sd[i] - sn[i];
        adjusted = apply_shift(adjusted, delta, +1);
        for (std::size_t i = 0; i < delta.size(); ++i) {
            if (numerator.vars()->is_generator(i) && adjusted.valuation(i) < 0)
                return false;
        }
        *quotient = std::move(adjusted);
    }
    return true;
}

MultiPoly divide_exact(const MultiPoly& numerator, const MultiPoly& divisor) {
    MultiPoly q(numerator.vars());
    if (!try_divide(numerator, divisor, &q)) throw Error("division is not exact");
    return q;
}

bool divides(const MultiPoly& divisor, const MultiPoly& multiple) {
    if (divisor.is_zero()) return multiple.is_zero();
    if (multiple.is_zero()) return true;
    return try_divide(normalize_assoc(multiple), normalize_assoc(divisor), nullptr);
}

MultiPoly gcd_full(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() && b.is_zero()) return a;
    MultiPoly ca = clear_laurent(a);
    MultiPoly cb = clear_laurent(b);
    return normalize_lc(gcd_cleared(std::move(ca), std::move(cb)));
}

MultiPoly lcm_full(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return MultiPoly(a.vars());
    MultiPoly g = gcd_full(a, b);
    return normalize_lc(divide_exact(a * b, g));
}

MultiPoly content_wrt(const MultiPoly& p, std::size_t main_var) {
    MultiPoly g(p.vars());
    for (const auto& [d, coeff] : p.by_degree(main_var)) {
        (void)d;
        g = gcd_full(g, coeff);
        if (!g.is_zero() && g.is_constant()) break;
    }
    return g;
}

MultiPoly primitive_part_wrt(const MultiPoly& p, std::size_t main_var) {
    if (p.is_zero()) return p;
    return divide_exact(p, content_wrt(p, main_var));
}

namespace {
MultiPoly content_wrt_adapter(const MultiPoly& p, std::size_t var) { return content_wrt(p, var); }
}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b, std::size_t main_var) {
    if (a.is_zero() && b.is_zero()) return a;
    if (a.is_zero()) return normalize_assoc(b);
    if (b.is_zero()) return normalize_assoc(a);
    MultiPoly pa = primitive_part_wrt(clear_laurent(a), main_var);
    MultiPoly pb = primitive_part_wrt(clear_laurent(b), main_var);
    if (pa.degree(main_var) == 0 || pb.degree(main_var) == 0)
        return MultiPoly::constant(a.vars(), 1);
    MultiPoly g = gcd_primitive_subresultant(std::move(pa), std::move(pb), main_var,
                                             &content_wrt_adapter);
    return normalize_assoc(g);
}

MultiPoly poly_resultant(const MultiPoly& a, const MultiPoly& b, std::size_t main_var) {
    if (a.is_zero() || b.is_zero()) throw ZeroInputError("resultant of zero polynomial");
    MultiPoly A = clear_laurent(a);
    MultiPoly B = clear_laurent(b);
    int da = A.degree(main_var);
    int db = B.degree(main_var);
    const VarSetPtr& vs = a.vars();
    if (da == 0 && db == 0) return MultiPoly::constant(vs, 1);
    if (da == 0) return A.pow(static_cast<unsigned long>(db));
    if (db == 0) return B.pow(static_cast<unsigned long>(da));

    int sign = 1;
    if (da < db) {
        std::swap(A, B);
        std::swap(da, db);
        if ((da % 2) && (db % 2)) sign = -sign;
    }
    // Subresultant PRS (Cohen, Algorithm 3.3.7).
    MultiPoly ca = content_wrt(A, main_var);
    MultiPoly cb = content_wrt(B, main_var);
    A = divide_exact(A, ca);
    B = divide_exact(B, cb);
    MultiPoly scale = ca.pow(static_cast<unsigned long>(db)) * cb.pow(static_cast<unsigned long>(da));
    MultiPoly g = MultiPoly::constant(vs, 1);
    MultiPoly h = MultiPoly::constant(vs, 1);
    while (true) {
        int dA = A.degree(main_var);
        int dB = B.degree(main_var);
        int delta = dA - dB;
        if ((dA % 2) && (dB % 2)) sign = -sign;
        MultiPoly R = pseudo_rem(A, B, main_var);
        if (R.is_zero()) return MultiPoly(vs);  // positive-degree common factor
        A = B;
        MultiPoly divisor = g * h.pow(static_cast<unsigned long>(delta));
        B = divide_exact(R, divisor);
        g = A.coeff_of(main_var, A.degree(main_var));
        if (delta == 0) {
            // h unchanged
        } else {
            h = divide_exact(g.pow(static_cast<unsigned long>(delta)),
                             h.pow(static_cast<unsigned long>(delta - 1)));
        }
        if (B.degree(main_var) == 0) break;
    }
    int dA = A.degree(main_var);
    MultiPoly res = divide_exact(B.pow(static_cast<unsigned long>(dA)),
                                 h.pow(static_cast<unsigned long>(dA - 1)));
    MultiPoly out = scale * res;
    if (sign < 0) out = -out;
    return out;
}

std::map<Exponents, MultiPoly, GradedLexLess> split_by_generator_monomials(const MultiPoly& p) {
    const VarSet& vs = *p.vars();
    std::map<Exponents, MultiPoly, GradedLexLess> out;
    for (const auto& [e, c] : p.terms()) {
        Exponents gen_part(e.size(), 0);
        Exponents par_part(e.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i)
            (vs.is_generator(i) ? gen_part[i] : par_part[i]) = e[i];
        auto it = out.find(gen_part);
        if (it == out.end()) it = out.emplace(gen_part, MultiPoly(p.vars())).first;
        it->second.add_term(par_part, c);
    }
    return out;
}

MultiPoly normalize_assoc(const MultiPoly& p) {
    if (p.is_zero()) return p;
    if (generator_free(p)) return MultiPoly::constant(p.vars(), 1);  // a unit of the field
    MultiPoly cleared = clear_laurent(p);
    MultiPoly pc = parameter_content(cleared);
    MultiPoly prim = pc.is_zero() ? cleared : divide_exact(cleared, pc);
    return normalize_lc(prim);
}

}  // namespace oresolve
