#include "oresolve/ratfunc.hpp"

namespace oresolve {

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw ZeroInputError("rational function with zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(num_.vars(), 1);
        return;
    }
    MultiPoly g = gcd_full(num_, den_);
    if (!g.is_constant() || g.constant_value() != 1) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
    const Rational& lc = den_.leading_coeff();
    if (lc != 1) {
        Rational inv = Rational(1) / lc;
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    if (den_ == o.den_) return RatFunc(num_ - o.num_, den_);
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw ZeroInputError("division by zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw ZeroInputError("inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc laurent_to_ratfunc(const MultiPoly& p) {
    const VarSetPtr& vars = p.vars();
    Exponents clear(vars->size(), 0);
    for (const auto& [e, c] : p.terms()) {
        (void)c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] < 0) clear[i] = std::max(clear[i], -e[i]);
    }
    MultiPoly num(vars);
    for (const auto& [e, c] : p.terms()) {
        Exponents e2(e);
        for (std::size_t i = 0; i < e2.size(); ++i) e2[i] += clear[i];
        num.add_term(e2, c);
    }
    return RatFunc(std::move(num), MultiPoly::monomial(vars, clear, Rational(1)));
}

}  // namespace oresolve
