#ifndef ORESOLVE_RATFUNC_HPP
#define ORESOLVE_RATFUNC_HPP

#include "oresolve/multipoly.hpp"

namespace oresolve {

/// Reduced fraction of two MultiPoly.  Invariants: den != 0,
/// gcd(num, den) = 1 over the full polynomial ring, and den has leading
/// coefficient 1, so equal values have identical representations.
class RatFunc {
  public:
    explicit RatFunc(MultiPoly num) : num_(std::move(num)), den_(MultiPoly::constant(num_.vars(), 1)) {}
    RatFunc(MultiPoly num, MultiPoly den);

    static RatFunc zero(const VarSetPtr& vars) { return RatFunc(MultiPoly::zero(vars)); }
    static RatFunc one(const VarSetPtr& vars) { return RatFunc(MultiPoly::constant(vars, 1)); }
    static RatFunc constant(const VarSetPtr& vars, const Rational& c) {
        return RatFunc(MultiPoly::constant(vars, c));
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const VarSetPtr& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }

    RatFunc inverse() const;

  private:
    MultiPoly num_, den_;
    void reduce();
};

inline RatFunc operator*(const MultiPoly& p, const RatFunc& r) { return RatFunc(p) * r; }

/// A polynomial with Laurent exponents as an honest fraction: negative
/// exponents move into the denominator monomial.
RatFunc laurent_to_ratfunc(const MultiPoly& p);

}  // namespace oresolve

#endif
