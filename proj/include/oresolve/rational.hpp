#ifndef ORESOLVE_RATIONAL_HPP
#define ORESOLVE_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "oresolve/errors.hpp"

namespace oresolve {

/// Arbitrary-precision rational numbers.  GMP keeps the invariants we need:
/// denominator positive, gcd(num, den) = 1, zero stored as 0/1.
using Rational = mpq_class;

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw Error("invalid rational literal: " + s);
    r.canonicalize();
    if (r.get_den() == 0) throw Error("zero denominator in rational literal: " + s);
    return r;
}

/// r^e for integer e, negative exponents allowed on nonzero bases.
inline Rational rational_pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (r == 0) {
        if (e < 0) throw Error("negative power of zero");
        return Rational(0);
    }
    Rational base = e > 0 ? r : Rational(1) / r;
    unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    Rational acc(1);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

inline int signum(const Rational& r) { return sgn(r); }

}  // namespace oresolve

#endif
