#ifndef ORESOLVE_DISPERSION_HPP
#define ORESOLVE_DISPERSION_HPP

#include <cstdint>
#include <vector>

#include "oresolve/field.hpp"

namespace oresolve {

/// spread(a, b) = { k >= 0 : gcd(a, sigma^k(b)) has positive degree in the
/// designated generator }.  Finite for Sigma generators; infinite for a Pi
/// generator exactly when it divides both inputs.
struct SpreadResult {
    std::vector<long> finite_set;  // sorted ascending, deduplicated
    bool is_infinite = false;
};

/// Dispersion = max of the spread: -inf for the empty set, +inf when the
/// spread is infinite.
struct Disp {
    enum Kind { NegInf, Finite, PosInf } kind = NegInf;
    long value = 0;

    static Disp neg_inf() { return {NegInf, 0}; }
    static Disp pos_inf() { return {PosInf, 0}; }
    static Disp finite(long v) { return {Finite, v}; }
    bool operator==(const Disp& o) const {
        return kind == o.kind && (kind != Finite || value == o.value);
    }
    bool operator<(const Disp& o) const {
        if (kind != o.kind) return kind < o.kind;  // NegInf < Finite < PosInf
        return kind == Finite && value < o.value;
    }
};

std::string to_string(const Disp& d);

/// Candidate shifts come from resultants with working symbols for the shift
/// amount, integer roots are isolated exactly (Sturm sequences), and every
/// candidate is verified by a symbolic gcd before it enters the result.
/// The seed drives the random evaluation points used to keep the resultants
/// univariate; failed specializations (degree drops) retry with new points.
SpreadResult spread(const FieldSpec& field, const MultiPoly& a, const MultiPoly& b,
                    std::size_t gen, std::uint64_t seed = 1);

Disp dispersion(const FieldSpec& field, const MultiPoly& a, const MultiPoly& b, std::size_t gen,
                std::uint64_t seed = 1);

/// Test oracle: direct scan of gcd(a, sigma^k(b)) for k in [0, k_max].
std::vector<long> dispersion_bruteforce(const FieldSpec& field, const MultiPoly& a,
                                        const MultiPoly& b, std::size_t gen, long k_max);

}  // namespace oresolve

#endif
