#ifndef ORESOLVE_DENBOUND_HPP
#define ORESOLVE_DENBOUND_HPP

#include "oresolve/dispersion.hpp"
#include "oresolve/regularise.hpp"

namespace oresolve {

struct GeneratorBound {
    std::size_t gen;
    MultiPoly head_den;  // aperiodic part of the common denominator of the
                         // inverse leading matrix of the head system
    MultiPoly tail_den;  // same for the trailing matrix of the tail system
    Disp disp;
};

/// Aperiodic universal denominator bound: every rational solution q^{-1} p
/// in reduced representation has ap(q) | d.
struct DenBound {
    MultiPoly d;
    std::vector<GeneratorBound> per_generator;
    bool improved = true;  // single-pass merge (max of the dispersions)
};

/// Bound with respect to one generator: with m the common denominator of the
/// inverse head leading matrix, p the one of the inverse tail trailing
/// matrix, l the head order and D = disp(sigma^{-l}(ap m), ap p), the bound
/// is gcd(prod_{j=0..D} sigma^{-l-j}(ap m), prod_{j=0..D} sigma^j(ap p)),
/// or 1 when the dispersion is -inf.
DenBound denbound_single(const FieldSpec& field, const RegularisedSystem& reg, std::size_t gen,
                         std::uint64_t seed = 1);

/// Multivariate bound over all generators.  The improved path takes the
/// aperiodic parts with respect to every Pi generator, one dispersion per
/// generator, D = max of them, and applies the product formula once; the
/// fallback path merges the per-generator bounds by lcm.
DenBound denbound_all(const FieldSpec& field, const RegularisedSystem& reg, bool improved = true,
                      std::uint64_t seed = 1);

/// Convenience: regularise then bound.  Throws Error on unsolvable systems.
DenBound denbound_multivariate(const LinearSystem& system, bool improved = true,
                               std::uint64_t seed = 1);

/// (prod t_i^{powers_i}) * d.  Powers are indexed per generator and must be
/// zero on Sigma generators; the complete bound is a guess because the
/// needed Pi power is not computed by this toolkit.
MultiPoly complete_bound_guess(const FieldSpec& field, const DenBound& db,
                               const std::vector<long>& powers);

}  // namespace oresolve

#endif
