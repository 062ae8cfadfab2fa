#ifndef ORESOLVE_ORACLE_HPP
#define ORESOLVE_ORACLE_HPP

#include <random>

#include "oresolve/denbound.hpp"
#include "oresolve/solver.hpp"

namespace oresolve {

/// Synthetic system with known solutions, used as ground truth by the test
/// suites.  Every planted vector satisfies the system; homogeneous vectors
/// are stored in reduced representation.
struct PlantedInstance {
    LinearSystem system;
    std::vector<std::vector<RatFunc>> planted;
    FieldSpecPtr field;
    std::uint64_t seed = 0;
};

/// Build a system of the requested size/order whose homogeneous solution set
/// contains the planted vectors: the higher coefficient matrices are random
/// with det A_l != 0, and A_0 is solved for columnwise.  When `particular`
/// is given, the right-hand side is the image of that vector, which is then
/// planted too.  Throws ConstructionError (reporting the seed) if no regular
/// leading matrix can be found.
PlantedInstance plant_system(const FieldSpecPtr& field, std::size_t n, long order,
                             const std::vector<std::vector<RatFunc>>& planted, std::uint64_t seed,
                             const std::vector<RatFunc>* particular = nullptr);

/// ap(q) | d for the reduced denominator q of every planted vector.
bool check_divisibility(const FieldSpec& field, const DenBound& db, const PlantedInstance& inst);

/// Seeded generators for the random suites.
struct OracleRng {
    std::mt19937_64 eng;
    explicit OracleRng(std::uint64_t seed) : eng(seed) {}

    long int_in(long lo, long hi);
    Rational coeff();  // in [-5, 5] \ {0}
    MultiPoly random_poly(const FieldSpec& field, int max_deg_per_gen, int terms,
                          bool allow_params = true);
    /// Nonzero polynomial with a factor pattern whose self-dispersion stays
    /// <= max_disp: u * sigma^k(u') products over small irreducible-ish
    /// factors.
    MultiPoly planted_denominator(const FieldSpec& field, long max_disp);
};

/// The four supported field shapes, used round-robin by the suites.
FieldSpecPtr oracle_field_case(std::size_t which);

struct SuiteReport {
    std::string name;
    std::size_t cases = 0;
    std::size_t passes = 0;
    std::vector<std::string> failures;  // messages for the first few failures
    bool ok() const { return passes == cases; }
};

/// Planted soundness: ap(planted denominator) divides the computed bound.
SuiteReport run_soundness_suite(std::size_t cases, std::uint64_t seed);
/// spread() against the brute-force scan up to disp + 3.
SuiteReport run_dispersion_suite(std::size_t cases_per_field, std::uint64_t seed);
/// Transform ledger: P*A = R, P*P^{-1} = I, full-rank LRCM certificates.
SuiteReport run_ledger_suite(std::size_t cases, std::uint64_t seed);
/// Solutions map between original and head/tail systems in both directions.
SuiteReport run_equivalence_suite(std::size_t cases, std::uint64_t seed);

}  // namespace oresolve

#endif
