#ifndef ORESOLVE_SOLVER_HPP
#define ORESOLVE_SOLVER_HPP

#include "oresolve/ore.hpp"

namespace oresolve {

struct SolutionBasis {
    std::optional<std::vector<RatFunc>> particular;  // absent when rhs is inconsistent
    std::vector<std::vector<RatFunc>> basis;         // homogeneous solutions, independent
    MultiPoly denbound_used;
    long degree_bound_used = 0;
    std::string diagnostic;  // nonempty when no particular solution exists
};

/// Substitute y = z / den, compare coefficients of the generator monomials
/// up to total degree `degree_bound`, and solve the resulting linear system
/// over the constant field.  Every returned vector is re-verified by
/// substitution before it is handed back.  A too-small degree bound is not
/// an error; the basis simply spans the solutions within the bound.
SolutionBasis rational_solutions(const LinearSystem& system, const MultiPoly& den,
                                 long degree_bound);

/// Exact check that ore_apply(system.op, y) == system.rhs.
bool verify_solution(const LinearSystem& system, const std::vector<RatFunc>& y);

}  // namespace oresolve

#endif
