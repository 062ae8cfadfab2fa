#ifndef ORESOLVE_REGULARISE_HPP
#define ORESOLVE_REGULARISE_HPP

#include "oresolve/reduction.hpp"

namespace oresolve {

/// Outcome of the regularisation pipeline: a head-regular square core
/// related to the input by (P_total, Q_total), a tail-regular system related
/// to the head by tail_transform (with Q = I for that stage, so head and
/// tail share their solutions), the compatibility conditions produced by
/// rank-deficient rows, and the free variable indices of the transformed
/// unknown vector.
struct RegularisedSystem {
    LinearSystem head;  // square, leading matrix has nonzero determinant
    LinearSystem tail;  // square, trailing matrix has nonzero determinant
    OpPair P_total;     // head rows were produced by P_total * A * Q_total
    OpPair Q_total;
    OpPair tail_transform;          // tail = tail_transform * head
    std::vector<MultiPoly> compat;  // one entry per rank-deficient row
    std::vector<std::size_t> free_vars;
    long head_order = 0;
};

struct RegulariseResult {
    bool solvable = false;
    std::optional<RegularisedSystem> system;  // present when solvable
    std::vector<MultiPoly> compat;            // always reported
};

/// Column reduction, row reduction, row-degree equalisation, and a second
/// row reduction toward sigma^{-1} produce the related fully regular system.
/// Unsolvable systems come back with their nonzero compatibility witness.
RegulariseResult regularise(const LinearSystem& system);

/// Determinant test on the leading/trailing coefficient matrix.
bool is_head_regular(const LinearSystem& system);
bool is_tail_regular(const LinearSystem& system);

/// Polynomial coefficient matrix at one sigma exponent.
PolyMat poly_coeff(const LinearSystem& system, long k);

}  // namespace oresolve

#endif
