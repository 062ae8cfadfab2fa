#ifndef ORESOLVE_REDUCTION_HPP
#define ORESOLVE_REDUCTION_HPP

#include "oresolve/ore.hpp"

namespace oresolve {

/// Leading row coefficient matrix toward `direction` (+1 for sigma, -1 for
/// sigma^{-1}): row i is the coefficient row at its own leading exponent,
/// shifted by sigma^{d*(nu - nu_i)} so all rows speak at the common degree.
/// Zero rows of A give zero rows.
RatMat lrcm(const OreMatrix& A, int direction = +1);

struct RowReduction {
    OpPair P;                          // P.fwd * A == R
    OreMatrix R;
    std::size_t rank = 0;
    std::vector<std::size_t> zero_rows;  // trailing row indices of R
};

/// Unimodular left transform making the nonzero rows row reduced (LRCM of
/// full row rank) with zero rows permuted to the bottom.  Works toward
/// sigma (direction +1) or sigma^{-1} (direction -1); always terminates
/// because the sum of row degrees strictly decreases.
RowReduction row_reduce(const OreMatrix& A, int direction = +1);

struct ColReduction {
    OpPair Q;                          // A * Q.fwd == R
    OreMatrix R;
    std::size_t rank = 0;
    std::vector<std::size_t> zero_cols;  // trailing column indices of R
};

/// Mirror image of row_reduce using right multiplication by elementary
/// transforms; zero columns are permuted to the right.
ColReduction column_reduce(const OreMatrix& A, int direction = +1);

}  // namespace oresolve

#endif
