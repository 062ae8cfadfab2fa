#ifndef ORESOLVE_LINALG_HPP
#define ORESOLVE_LINALG_HPP

#include <vector>

#include "oresolve/ratfunc.hpp"

namespace oresolve {

/// Dense matrix over an exact scalar type (MultiPoly or RatFunc).  The
/// scalar types carry a VarSet, so construction takes an exemplar zero.
template <class T>
class Mat {
  public:
    Mat(std::size_t rows, std::size_t cols, const T& zero)
        : rows_(rows), cols_(cols), data_(rows * cols, zero) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    Mat transposed() const {
        if (data_.empty()) throw ShapeError("transpose of empty matrix");
        Mat t(cols_, rows_, data_[0]);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

  private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using PolyMat = Mat<MultiPoly>;
using RatMat = Mat<RatFunc>;

RatMat mat_mul(const RatMat& a, const RatMat& b);
RatMat identity_mat(const VarSetPtr& vars, std::size_t n);

/// Exact solve of M x = rhs over the rational-function field.
/// `inconsistent` systems are reported as a value, never an exception.
struct LinSolveResult {
    bool consistent = false;
    std::vector<RatFunc> particular;              // one solution when consistent
    std::vector<std::vector<RatFunc>> nullspace;  // basis of M x = 0
    std::size_t rank = 0;
};

LinSolveResult ff_solve(const RatMat& M, const std::vector<RatFunc>& rhs);

/// Left kernel basis of M (vectors v with v M = 0).
std::vector<std::vector<RatFunc>> left_kernel(const RatMat& M);

/// Determinant by fraction-free Bareiss elimination.
MultiPoly det_bareiss(const PolyMat& M);

/// Adjugate matrix: adj(M) * M = det(M) * I.
PolyMat adjugate(const PolyMat& M);

struct InverseDenominator {
    MultiPoly denominator;  // least common denominator of the inverse, canonical associate
    MultiPoly det;
};

/// Common denominator of M^{-1} from the reduced adjugate/det fractions.
/// Throws SingularMatrixError when det(M) = 0.
InverseDenominator matrix_inverse_denominator(const PolyMat& M);

}  // namespace oresolve

#endif
