#ifndef ORESOLVE_ORE_HPP
#define ORESOLVE_ORE_HPP

#include <optional>
#include <vector>

#include "oresolve/field.hpp"
#include "oresolve/linalg.hpp"

namespace oresolve {

/// Operator matrix over F(t)[sigma, sigma^{-1}]: an ordered list of
/// rational-function coefficient matrices indexed by the sigma exponent
/// range [lo, hi].  Trimmed so the boundary coefficients are nonzero;
/// the zero operator has empty support.  lo >= 0 means an ordinary
/// (non-Laurent) operator matrix.
class OreMatrix {
  public:
    OreMatrix(FieldSpecPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), lo_(0),
          zero_entry_(RatFunc::zero(field_->vars())) {}

    static OreMatrix zero(FieldSpecPtr field, std::size_t rows, std::size_t cols) {
        return OreMatrix(std::move(field), rows, cols);
    }
    static OreMatrix identity(FieldSpecPtr field, std::size_t n);
    /// sigma^k * I.
    static OreMatrix shift_identity(FieldSpecPtr field, std::size_t n, long k);
    static OreMatrix from_coeffs(FieldSpecPtr field, std::vector<RatMat> coeffs, long lo = 0);

    const FieldSpecPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_zero() const { return coeffs_.empty(); }

    long lo() const { return lo_; }
    long hi() const { return lo_ + static_cast<long>(coeffs_.size()) - 1; }

    /// Coefficient matrix of sigma^k (a zero matrix outside the support).
    RatMat coeff(long k) const;
    const RatFunc& entry(long k, std::size_t i, std::size_t j) const;
    void set_entry(long k, std::size_t i, std::size_t j, RatFunc value);

    OreMatrix operator+(const OreMatrix& o) const;
    OreMatrix operator-(const OreMatrix& o) const;
    bool operator==(const OreMatrix& o) const;

    /// Degree in sigma of one row toward `direction` (+1: highest exponent,
    /// -1: lowest); nullopt for a zero row.
    std::optional<long> row_degree(std::size_t i, int direction = +1) const;
    std::optional<long> col_degree(std::size_t j, int direction = +1) const;

    void trim();

  private:
    FieldSpecPtr field_;
    std::size_t rows_, cols_;
    long lo_;
    std::vector<RatMat> coeffs_;  // index k - lo_
    RatFunc zero_entry_;

    RatMat zero_mat() const { return RatMat(rows_, cols_, RatFunc::zero(field_->vars())); }
    void ensure_exponent(long k);
    friend OreMatrix ore_mul(const OreMatrix&, const OreMatrix&);
};

/// Product under the commutation rule sigma * a = sigma(a) * sigma,
/// extended bilinearly over the Laurent supports.
OreMatrix ore_mul(const OreMatrix& L, const OreMatrix& M);

/// Apply the operator to a vector of rational functions.
std::vector<RatFunc> ore_apply(const OreMatrix& L, const std::vector<RatFunc>& y);

struct Degrees {
    std::optional<long> deg;                       // nullopt for the zero operator
    std::vector<std::optional<long>> row_degrees;  // nullopt = zero row
};
Degrees degrees(const OreMatrix& L);

/// Unimodular operator tracked together with its inverse, so unimodularity
/// holds by construction.
struct OpPair {
    OreMatrix fwd;
    OreMatrix inv;

    static OpPair identity(const FieldSpecPtr& field, std::size_t n) {
        return {OreMatrix::identity(field, n), OreMatrix::identity(field, n)};
    }
    /// this := other * this (left composition).
    void compose_left(const OpPair& other);
    /// this := this * other (right composition).
    void compose_right(const OpPair& other);
};

/// A_l sigma^l y + ... + A_0 y = b with polynomial coefficient entries.
struct LinearSystem {
    OreMatrix op;                // lo() == 0, entries polynomial
    std::vector<MultiPoly> rhs;  // length == op.rows()

    std::size_t size() const { return op.rows(); }
    long order() const { return op.is_zero() ? 0 : op.hi(); }
};

/// Clear denominators row by row (multiplying each row of the operator and
/// the rhs by the lcm of its entry denominators) and shift rows with
/// negative support up to exponent zero.  Returns the cleaned system plus
/// the unimodular left factor that was applied.
struct ClearedSystem {
    LinearSystem system;
    OpPair applied;  // cleaned = applied * input
};
ClearedSystem clear_denominators(const OreMatrix& op, const std::vector<RatFunc>& rhs);

/// Related system (P A Q)(y~) = P(b) with solutions mapped by y = Q(y~).
struct TransformedSystem {
    LinearSystem system;
    OpPair P_effective;  // includes the row-wise clearing factors
    OpPair Q;
};
TransformedSystem apply_transform(const LinearSystem& sys, const OpPair& P, const OpPair& Q);

}  // namespace oresolve

#endif
