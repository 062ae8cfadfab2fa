#include "oresolve/ore.hpp"

#include <algorithm>

namespace oresolve {

OreMatrix OreMatrix::identity(FieldSpecPtr field, std::size_t n) {
    OreMatrix m(field, n, n);
    m.coeffs_.push_back(identity_mat(field->vars(), n));
    m.lo_ = 0;
    return m;
}

OreMatrix OreMatrix::shift_identity(FieldSpecPtr field, std::size_t n, long k) {
    OreMatrix m(field, n, n);
    m.coeffs_.push_back(identity_mat(field->vars(), n));
    m.lo_ = k;
    return m;
}

OreMatrix OreMatrix::from_coeffs(FieldSpecPtr field, std::vector<RatMat> coeffs, long lo) {
    if (coeffs.empty()) throw ShapeError("from_coeffs: need at least one coefficient matrix");
    OreMatrix m(field, coeffs[0].rows(), coeffs[0].cols());
    for (const auto& c : coeffs)
        if (c.rows() != m.rows_ || c.cols() != m.cols_)
            throw ShapeError("from_coeffs: inconsistent coefficient shapes");
    m.coeffs_ = std::move(coeffs);
    m.lo_ = lo;
    m.trim();
    return m;
}

RatMat OreMatrix::coeff(long k) const {
    if (coeffs_.empty() || k < lo_ || k > hi()) return zero_mat();
    return coeffs_[static_cast<std::size_t>(k - lo_)];
}

const RatFunc& OreMatrix::entry(long k, std::size_t i, std::size_t j) const {
    if (coeffs_.empty() || k < lo_ || k > hi()) return zero_entry_;
    return coeffs_[static_cast<std::size_t>(k - lo_)](i, j);
}

void OreMatrix::ensure_exponent(long k) {
    if (coeffs_.empty()) {
        coeffs_.push_back(zero_mat());
        lo_ = k;
        return;
    }
    while (k < lo_) {
        coeffs_.insert(coeffs_.begin(), zero_mat());
        --lo_;
    }
    while (k > hi()) coeffs_.push_back(zero_mat());
}

void OreMatrix::set_entry(long k, std::size_t i, std::size_t j, RatFunc value) {
    ensure_exponent(k);
    coeffs_[static_cast<std::size_t>(k - lo_)](i, j) = std::move(value);
    trim();
}

void OreMatrix::trim() {
    auto mat_zero = [](const RatMat& m) {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (!m(i, j).is_zero()) return false;
        return true;
    };
    while (!coeffs_.empty() && mat_zero(coeffs_.back())) coeffs_.pop_back();
    while (!coeffs_.empty() && mat_zero(coeffs_.front())) {
        coeffs_.erase(coeffs_.begin());
        ++lo_;
    }
    if (coeffs_.empty()) lo_ = 0;
}

OreMatrix OreMatrix::operator+(const OreMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("ore add: shape mismatch");
    OreMatrix r(*this);
    for (long k = o.lo(); !o.coeffs_.empty() && k <= o.hi(); ++k) {
        r.ensure_exponent(k);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                RatFunc v = o.entry(k, i, j);
                if (v.is_zero()) continue;
                auto& cell = r.coeffs_[static_cast<std::size_t>(k - r.lo_)](i, j);
                cell += v;
            }
    }
    r.trim();
    return r;
}

OreMatrix OreMatrix::operator-(const OreMatrix& o) const {
    OreMatrix neg(o);
    for (auto& m : neg.coeffs_)
        for (std::size_t i = 0; i < neg.rows_; ++i)
            for (std::size_t j = 0; j < neg.cols_; ++j) m(i, j) = -m(i, j);
    return *this + neg;
}

bool OreMatrix::operator==(const OreMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    OreMatrix a(*this), b(o);
    a.trim();
    b.trim();
    return a.lo_ == b.lo_ && a.coeffs_.size() == b.coeffs_.size() &&
           std::equal(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin());
}

std::optional<long> OreMatrix::row_degree(std::size_t i, int direction) const {
    std::optional<long> best;
    for (long k = lo(); !coeffs_.empty() && k <= hi(); ++k) {
        bool nonzero = false;
        for (std::size_t j = 0; j < cols_; ++j)
            if (!entry(k, i, j).is_zero()) {
                nonzero = true;
                break;
            }
        if (!nonzero) continue;
        long d = direction > 0 ? k : -k;
        if (!best || d > *best) best = d;
    }
    return best;
}

std::optional<long> OreMatrix::col_degree(std::size_t j, int direction) const {
    std::optional<long> best;
    for (long k = lo(); !coeffs_.empty() && k <= hi(); ++k) {
        bool nonzero = false;
        for (std::size_t i = 0; i < rows_; ++i)
            if (!entry(k, i, j).is_zero()) {
                nonzero = true;
                break;
            }
        if (!nonzero) continue;
        long d = direction > 0 ? k : -k;
        if (!best || d > *best) best = d;
    }
    return best;
}

OreMatrix ore_mul(const OreMatrix& L, const OreMatrix& M) {
    if (L.cols() != M.rows()) throw ShapeError("ore_mul: shape mismatch");
    if (L.field() != M.field()) throw ShapeError("ore_mul: different fields");
    OreMatrix r(L.field(), L.rows(), M.cols());
    if (L.is_zero() || M.is_zero()) return r;
    const FieldSpec& field = *L.field();
    for (long a = L.lo(); a <= L.hi(); ++a) {
        const RatMat La = L.coeff(a);
        for (long b = M.lo(); b <= M.hi(); ++b) {
            // (A sigma^a)(B sigma^b) = A * sigma^a(B) * sigma^(a+b)
            RatMat Mb = M.coeff(b);
            RatMat shifted(Mb.rows(), Mb.cols(), RatFunc::zero(field.vars()));
            for (std::size_t i = 0; i < Mb.rows(); ++i)
                for (std::size_t j = 0; j < Mb.cols(); ++j)
                    shifted(i, j) = apply_sigma(field, Mb(i, j), a);
            RatMat prod = mat_mul(La, shifted);
            r.ensure_exponent(a + b);
            for (std::size_t i = 0; i < prod.rows(); ++i)
                for (std::size_t j = 0; j < prod.cols(); ++j) {
                    auto& cell = r.coeffs_[static_cast<std::size_t>(a + b - r.lo_)](i, j);
                    cell += prod(i, j);
                }
        }
    }
    r.trim();
    return r;
}

std::vector<RatFunc> ore_apply(const OreMatrix& L, const std::vector<RatFunc>& y) {
    if (y.size() != L.cols()) throw ShapeError("ore_apply: vector length mismatch");
    const FieldSpec& field = *L.field();
    std::vector<RatFunc> out(L.rows(), RatFunc::zero(field.vars()));
    if (L.is_zero()) return out;
    for (long k = L.lo(); k <= L.hi(); ++k) {
        std::vector<RatFunc> shifted = apply_sigma(field, y, k);
        for (std::size_t i = 0; i < L.rows(); ++i)
            for (std::size_t j = 0; j < L.cols(); ++j) {
                const RatFunc& c = L.entry(k, i, j);
                if (c.is_zero() || shifted[j].is_zero()) continue;
                out[i] += c * shifted[j];
            }
    }
    return out;
}

Degrees degrees(const OreMatrix& L) {
    Degrees d;
    d.row_degrees.resize(L.rows());
    for (std::size_t i = 0; i < L.rows(); ++i) {
        d.row_degrees[i] = L.row_degree(i, +1);
        if (d.row_degrees[i] && (!d.deg || *d.row_degrees[i] > *d.deg)) d.deg = d.row_degrees[i];
    }
    return d;
}

void OpPair::compose_left(const OpPair& other) {
    fwd = ore_mul(other.fwd, fwd);
    inv = ore_mul(inv, other.inv);
}

void OpPair::compose_right(const OpPair& other) {
    fwd = ore_mul(fwd, other.fwd);
    inv = ore_mul(other.inv, inv);
}

ClearedSystem clear_denominators(const OreMatrix& op, const std::vector<RatFunc>& rhs) {
    const FieldSpecPtr& field = op.field();
    const VarSetPtr& vars = field->vars();
    if (rhs.size() != op.rows()) throw ShapeError("clear_denominators: rhs length mismatch");

    ClearedSystem out{LinearSystem{OreMatrix::zero(field, op.rows(), op.cols()), {}},
                      OpPair::identity(field, op.rows())};

    // Shift each row so its lowest sigma exponent is zero, then scale by the
    // lcm of the entry denominators.  Both factors are units over the Ore
    // Laurent ring, so they fold into the tracked transform.
    OreMatrix shift = OreMatrix::zero(field, op.rows(), op.rows());
    OreMatrix shift_inv = OreMatrix::zero(field, op.rows(), op.rows());
    std::vector<long> row_shift(op.rows(), 0);
    for (std::size_t i = 0; i < op.rows(); ++i) {
        long lo = 0;
        bool found = false;
        for (long k = op.lo(); !op.is_zero() && k <= op.hi(); ++k)
            for (std::size_t j = 0; j < op.cols(); ++j)
                if (!op.entry(k, i, j).is_zero()) {
                    if (!found || k < lo) lo = k;
                    found = true;
                }
        row_shift[i] = found && lo < 0 ? -lo : 0;
        shift.set_entry(row_shift[i], i, i, RatFunc::one(vars));
        shift_inv.set_entry(-row_shift[i], i, i, RatFunc::one(vars));
    }
    OreMatrix shifted_op = ore_mul(shift, op);
    std::vector<RatFunc> shifted_rhs(op.rows(), RatFunc::zero(vars));
    for (std::size_t i = 0; i < op.rows(); ++i)
        shifted_rhs[i] = apply_sigma(*field, rhs[i], row_shift[i]);

    OreMatrix scale = OreMatrix::zero(field, op.rows(), op.rows());
    OreMatrix scale_inv = OreMatrix::zero(field, op.rows(), op.rows());
    OreMatrix cleared(field, op.rows(), op.cols());
    std::vector<MultiPoly> rhs_poly;
    for (std::size_t i = 0; i < op.rows(); ++i) {
        MultiPoly l = MultiPoly::constant(vars, 1);
        for (long k = shifted_op.lo(); !shifted_op.is_zero() && k <= shifted_op.hi(); ++k)
            for (std::size_t j = 0; j < op.cols(); ++j)
                l = lcm_full(l, shifted_op.entry(k, i, j).den());
        l = lcm_full(l, shifted_rhs[i].den());
        scale.set_entry(0, i, i, RatFunc(l));
        scale_inv.set_entry(0, i, i, RatFunc(l).inverse());
        for (long k = shifted_op.lo(); !shifted_op.is_zero() && k <= shifted_op.hi(); ++k)
            for (std::size_t j = 0; j < op.cols(); ++j) {
                RatFunc v = shifted_op.entry(k, i, j) * RatFunc(l);
                if (!v.is_zero()) cleared.set_entry(k, i, j, std::move(v));
            }
        RatFunc b = shifted_rhs[i] * RatFunc(l);
        rhs_poly.push_back(b.num());
    }
    cleared.trim();
    out.system.op = cleared;
    out.system.rhs = std::move(rhs_poly);
    out.applied = OpPair{shift, shift_inv};
    out.applied.compose_left(OpPair{scale, scale_inv});
    return out;
}

TransformedSystem apply_transform(const LinearSystem& sys, const OpPair& P, const OpPair& Q) {
    if (P.fwd.cols() != sys.op.rows() || sys.op.cols() != Q.fwd.rows())
        throw ShapeError("apply_transform: shape mismatch");
    OreMatrix m = ore_mul(ore_mul(P.fwd, sys.op), Q.fwd);
    std::vector<RatFunc> b;
    b.reserve(sys.rhs.size());
    for (const auto& p : sys.rhs) b.emplace_back(p);
    std::vector<RatFunc> pb = ore_apply(P.fwd, b);
    ClearedSystem cleared = clear_denominators(m, pb);
    TransformedSystem out{std::move(cleared.system), P, Q};
    out.P_effective.compose_left(cleared.applied);
    return out;
}

}  // namespace oresolve
