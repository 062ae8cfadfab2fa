#include "oresolve/linalg.hpp"

#include <algorithm>

namespace oresolve {

RatMat mat_mul(const RatMat& a, const RatMat& b) {
    if (a.cols() != b.rows()) throw ShapeError("mat_mul: shape mismatch");
    RatMat c(a.rows(), b.cols(), RatFunc::zero(a(0, 0).vars()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b(k, j).is_zero()) continue;
                c(i, j) += a(i, k) * b(k, j);
            }
        }
    return c;
}

RatMat identity_mat(const VarSetPtr& vars, std::size_t n) {
    RatMat m(n, n, RatFunc::zero(vars));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = RatFunc::one(vars);
    return m;
}

namespace {

struct EchelonRow {
    std::vector<MultiPoly> coeff;
    MultiPoly rhs;
    explicit EchelonRow(const VarSetPtr& vars) : rhs(vars) {}
    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& p : coeff)
            if (!p.is_zero()) ++n;
        return n;
    }
};

void strip_row_content(EchelonRow& row) {
    MultiPoly g = row.rhs;
    for (const auto& p : row.coeff) {
        g = gcd_full(g, p);
        if (!g.is_zero() && g.is_constant()) break;
    }
    if (g.is_zero() || g.is_constant()) return;
    for (auto& p : row.coeff) p = divide_exact(p, g);
    row.rhs = divide_exact(row.rhs, g);
}

}  // namespace

LinSolveResult ff_solve(const RatMat& M, const std::vector<RatFunc>& rhs) {
    const std::size_t m = M.rows(), n = M.cols();
    if (rhs.size() != m) throw ShapeError("ff_solve: rhs length mismatch");
    const VarSetPtr vars = m * n > 0 ? M(0, 0).vars() : (m > 0 ? rhs[0].vars() : nullptr);
    if (!vars) throw ShapeError("ff_solve: empty system needs at least one row");

    // Clear denominators row-wise: each equation becomes polynomial.
    std::vector<EchelonRow> rows(m, EchelonRow(vars));
    for (std::size_t i = 0; i < m; ++i) {
        MultiPoly l = MultiPoly::constant(vars, 1);
        for (std::size_t j = 0; j < n; ++j) l = lcm_full(l, M(i, j).den());
        l = lcm_full(l, rhs[i].den());
        rows[i].coeff.reserve(n);
        for (std::size_t j = 0; j < n; ++j)
            rows[i].coeff.push_back(M(i, j).num() * divide_exact(l, M(i, j).den()));
        rows[i].rhs = rhs[i].num() * divide_exact(l, rhs[i].den());
        strip_row_content(rows[i]);
    }

    // Fraction-free row echelon: cross-multiplication updates with content
    // removal keep every entry polynomial while bounding growth.
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t j = 0; j < n && r < m; ++j) {
        std::size_t best = m;
        for (std::size_t i = r; i < m; ++i) {
            if (rows[i].coeff[j].is_zero()) continue;
            if (best == m || rows[i].nonzeros() < rows[best].nonzeros()) best = i;
        }
        if (best == m) continue;
        std::swap(rows[r], rows[best]);
        const MultiPoly piv = rows[r].coeff[j];
        for (std::size_t i = r + 1; i < m; ++i) {
            if (rows[i].coeff[j].is_zero()) continue;
            const MultiPoly f = rows[i].coeff[j];
            for (std::size_t k = 0; k < n; ++k)
                rows[i].coeff[k] = rows[i].coeff[k] * piv - rows[r].coeff[k] * f;
            rows[i].rhs = rows[i].rhs * piv - rows[r].rhs * f;
            strip_row_content(rows[i]);
        }
        pivot_col.push_back(j);
        ++r;
    }

    LinSolveResult out;
    out.rank = r;
    out.consistent = true;
    for (std::size_t i = r; i < m; ++i) {
        if (!rows[i].rhs.is_zero()) {
            out.consistent = false;
            return out;
        }
    }

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    auto back_substitute = [&](const std::vector<RatFunc>& assigned_free,
                               bool homogeneous) -> std::vector<RatFunc> {
        std::vector<RatFunc> x(n, RatFunc::zero(vars));
        std::size_t fi = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (!is_pivot[j]) x[j] = assigned_free[fi++];
        for (std::size_t k = r; k-- > 0;) {
            std::size_t p = pivot_col[k];
            RatFunc acc = homogeneous ? RatFunc::zero(vars) : RatFunc(rows[k].rhs);
            for (std::size_t j = p + 1; j < n; ++j) {
                if (rows[k].coeff[j].is_zero() || x[j].is_zero()) continue;
                acc -= RatFunc(rows[k].coeff[j]) * x[j];
            }
            x[p] = acc / RatFunc(rows[k].coeff[p]);
        }
        return x;
    };

    const std::size_t free_count = n - r;
    std::vector<RatFunc> zeros(free_count, RatFunc::zero(vars));
    out.particular = back_substitute(zeros, false);
    for (std::size_t f = 0; f < free_count; ++f) {
        std::vector<RatFunc> e(free_count, RatFunc::zero(vars));
        e[f] = RatFunc::one(vars);
        out.nullspace.push_back(back_substitute(e, true));
    }
    return out;
}

std::vector<std::vector<RatFunc>> left_kernel(const RatMat& M) {
    RatMat t = M.transposed();
    std::vector<RatFunc> zero_rhs(t.rows(), RatFunc::zero(M(0, 0).vars()));
    return ff_solve(t, zero_rhs).nullspace;
}

MultiPoly det_bareiss(const PolyMat& M) {
    const std::size_t n = M.rows();
    if (n != M.cols()) throw ShapeError("determinant of non-square matrix");
    if (n == 0) throw ShapeError("determinant of empty matrix");
    const VarSetPtr vars = M(0, 0).vars();
    PolyMat a = M;
    MultiPoly prev = MultiPoly::constant(vars, 1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t swap_row = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (!a(i, k).is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row == n) return MultiPoly(vars);
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = divide_exact(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
            a(i, k) = MultiPoly(vars);
        }
        prev = a(k, k);
    }
    MultiPoly det = a(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

PolyMat adjugate(const PolyMat& M) {
    const std::size_t n = M.rows();
    if (n != M.cols()) throw ShapeError("adjugate of non-square matrix");
    const VarSetPtr vars = M(0, 0).vars();
    PolyMat adj(n, n, MultiPoly(vars));
    if (n == 1) {
        adj(0, 0) = MultiPoly::constant(vars, 1);
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            PolyMat minor(n - 1, n - 1, MultiPoly(vars));
            for (std::size_t r = 0, mr = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, mc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(mr, mc) = M(r, c);
                    ++mc;
                }
                ++mr;
            }
            MultiPoly cof = det_bareiss(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            adj(j, i) = cof;
        }
    }
    return adj;
}

InverseDenominator matrix_inverse_denominator(const PolyMat& M) {
    MultiPoly det = det_bareiss(M);
    if (det.is_zero()) throw SingularMatrixError("matrix_inverse_denominator: singular matrix");
    PolyMat adj = adjugate(M);
    const VarSetPtr vars = det.vars();
    MultiPoly lcd = MultiPoly::constant(vars, 1);
    for (std::size_t i = 0; i < adj.rows(); ++i) {
        for (std::size_t j = 0; j < adj.cols(); ++j) {
            if (adj(i, j).is_zero()) continue;
            MultiPoly g = gcd_full(adj(i, j), det);
            lcd = lcm_full(lcd, divide_exact(det, g));
        }
    }
    return {normalize_assoc(lcd), det};
}

}  // namespace oresolve
