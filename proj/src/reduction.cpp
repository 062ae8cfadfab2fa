#include "oresolve/reduction.hpp"

#include <algorithm>
#include <numeric>

namespace oresolve {

namespace {

/// Scale a rational-function vector to polynomial entries with content
/// removed, keeping it a nonzero multiple of the input.
std::vector<RatFunc> scale_to_primitive(const std::vector<RatFunc>& v) {
    const VarSetPtr vars = v.at(0).vars();
    MultiPoly l = MultiPoly::constant(vars, 1);
    for (const auto& r : v) l = lcm_full(l, r.den());
    std::vector<MultiPoly> nums;
    nums.reserve(v.size());
    MultiPoly g(vars);
    for (const auto& r : v) {
        MultiPoly u = r.num() * divide_exact(l, r.den());
        g = gcd_full(g, u);
        nums.push_back(std::move(u));
    }
    std::vector<RatFunc> out;
    out.reserve(v.size());
    for (auto& u : nums)
        out.emplace_back(g.is_zero() ? u : divide_exact(u, g));
    return out;
}

long direction_degree(long exponent, int direction) { return direction > 0 ? exponent : -exponent; }

}  // namespace

RatMat lrcm(const OreMatrix& A, int direction) {
    const FieldSpec& field = *A.field();
    RatMat out(A.rows(), A.cols(), RatFunc::zero(field.vars()));
    std::optional<long> nu;
    std::vector<std::optional<long>> row_deg(A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        row_deg[i] = A.row_degree(i, direction);
        if (row_deg[i] && (!nu || *row_deg[i] > *nu)) nu = row_deg[i];
    }
    if (!nu) return out;
    for (std::size_t i = 0; i < A.rows(); ++i) {
        if (!row_deg[i]) continue;
        const long lead_exp = direction > 0 ? *row_deg[i] : -*row_deg[i];
        const long shift = direction * (*nu - *row_deg[i]);
        for (std::size_t j = 0; j < A.cols(); ++j) {
            const RatFunc& c = A.entry(lead_exp, i, j);
            if (!c.is_zero()) out(i, j) = apply_sigma(field, c, shift);
        }
    }
    return out;
}

namespace {

struct ReductionState {
    OreMatrix R;
    OpPair P;
};

/// One elimination pass; returns false once the LRCM of the nonzero rows has
/// full row rank.
bool eliminate_once(ReductionState& st, int direction) {
    const FieldSpecPtr field = st.R.field();
    const VarSetPtr& vars = field->vars();
    const std::size_t m = st.R.rows();

    std::vector<std::optional<long>> deg(m);
    std::vector<std::size_t> nonzero;
    std::optional<long> nu;
    for (std::size_t i = 0; i < m; ++i) {
        deg[i] = st.R.row_degree(i, direction);
        if (deg[i]) {
            nonzero.push_back(i);
            if (!nu || *deg[i] > *nu) nu = deg[i];
        }
    }
    if (nonzero.empty()) return false;

    RatMat full = lrcm(st.R, direction);
    RatMat sub(nonzero.size(), st.R.cols(), RatFunc::zero(vars));
    for (std::size_t a = 0; a < nonzero.size(); ++a)
        for (std::size_t j = 0; j < st.R.cols(); ++j) sub(a, j) = full(nonzero[a], j);

    auto kernel = left_kernel(sub);
    if (kernel.empty()) return false;
    std::vector<RatFunc> v = scale_to_primitive(kernel.front());

    // Pivot: maximal row degree in the kernel support, ties to the largest index.
    std::size_t pivot_pos = nonzero.size();
    for (std::size_t a = 0; a < nonzero.size(); ++a) {
        if (v[a].is_zero()) continue;
        if (pivot_pos == nonzero.size() || *deg[nonzero[a]] >= *deg[nonzero[pivot_pos]])
            pivot_pos = a;
    }
    const std::size_t pivot = nonzero[pivot_pos];
    const long nu_i = *deg[pivot];

    // Row pivot := sum_j sigma^{d(nu_i - nu)}(v_j) * sigma^{d(nu_i - nu_j)} row_j.
    OreMatrix E = OreMatrix::identity(field, m);
    OreMatrix Einv = OreMatrix::identity(field, m);
    E.set_entry(0, pivot, pivot, RatFunc::zero(vars));
    Einv.set_entry(0, pivot, pivot, RatFunc::zero(vars));
    RatFunc w_pivot = apply_sigma(*field, v[pivot_pos], direction * (nu_i - *nu));
    for (std::size_t a = 0; a < nonzero.size(); ++a) {
        if (v[a].is_zero()) continue;
        const std::size_t j = nonzero[a];
        const long e = direction * (nu_i - *deg[j]);
        RatFunc w = apply_sigma(*field, v[a], direction * (nu_i - *nu));
        E.set_entry(e, pivot, j, w);
        if (j != pivot) Einv.set_entry(e, pivot, j, -(w / w_pivot));
    }
    Einv.set_entry(0, pivot, pivot, w_pivot.inverse());

    st.R = ore_mul(E, st.R);
    st.P.compose_left(OpPair{E, Einv});

    // The combination cancels the leading coefficient of the pivot row.
    auto after = st.R.row_degree(pivot, direction);
    if (after && *after >= nu_i) throw Error("row reduction failed to decrease degree");
    return true;
}

}  // namespace

RowReduction row_reduce(const OreMatrix& A, int direction) {
    const FieldSpecPtr field = A.field();
    ReductionState st{A, OpPair::identity(field, A.rows())};

    long guard = 0;
    long bound = 16;
    if (!A.is_zero()) bound += static_cast<long>(A.rows()) * (std::labs(A.hi()) + std::labs(A.lo()) + 4);
    while (eliminate_once(st, direction)) {
        if (++guard > bound * 8) throw Error("row reduction did not terminate");
    }

    // Permute zero rows to the bottom (stable).
    const std::size_t m = A.rows();
    std::vector<std::size_t> order;
    std::vector<std::size_t> zeros;
    for (std::size_t i = 0; i < m; ++i) {
        if (st.R.row_degree(i, direction))
            order.push_back(i);
        else
            zeros.push_back(i);
    }
    const std::size_t rank = order.size();
    for (std::size_t i = 0; i < zeros.size(); ++i) order.push_back(zeros[i]);
    bool is_identity = true;
    for (std::size_t i = 0; i < m; ++i) is_identity = is_identity && order[i] == i;
    if (!is_identity) {
        const VarSetPtr& vars = field->vars();
        OreMatrix Pm = OreMatrix::zero(field, m, m);
        OreMatrix PmInv = OreMatrix::zero(field, m, m);
        for (std::size_t i = 0; i < m; ++i) {
            Pm.set_entry(0, i, order[i], RatFunc::one(vars));
            PmInv.set_entry(0, order[i], i, RatFunc::one(vars));
        }
        st.R = ore_mul(Pm, st.R);
        st.P.compose_left(OpPair{Pm, PmInv});
    }
    RowReduction out{std::move(st.P), std::move(st.R), rank, {}};
    for (std::size_t i = out.rank; i < m; ++i) out.zero_rows.push_back(i);
    return out;
}

namespace {

/// Leading column coefficient matrix: column j at its own leading exponent.
/// Right multiplication by sigma powers leaves coefficients untouched, so no
/// shifts are applied here.
RatMat lccm(const OreMatrix& A, int direction, std::vector<std::optional<long>>& deg) {
    const VarSetPtr& vars = A.field()->vars();
    RatMat out(A.rows(), A.cols(), RatFunc::zero(vars));
    deg.assign(A.cols(), std::nullopt);
    for (std::size_t j = 0; j < A.cols(); ++j) {
        deg[j] = A.col_degree(j, direction);
        if (!deg[j]) continue;
        const long lead_exp = direction > 0 ? *deg[j] : -*deg[j];
        for (std::size_t i = 0; i < A.rows(); ++i) out(i, j) = A.entry(lead_exp, i, j);
    }
    return out;
}

struct ColState {
    OreMatrix R;
    OpPair Q;
};

bool eliminate_col_once(ColState& st, int direction) {
    const FieldSpecPtr field = st.R.field();
    const VarSetPtr& vars = field->vars();
    const std::size_t n = st.R.cols();

    std::vector<std::optional<long>> deg;
    RatMat full = lccm(st.R, direction, deg);
    std::vector<std::size_t> nonzero;
    std::optional<long> nu;
    for (std::size_t j = 0; j < n; ++j)
        if (deg[j]) {
            nonzero.push_back(j);
            if (!nu || *deg[j] > *nu) nu = deg[j];
        }
    if (nonzero.empty()) return false;

    RatMat sub(st.R.rows(), nonzero.size(), RatFunc::zero(vars));
    for (std::size_t i = 0; i < st.R.rows(); ++i)
        for (std::size_t a = 0; a < nonzero.size(); ++a) sub(i, a) = full(i, nonzero[a]);

    std::vector<RatFunc> zero_rhs(st.R.rows(), RatFunc::zero(vars));
    auto kernel = ff_solve(sub, zero_rhs).nullspace;
    if (kernel.empty()) return false;
    std::vector<RatFunc> u = scale_to_primitive(kernel.front());

    std::size_t pivot_pos = nonzero.size();
    for (std::size_t a = 0; a < nonzero.size(); ++a) {
        if (u[a].is_zero()) continue;
        if (pivot_pos == nonzero.size() || *deg[nonzero[a]] >= *deg[nonzero[pivot_pos]])
            pivot_pos = a;
    }
    const std::size_t pivot = nonzero[pivot_pos];
    const long nu_i = *deg[pivot];

    // Column pivot := sum_j col_j (sigma^{d(nu_i-nu_j)} . sigma^{-d nu_j}(u_j)).
    OreMatrix E = OreMatrix::identity(field, n);
    OreMatrix Einv = OreMatrix::identity(field, n);
    E.set_entry(0, pivot, pivot, RatFunc::zero(vars));
    Einv.set_entry(0, pivot, pivot, RatFunc::zero(vars));
    RatFunc c_pivot = apply_sigma(*field, u[pivot_pos], -direction * nu_i);
    for (std::size_t a = 0; a < nonzero.size(); ++a) {
        if (u[a].is_zero()) continue;
        const std::size_t j = nonzero[a];
        const long e = direction * (nu_i - *deg[j]);
        RatFunc c = apply_sigma(*field, u[a], -direction * *deg[j]);
        E.set_entry(e, j, pivot, c);
        if (j != pivot) {
            // Qinv[j][pivot] = -Q[j][pivot] * c_pivot^{-1}
            RatFunc inv_shifted = apply_sigma(*field, c_pivot.inverse(), e);
            Einv.set_entry(e, j, pivot, -(c * inv_shifted));
        }
    }
    Einv.set_entry(0, pivot, pivot, c_pivot.inverse());

    st.R = ore_mul(st.R, E);
    st.Q.compose_right(OpPair{E, Einv});

    auto after = st.R.col_degree(pivot, direction);
    if (after && *after >= nu_i) throw Error("column reduction failed to decrease degree");
    return true;
}

}  // namespace

ColReduction column_reduce(const OreMatrix& A, int direction) {
    const FieldSpecPtr field = A.field();
    ColState st{A, OpPair::identity(field, A.cols())};

    long guard = 0;
    long bound = 16;
    if (!A.is_zero()) bound += static_cast<long>(A.cols()) * (std::labs(A.hi()) + std::labs(A.lo()) + 4);
    while (eliminate_col_once(st, direction)) {
        if (++guard > bound * 8) throw Error("column reduction did not terminate");
    }

    const std::size_t n = A.cols();
    std::vector<std::size_t> order;
    std::vector<std::size_t> zeros;
    for (std::size_t j = 0; j < n; ++j) {
        if (st.R.col_degree(j, direction))
            order.push_back(j);
        else
            zeros.push_back(j);
    }
    const std::size_t rank = order.size();
    for (std::size_t j : zeros) order.push_back(j);
    bool is_identity = true;
    for (std::size_t j = 0; j < n; ++j) is_identity = is_identity && order[j] == j;
    if (!is_identity) {
        const VarSetPtr& vars = field->vars();
        OreMatrix Pm = OreMatrix::zero(field, n, n);
        OreMatrix PmInv = OreMatrix::zero(field, n, n);
        for (std::size_t j = 0; j < n; ++j) {
            Pm.set_entry(0, order[j], j, RatFunc::one(vars));
            PmInv.set_entry(0, j, order[j], RatFunc::one(vars));
        }
        st.R = ore_mul(st.R, Pm);
        st.Q.compose_right(OpPair{Pm, PmInv});
    }
    ColReduction out{std::move(st.Q), std::move(st.R), rank, {}};
    for (std::size_t j = out.rank; j < n; ++j) out.zero_cols.push_back(j);
    return out;
}

}  // namespace oresolve
