#include "oresolve/regularise.hpp"

namespace oresolve {

PolyMat poly_coeff(const LinearSystem& system, long k) {
    const VarSetPtr& vars = system.op.field()->vars();
    PolyMat out(system.op.rows(), system.op.cols(), MultiPoly(vars));
    for (std::size_t i = 0; i < system.op.rows(); ++i)
        for (std::size_t j = 0; j < system.op.cols(); ++j) {
            const RatFunc& e = system.op.entry(k, i, j);
            if (e.is_zero()) continue;
            if (!e.is_polynomial()) throw Error("system entry is not polynomial");
            out(i, j) = e.num();
        }
    return out;
}

bool is_head_regular(const LinearSystem& system) {
    if (system.op.rows() != system.op.cols())
        throw ShapeError("head regularity asks for a square system");
    if (system.op.is_zero()) return false;
    return !det_bareiss(poly_coeff(system, system.op.hi())).is_zero();
}

bool is_tail_regular(const LinearSystem& system) {
    if (system.op.rows() != system.op.cols())
        throw ShapeError("tail regularity asks for a square system");
    if (system.op.is_zero()) return false;
    return !det_bareiss(poly_coeff(system, 0)).is_zero();
}

namespace {

/// diag(sigma^{d*(nu - nu_i)}) for the nonzero rows (identity on zero rows),
/// bringing every row to the common degree toward `direction`.
OpPair degree_equalizer(const OreMatrix& A, int direction) {
    const FieldSpecPtr field = A.field();
    const VarSetPtr& vars = field->vars();
    const std::size_t m = A.rows();
    std::optional<long> nu;
    std::vector<std::optional<long>> deg(m);
    for (std::size_t i = 0; i < m; ++i) {
        deg[i] = A.row_degree(i, direction);
        if (deg[i] && (!nu || *deg[i] > *nu)) nu = deg[i];
    }
    OreMatrix D = OreMatrix::zero(field, m, m);
    OreMatrix Dinv = OreMatrix::zero(field, m, m);
    for (std::size_t i = 0; i < m; ++i) {
        long shift = (deg[i] && nu) ? direction * (*nu - *deg[i]) : 0;
        D.set_entry(shift, i, i, RatFunc::one(vars));
        Dinv.set_entry(-shift, i, i, RatFunc::one(vars));
    }
    return {D, Dinv};
}

std::vector<RatFunc> to_ratfunc(const std::vector<MultiPoly>& v) {
    std::vector<RatFunc> out;
    out.reserve(v.size());
    for (const auto& p : v) out.emplace_back(p);
    return out;
}

}  // namespace

RegulariseResult regularise(const LinearSystem& input) {
    const FieldSpecPtr field = input.op.field();
    const VarSetPtr& vars = field->vars();
    if (input.op.is_zero()) throw ZeroInputError("regularise: zero operator");
    if (input.rhs.size() != input.op.rows()) throw ShapeError("regularise: rhs length mismatch");

    // Stage 1: column reduction, then row reduction, then row-degree
    // equalisation; the nonzero block becomes a square head-regular core.
    ColReduction cols = column_reduce(input.op, +1);
    RowReduction rows = row_reduce(cols.R, +1);
    if (cols.rank != rows.rank) throw Error("regularise: rank mismatch between reductions");
    const std::size_t r = rows.rank;
    const std::size_t m = input.op.rows();
    const std::size_t n = input.op.cols();

    OpPair P = rows.P;
    OpPair delta = degree_equalizer(rows.R, +1);
    OreMatrix M = ore_mul(delta.fwd, rows.R);
    P.compose_left(delta);

    std::vector<RatFunc> b = ore_apply(P.fwd, to_ratfunc(input.rhs));

    // Row-wise denominator clearing keeps the block polynomial and folds the
    // scaling into the tracked transform.
    ClearedSystem cleared = clear_denominators(M, b);
    P.compose_left(cleared.applied);
    M = cleared.system.op;
    std::vector<MultiPoly> b_poly = cleared.system.rhs;

    RegulariseResult result;
    result.compat.assign(b_poly.begin() + static_cast<long>(r), b_poly.end());
    result.solvable = true;
    for (const auto& c : result.compat)
        if (!c.is_zero()) result.solvable = false;
    if (!result.solvable) return result;

    // Slice the head block.
    OreMatrix head_op(field, r, r);
    for (long k = M.lo(); !M.is_zero() && k <= M.hi(); ++k)
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                const RatFunc& e = M.entry(k, i, j);
                if (!e.is_zero()) head_op.set_entry(k, i, j, e);
            }
    // Zero columns live to the right of the block.
    for (long k = M.lo(); !M.is_zero() && k <= M.hi(); ++k)
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = r; j < n; ++j)
                if (!M.entry(k, i, j).is_zero())
                    throw Error("regularise: nonzero entry beyond the reduced block");

    RegularisedSystem reg{
        LinearSystem{head_op, std::vector<MultiPoly>(b_poly.begin(), b_poly.begin() + static_cast<long>(r))},
        LinearSystem{OreMatrix::zero(field, r, r), {}},
        P,
        cols.Q,
        OpPair::identity(field, r),
        result.compat,
        {},
        0};
    for (std::size_t j = r; j < n; ++j) reg.free_vars.push_back(j);
    if (r == 0) throw Error("regularise: zero-rank system has no head block");
    reg.head_order = reg.head.op.hi();
    if (!is_head_regular(reg.head)) throw Error("regularise: head block is not head regular");

    // Stage 2: tail regularity.  sigma^{-l} A reverses the coefficient list;
    // reduce toward sigma^{-1}, equalize, and shift back.
    const long ell = reg.head_order;
    OpPair tail_t = OpPair::identity(field, r);
    OreMatrix B = ore_mul(OreMatrix::shift_identity(field, r, -ell), reg.head.op);
    tail_t.compose_left(OpPair{OreMatrix::shift_identity(field, r, -ell),
                               OreMatrix::shift_identity(field, r, ell)});
    RowReduction back = row_reduce(B, -1);
    if (back.rank != r) throw Error("regularise: head-regular block lost rank toward sigma^{-1}");
    tail_t.compose_left(back.P);
    OpPair delta2 = degree_equalizer(back.R, -1);
    OreMatrix T = ore_mul(delta2.fwd, back.R);
    tail_t.compose_left(delta2);
    const long ell_tilde = -T.lo();
    tail_t.compose_left(OpPair{OreMatrix::shift_identity(field, r, ell_tilde),
                               OreMatrix::shift_identity(field, r, -ell_tilde)});
    T = ore_mul(OreMatrix::shift_identity(field, r, ell_tilde), T);

    std::vector<RatFunc> tail_rhs = ore_apply(tail_t.fwd, to_ratfunc(reg.head.rhs));
    ClearedSystem tail_cleared = clear_denominators(T, tail_rhs);
    tail_t.compose_left(tail_cleared.applied);
    reg.tail = tail_cleared.system;
    reg.tail_transform = tail_t;
    if (!is_tail_regular(reg.tail)) throw Error("regularise: tail block is not tail regular");

    result.system = std::move(reg);
    return result;
}

}  // namespace oresolve
