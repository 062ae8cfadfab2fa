#include "oresolve/solver.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace oresolve {

namespace {

/// All exponent vectors over the generators with total degree <= bound.
std::vector<Exponents> generator_monomials(const FieldSpec& field, long bound) {
    const std::size_t nvars = field.vars()->size();
    std::vector<Exponents> out;
    Exponents current(nvars, 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t g, long left) {
        if (g == field.generator_count()) {
            out.push_back(current);
            return;
        }
        for (long e = 0; e <= left; ++e) {
            current[field.gen_var(g)] = static_cast<int>(e);
            rec(g + 1, left - e);
        }
        current[field.gen_var(g)] = 0;
    };
    rec(0, bound);
    return out;
}

}  // namespace

bool verify_solution(const LinearSystem& system, const std::vector<RatFunc>& y) {
    if (y.size() != system.op.cols()) throw ShapeError("verify_solution: vector length mismatch");
    std::vector<RatFunc> image = ore_apply(system.op, y);
    for (std::size_t i = 0; i < image.size(); ++i)
        if (image[i] != RatFunc(system.rhs[i])) return false;
    return true;
}

SolutionBasis rational_solutions(const LinearSystem& system, const MultiPoly& den,
                                 long degree_bound) {
    if (den.is_zero()) throw ZeroInputError("rational_solutions: zero denominator bound");
    if (degree_bound < 0) throw Error("rational_solutions: negative degree bound");
    const FieldSpec& field = *system.op.field();
    const VarSetPtr& vars = field.vars();
    const std::size_t n = system.op.cols();
    const long ell = system.order();

    // Clear y = z/den from the system: multiply each A_k by L / sigma^k(den)
    // with L = lcm_k sigma^k(den); the system for z has polynomial
    // coefficients (parameter units may appear).
    std::vector<MultiPoly> den_shift;
    MultiPoly L = MultiPoly::constant(vars, 1);
    for (long k = 0; k <= ell; ++k) {
        den_shift.push_back(apply_sigma(field, den, k));
        L = lcm_full(L, den_shift.back());
    }

    const std::vector<Exponents> monomials = generator_monomials(field, degree_bound);
    const std::size_t cols = n * monomials.size();

    // Rows of the linear system over the constant field, keyed by
    // (equation row, generator monomial).
    std::map<std::pair<std::size_t, Exponents>, std::vector<MultiPoly>> rows;
    std::map<std::pair<std::size_t, Exponents>, MultiPoly> rhs_entries;
    auto row_of = [&](std::size_t i, const Exponents& key) -> std::vector<MultiPoly>& {
        auto it = rows.find({i, key});
        if (it == rows.end())
            it = rows.emplace(std::make_pair(i, key), std::vector<MultiPoly>(cols, MultiPoly(vars)))
                     .first;
        return it->second;
    };

    for (long k = 0; k <= ell; ++k) {
        MultiPoly factor = divide_exact(L, den_shift[static_cast<std::size_t>(k)]);
        for (std::size_t s = 0; s < monomials.size(); ++s) {
            MultiPoly mono = MultiPoly::monomial(vars, monomials[s], Rational(1));
            MultiPoly shifted = apply_sigma(field, mono, k) * factor;
            for (std::size_t i = 0; i < system.op.rows(); ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    const RatFunc& a = system.op.entry(k, i, j);
                    if (a.is_zero()) continue;
                    if (!a.is_polynomial()) throw Error("rational_solutions: non-polynomial entry");
                    MultiPoly contrib = a.num() * shifted;
                    for (auto& [gkey, coeff] : split_by_generator_monomials(contrib))
                        row_of(i, gkey)[j * monomials.size() + s] += coeff;
                }
            }
        }
    }
    for (std::size_t i = 0; i < system.rhs.size(); ++i) {
        if (system.rhs[i].is_zero()) continue;
        MultiPoly scaled = system.rhs[i] * L;
        for (auto& [gkey, coeff] : split_by_generator_monomials(scaled)) {
            row_of(i, gkey);  // make sure the row exists even if no unknown hits it
            auto it = rhs_entries.find({i, gkey});
            if (it == rhs_entries.end())
                rhs_entries.emplace(std::make_pair(i, gkey), coeff);
            else
                it->second += coeff;
        }
    }

    RatMat M(std::max<std::size_t>(rows.size(), 1), cols, RatFunc::zero(vars));
    std::vector<RatFunc> rhs_vec(std::max<std::size_t>(rows.size(), 1), RatFunc::zero(vars));
    std::size_t ri = 0;
    for (auto& [key, coeffs] : rows) {
        for (std::size_t c = 0; c < cols; ++c)
            if (!coeffs[c].is_zero()) M(ri, c) = laurent_to_ratfunc(coeffs[c]);
        auto it = rhs_entries.find(key);
        if (it != rhs_entries.end()) rhs_vec[ri] = laurent_to_ratfunc(it->second);
        ++ri;
    }

    LinSolveResult sol = ff_solve(M, rhs_vec);

    SolutionBasis out{std::nullopt, {}, den, degree_bound, ""};

    auto assemble = [&](const std::vector<RatFunc>& c) -> std::vector<RatFunc> {
        std::vector<RatFunc> y(n, RatFunc::zero(vars));
        RatFunc den_rf{den};
        for (std::size_t j = 0; j < n; ++j) {
            RatFunc z = RatFunc::zero(vars);
            for (std::size_t s = 0; s < monomials.size(); ++s) {
                const RatFunc& cj = c[j * monomials.size() + s];
                if (cj.is_zero()) continue;
                z += cj * RatFunc(MultiPoly::monomial(vars, monomials[s], Rational(1)));
            }
            y[j] = z / den_rf;
        }
        return y;
    };

    if (sol.consistent) {
        std::vector<RatFunc> part = assemble(sol.particular);
        if (!verify_solution(system, part))
            throw Error("rational_solutions: particular solution failed verification");
        out.particular = std::move(part);
    } else {
        out.diagnostic = "right-hand side is inconsistent within the degree bound";
        std::vector<RatFunc> zero_rhs(rhs_vec.size(), RatFunc::zero(vars));
        sol = ff_solve(M, zero_rhs);
    }

    LinearSystem homogeneous{system.op, std::vector<MultiPoly>(system.rhs.size(), MultiPoly(vars))};
    for (const auto& c : sol.nullspace) {
        std::vector<RatFunc> y = assemble(c);
        bool nonzero = false;
        for (const auto& e : y) nonzero = nonzero || !e.is_zero();
        if (!nonzero) continue;
        if (!verify_solution(homogeneous, y))
            throw Error("rational_solutions: basis vector failed verification");
        out.basis.push_back(std::move(y));
    }
    return out;
}

}  // namespace oresolve
