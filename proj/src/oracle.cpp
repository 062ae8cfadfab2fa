#include "oresolve/oracle.hpp"

#include <algorithm>
#include <sstream>

namespace oresolve {

long OracleRng::int_in(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(eng);
}

Rational OracleRng::coeff() {
    long c = int_in(-5, 5);
    if (c == 0) c = 1;
    return Rational(c);
}

MultiPoly OracleRng::random_poly(const FieldSpec& field, int max_deg_per_gen, int terms,
                                 bool allow_params) {
    const VarSetPtr& vars = field.vars();
    MultiPoly p(vars);
    for (int t = 0; t < terms; ++t) {
        Exponents e(vars->size(), 0);
        for (std::size_t g = 0; g < field.generator_count(); ++g)
            e[field.gen_var(g)] = static_cast<int>(int_in(0, max_deg_per_gen));
        if (allow_params)
            for (std::size_t q = 0; q < field.parameter_count(); ++q)
                e[field.param_var(q)] = static_cast<int>(int_in(0, 1));
        p.add_term(e, coeff());
    }
    if (p.is_zero()) p = MultiPoly::constant(vars, 1);
    return p;
}

MultiPoly OracleRng::planted_denominator(const FieldSpec& field, long max_disp) {
    const VarSetPtr& vars = field.vars();
    // A small factor with full support over the generators.
    MultiPoly base(vars);
    for (std::size_t g = 0; g < field.generator_count(); ++g) {
        Exponents e(vars->size(), 0);
        e[field.gen_var(g)] = 1;
        base.add_term(e, coeff());
    }
    {
        Exponents e(vars->size(), 0);
        if (field.parameter_count() > 0 && int_in(0, 1) == 0)
            e[field.param_var(static_cast<std::size_t>(
                int_in(0, static_cast<long>(field.parameter_count()) - 1)))] = 1;
        base.add_term(e, coeff());
    }
    if (base.is_zero() || base.is_constant()) {
        base = MultiPoly::variable(vars, field.gen_var(0)) + MultiPoly::constant(vars, 1);
    }
    long k = int_in(0, max_disp);
    MultiPoly den = base * apply_sigma(field, base, k);
    // Avoid planting Pi-periodic content: strip generator powers.
    den = aperiodic_part_all(field, den);
    return normalize_assoc(den);
}

FieldSpecPtr oracle_field_case(std::size_t which) {
    switch (which % 4) {
        case 0: return FieldSpec::rational("t");
        case 1: return FieldSpec::q_rational("q", "t");
        case 2: return FieldSpec::multibasic({"q1", "q2"}, {"t1", "t2"});
        default: return FieldSpec::mixed({"q1"}, {"t1"}, "t");
    }
}

PlantedInstance plant_system(const FieldSpecPtr& field, std::size_t n, long order,
                             const std::vector<std::vector<RatFunc>>& planted, std::uint64_t seed,
                             const std::vector<RatFunc>* particular) {
    if (order < 1) throw ConstructionError("plant_system: order must be positive");
    if (planted.size() >= n + 1)
        throw ConstructionError("plant_system: too many planted vectors for the size");
    for (const auto& v : planted)
        if (v.size() != n) throw ConstructionError("plant_system: planted vector length mismatch");

    OracleRng rng(seed);
    const VarSetPtr& vars = field->vars();

    // Random A_1..A_l with det A_l != 0.
    std::vector<PolyMat> upper;
    for (long k = 1; k <= order; ++k) {
        PolyMat A(n, n, MultiPoly(vars));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) A(i, j) = rng.random_poly(*field, 2, 2, false);
        upper.push_back(std::move(A));
    }
    bool regular = false;
    for (int tries = 0; tries < 10 && !regular; ++tries) {
        if (!det_bareiss(upper.back()).is_zero()) {
            regular = true;
            break;
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) upper.back()(i, j) = rng.random_poly(*field, 2, 2, false);
    }
    if (!regular) {
        // Densify: triangular with nonzero diagonal.
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                upper.back()(i, j) = j > i ? MultiPoly(vars)
                                           : (i == j ? rng.random_poly(*field, 1, 1, false) +
                                                           MultiPoly::constant(vars, 1)
                                                     : rng.random_poly(*field, 1, 2, false));
        if (det_bareiss(upper.back()).is_zero())
            throw ConstructionError("plant_system: no regular leading matrix (seed " +
                                    std::to_string(seed) + ")");
    }

    // A_0 rows: sum_j A_0[i][j] v_j = -w_i for every planted vector v.
    RatMat A0(n, n, RatFunc::zero(vars));
    if (!planted.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
            RatMat M(planted.size(), n, RatFunc::zero(vars));
            std::vector<RatFunc> rhs;
            for (std::size_t s = 0; s < planted.size(); ++s) {
                for (std::size_t j = 0; j < n; ++j) M(s, j) = planted[s][j];
                RatFunc w = RatFunc::zero(vars);
                for (long k = 1; k <= order; ++k) {
                    std::vector<RatFunc> shifted = apply_sigma(*field, planted[s], k);
                    for (std::size_t j = 0; j < n; ++j)
                        w += RatFunc(upper[static_cast<std::size_t>(k - 1)](i, j)) * shifted[j];
                }
                rhs.push_back(-w);
            }
            LinSolveResult sol = ff_solve(M, rhs);
            if (!sol.consistent)
                throw ConstructionError("plant_system: dependent planted vectors (seed " +
                                        std::to_string(seed) + ")");
            std::vector<RatFunc> row = sol.particular;
            for (const auto& null_vec : sol.nullspace) {
                Rational c(rng.int_in(-2, 2));
                if (c == 0) continue;
                for (std::size_t j = 0; j < n; ++j) row[j] += RatFunc::constant(vars, c) * null_vec[j];
            }
            for (std::size_t j = 0; j < n; ++j) A0(i, j) = row[j];
        }
    } else {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) A0(i, j) = RatFunc(rng.random_poly(*field, 2, 2, false));
    }

    OreMatrix op(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!A0(i, j).is_zero()) op.set_entry(0, i, j, A0(i, j));
            for (long k = 1; k <= order; ++k) {
                const MultiPoly& e = upper[static_cast<std::size_t>(k - 1)](i, j);
                if (!e.is_zero()) op.set_entry(k, i, j, RatFunc(e));
            }
        }

    std::vector<RatFunc> rhs(n, RatFunc::zero(vars));
    if (particular) rhs = ore_apply(op, *particular);
    ClearedSystem cleared = clear_denominators(op, rhs);

    PlantedInstance inst{std::move(cleared.system), {}, field, seed};
    if (particular) {
        // Homogeneous directions shift the particular solution.
        inst.planted.push_back(*particular);
        for (const auto& v : planted) {
            std::vector<RatFunc> sum = *particular;
            for (std::size_t j = 0; j < n; ++j) sum[j] += v[j];
            inst.planted.push_back(std::move(sum));
        }
    } else {
        inst.planted = planted;
    }

    // Re-verify everything before handing the instance out.
    for (const auto& v : inst.planted)
        if (!verify_solution(inst.system, v))
            throw ConstructionError("plant_system: verification failed (seed " +
                                    std::to_string(seed) + ")");
    return inst;
}

bool check_divisibility(const FieldSpec& field, const DenBound& db, const PlantedInstance& inst) {
    for (const auto& y : inst.planted) {
        MultiPoly q = MultiPoly::constant(field.vars(), 1);
        bool all_zero = true;
        for (const auto& e : y) {
            if (!e.is_zero()) all_zero = false;
            q = lcm_full(q, e.den());
        }
        if (all_zero) continue;
        MultiPoly ap = aperiodic_part_all(field, q);
        if (!divides(ap, db.d)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

namespace {

void record_failure(SuiteReport& rep, const std::string& msg) {
    if (rep.failures.size() < 5) rep.failures.push_back(msg);
}

std::vector<RatFunc> random_planted_vector(OracleRng& rng, const FieldSpec& field, std::size_t n,
                                           const MultiPoly& den) {
    std::vector<RatFunc> v;
    for (std::size_t j = 0; j < n; ++j) {
        MultiPoly num = rng.random_poly(field, 2, 2, false);
        v.emplace_back(num, den);
    }
    return v;
}

}  // namespace

SuiteReport run_soundness_suite(std::size_t cases, std::uint64_t seed) {
    SuiteReport rep;
    rep.name = "planted-soundness";
    rep.cases = cases;
    for (std::size_t c = 0; c < cases; ++c) {
        std::uint64_t s = seed + 1000 * c;
        OracleRng rng(s);
        FieldSpecPtr field = oracle_field_case(c);
        std::size_t n = static_cast<std::size_t>(rng.int_in(1, 3));
        long order = rng.int_in(1, 2);
        try {
            MultiPoly den = rng.planted_denominator(*field, 5);
            std::vector<std::vector<RatFunc>> planted{random_planted_vector(rng, *field, n, den)};
            PlantedInstance inst = plant_system(field, n, order, planted, s);
            DenBound db = denbound_multivariate(inst.system, true, s);
            if (check_divisibility(*field, db, inst))
                ++rep.passes;
            else
                record_failure(rep, "divisibility failed at seed " + std::to_string(s));
        } catch (const std::exception& e) {
            record_failure(rep, "seed " + std::to_string(s) + ": " + e.what());
        }
    }
    return rep;
}

SuiteReport run_dispersion_suite(std::size_t cases_per_field, std::uint64_t seed) {
    SuiteReport rep;
    rep.name = "dispersion-oracle";
    rep.cases = cases_per_field * 4;
    for (std::size_t fc = 0; fc < 4; ++fc) {
        FieldSpecPtr field = oracle_field_case(fc);
        for (std::size_t c = 0; c < cases_per_field; ++c) {
            std::uint64_t s = seed + 7919 * (fc * cases_per_field + c);
            OracleRng rng(s);
            try {
                // Half the cases get a planted overlap, half are free random.
                MultiPoly a(field->vars()), b(field->vars());
                if (c % 2 == 0) {
                    MultiPoly u = rng.planted_denominator(*field, 0);
                    long k0 = rng.int_in(0, 5);
                    a = apply_sigma(*field, u, k0) * rng.random_poly(*field, 1, 2, false);
                    b = u * rng.random_poly(*field, 1, 2, false);
                } else {
                    a = rng.random_poly(*field, 2, 3, false);
                    b = rng.random_poly(*field, 2, 3, false);
                }
                if (a.is_zero() || b.is_zero()) {
                    ++rep.passes;
                    continue;
                }
                std::size_t gen = static_cast<std::size_t>(
                    rng.int_in(0, static_cast<long>(field->generator_count()) - 1));
                SpreadResult sp = spread(*field, a, b, gen, s);
                long k_max = 3;
                if (sp.is_infinite) {
                    const std::size_t var = field->gen_var(gen);
                    if (a.valuation(var) <= 0 || b.valuation(var) <= 0) {
                        record_failure(rep, "spurious infinite spread at seed " + std::to_string(s));
                        continue;
                    }
                    std::vector<long> brute = dispersion_bruteforce(*field, a, b, gen, k_max);
                    if (brute.size() == static_cast<std::size_t>(k_max + 1))
                        ++rep.passes;
                    else
                        record_failure(rep, "infinite spread mismatch at seed " + std::to_string(s));
                    continue;
                }
                if (!sp.finite_set.empty()) k_max += sp.finite_set.back();
                std::vector<long> brute = dispersion_bruteforce(*field, a, b, gen, k_max);
                if (brute == sp.finite_set)
                    ++rep.passes;
                else
                    record_failure(rep, "spread mismatch at seed " + std::to_string(s));
            } catch (const std::exception& e) {
                record_failure(rep, "seed " + std::to_string(s) + ": " + e.what());
            }
        }
    }
    return rep;
}

SuiteReport run_ledger_suite(std::size_t cases, std::uint64_t seed) {
    SuiteReport rep;
    rep.name = "transform-ledger";
    rep.cases = cases;
    for (std::size_t c = 0; c < cases; ++c) {
        std::uint64_t s = seed + 104729 * c;
        OracleRng rng(s);
        FieldSpecPtr field = oracle_field_case(c);
        const VarSetPtr& vars = field->vars();
        try {
            std::size_t m = static_cast<std::size_t>(rng.int_in(1, 3));
            std::size_t n = static_cast<std::size_t>(rng.int_in(1, 3));
            long deg = rng.int_in(0, 2);
            OreMatrix A(field, m, n);
            for (long k = 0; k <= deg; ++k)
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        if (rng.int_in(0, 2) != 0)
                            A.set_entry(k, i, j, RatFunc(rng.random_poly(*field, 2, 2, false)));
            if (A.is_zero()) A.set_entry(0, 0, 0, RatFunc::one(vars));

            RowReduction rr = row_reduce(A, +1);
            bool ok = ore_mul(rr.P.fwd, A) == rr.R;
            ok = ok && ore_mul(rr.P.fwd, rr.P.inv) == OreMatrix::identity(field, m);
            ok = ok && ore_mul(rr.P.inv, rr.P.fwd) == OreMatrix::identity(field, m);
            if (rr.rank > 0) {
                RatMat cert = lrcm(rr.R, +1);
                RatMat sub(rr.rank, n, RatFunc::zero(vars));
                for (std::size_t i = 0; i < rr.rank; ++i)
                    for (std::size_t j = 0; j < n; ++j) sub(i, j) = cert(i, j);
                ok = ok && left_kernel(sub).empty();
            }

            ColReduction crd = column_reduce(A, +1);
            ok = ok && ore_mul(A, crd.Q.fwd) == crd.R;
            ok = ok && ore_mul(crd.Q.fwd, crd.Q.inv) == OreMatrix::identity(field, n);
            ok = ok && crd.rank == rr.rank;

            if (ok)
                ++rep.passes;
            else
                record_failure(rep, "ledger invariant failed at seed " + std::to_string(s));
        } catch (const std::exception& e) {
            record_failure(rep, "seed " + std::to_string(s) + ": " + e.what());
        }
    }
    return rep;
}

SuiteReport run_equivalence_suite(std::size_t cases, std::uint64_t seed) {
    SuiteReport rep;
    rep.name = "related-system-equivalence";
    rep.cases = cases;
    for (std::size_t c = 0; c < cases; ++c) {
        std::uint64_t s = seed + 15485863 * c;
        OracleRng rng(s);
        FieldSpecPtr field = oracle_field_case(c);
        const VarSetPtr& vars = field->vars();
        try {
            std::size_t n = static_cast<std::size_t>(rng.int_in(1, 2));
            long order = rng.int_in(1, 2);
            MultiPoly den = rng.planted_denominator(*field, 3);
            std::vector<std::vector<RatFunc>> planted{random_planted_vector(rng, *field, n, den)};
            PlantedInstance inst = plant_system(field, n, order, planted, s);

            // Pad with a redundant row (sum of the rows) and a dead column to
            // exercise nontrivial P and Q.
            LinearSystem padded{OreMatrix::zero(field, n + 1, n + 1), {}};
            for (long k = 0; !inst.system.op.is_zero() && k <= inst.system.op.hi(); ++k)
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) {
                        const RatFunc& e = inst.system.op.entry(k, i, j);
                        if (!e.is_zero()) {
                            padded.op.set_entry(k, i, j, e);
                            RatFunc acc = padded.op.entry(k, n, j) + e;
                            padded.op.set_entry(k, n, j, acc);
                        }
                    }
            padded.rhs.assign(n + 1, MultiPoly::zero(vars));

            RegulariseResult r = regularise(padded);
            if (!r.solvable) {
                record_failure(rep, "padded system unsolvable at seed " + std::to_string(s));
                continue;
            }
            const RegularisedSystem& reg = *r.system;
            bool ok = true;

            for (const auto& y : inst.planted) {
                std::vector<RatFunc> y_padded = y;
                y_padded.push_back(RatFunc::zero(vars));  // the dead column variable
                std::vector<RatFunc> mapped = ore_apply(reg.Q_total.inv, y_padded);
                std::vector<RatFunc> head_part(mapped.begin(),
                                               mapped.begin() + static_cast<long>(reg.head.size()));
                ok = ok && verify_solution(reg.head, head_part);
                ok = ok && verify_solution(reg.tail, head_part);

                // Back: pick free variables 0, map through Q, check original.
                std::vector<RatFunc> lifted(n + 1, RatFunc::zero(vars));
                for (std::size_t i = 0; i < head_part.size(); ++i) lifted[i] = head_part[i];
                std::vector<RatFunc> back = ore_apply(reg.Q_total.fwd, lifted);
                ok = ok && verify_solution(padded, back);
            }
            ok = ok && ore_mul(reg.tail_transform.fwd, reg.tail_transform.inv) ==
                           OreMatrix::identity(field, reg.head.size());
            ok = ok && ore_mul(reg.tail_transform.fwd, reg.head.op) == reg.tail.op;

            if (ok)
                ++rep.passes;
            else
                record_failure(rep, "equivalence failed at seed " + std::to_string(s));
        } catch (const std::exception& e) {
            record_failure(rep, "seed " + std::to_string(s) + ": " + e.what());
        }
    }
    return rep;
}

}  // namespace oresolve
