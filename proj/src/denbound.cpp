#include "oresolve/denbound.hpp"

namespace oresolve {

namespace {

/// Common denominators of the inverse head leading and tail trailing
/// matrices.
struct Witnesses {
    MultiPoly head_den;
    MultiPoly tail_den;
};

Witnesses inverse_denominators(const RegularisedSystem& reg) {
    PolyMat lead = poly_coeff(reg.head, reg.head_order);
    PolyMat trail = poly_coeff(reg.tail, 0);
    return {matrix_inverse_denominator(lead).denominator,
            matrix_inverse_denominator(trail).denominator};
}

/// gcd of the two shift products of the theorem, over the field coefficients.
MultiPoly bound_from(const FieldSpec& field, const MultiPoly& m_ap, const MultiPoly& p_ap,
                     long ell, long D) {
    const VarSetPtr& vars = field.vars();
    MultiPoly left = MultiPoly::constant(vars, 1);
    MultiPoly right = MultiPoly::constant(vars, 1);
    for (long j = 0; j <= D; ++j) {
        left = left * apply_sigma(field, m_ap, -ell - j);
        right = right * apply_sigma(field, p_ap, j);
    }
    MultiPoly g = gcd_full(left, right);
    return normalize_assoc(g);
}

}  // namespace

DenBound denbound_single(const FieldSpec& field, const RegularisedSystem& reg, std::size_t gen,
                         std::uint64_t seed) {
    Witnesses w = inverse_denominators(reg);
    const long ell = reg.head_order;
    MultiPoly m_ap = split_periodic(field, w.head_den, gen).aperiodic;
    MultiPoly p_ap = split_periodic(field, w.tail_den, gen).aperiodic;
    Disp D = dispersion(field, apply_sigma(field, m_ap, -ell), p_ap, gen, seed);
    if (D.kind == Disp::PosInf) throw Error("denbound: infinite dispersion on aperiodic parts");

    DenBound out{MultiPoly::constant(field.vars(), 1), {}, true};
    out.per_generator.push_back({gen, m_ap, p_ap, D});
    if (D.kind == Disp::NegInf) {
        out.d = MultiPoly::constant(field.vars(), 1);
        return out;
    }
    const std::size_t var = field.gen_var(gen);
    MultiPoly left = MultiPoly::constant(field.vars(), 1);
    MultiPoly right = MultiPoly::constant(field.vars(), 1);
    for (long j = 0; j <= D.value; ++j) {
        left = left * apply_sigma(field, m_ap, -ell - j);
        right = right * apply_sigma(field, p_ap, j);
    }
    // Theorem-level gcd lives in F[t] for the designated generator: content
    // in the other variables drops out.
    out.d = poly_gcd(left, right, var);
    return out;
}

DenBound denbound_all(const FieldSpec& field, const RegularisedSystem& reg, bool improved,
                      std::uint64_t seed) {
    if (field.generator_count() == 1) {
        DenBound one = denbound_single(field, reg, 0, seed);
        one.improved = improved;
        return one;
    }

    Witnesses w = inverse_denominators(reg);
    const long ell = reg.head_order;
    DenBound out{MultiPoly::constant(field.vars(), 1), {}, improved};

    if (improved) {
        MultiPoly m_ap = aperiodic_part_all(field, w.head_den);
        MultiPoly p_ap = aperiodic_part_all(field, w.tail_den);
        Disp D = Disp::neg_inf();
        for (std::size_t g = 0; g < field.generator_count(); ++g) {
            Disp Dg = dispersion(field, apply_sigma(field, m_ap, -ell), p_ap, g, seed + g);
            if (Dg.kind == Disp::PosInf) throw Error("denbound: infinite dispersion on aperiodic parts");
            out.per_generator.push_back({g, m_ap, p_ap, Dg});
            if (D < Dg) D = Dg;
        }
        if (D.kind == Disp::NegInf) {
            out.d = MultiPoly::constant(field.vars(), 1);
            return out;
        }
        out.d = aperiodic_part_all(field, bound_from(field, m_ap, p_ap, ell, D.value));
        out.d = normalize_assoc(out.d);
        return out;
    }

    // lcm merge of the per-generator bounds.
    MultiPoly merged = MultiPoly::constant(field.vars(), 1);
    for (std::size_t g = 0; g < field.generator_count(); ++g) {
        DenBound single = denbound_single(field, reg, g, seed + g);
        out.per_generator.push_back(single.per_generator.front());
        merged = lcm_full(merged, single.d);
    }
    out.d = normalize_assoc(aperiodic_part_all(field, merged));
    return out;
}

DenBound denbound_multivariate(const LinearSystem& system, bool improved, std::uint64_t seed) {
    RegulariseResult reg = regularise(system);
    if (!reg.solvable) throw Error("denbound: system is unsolvable (nonzero compatibility condition)");
    return denbound_all(*system.op.field(), *reg.system, improved, seed);
}

MultiPoly complete_bound_guess(const FieldSpec& field, const DenBound& db,
                               const std::vector<long>& powers) {
    if (powers.size() != field.generator_count())
        throw ShapeError("complete_bound_guess: one power per generator expected");
    MultiPoly out = db.d;
    for (std::size_t g = 0; g < field.generator_count(); ++g) {
        if (powers[g] < 0) throw Error("complete_bound_guess: negative power");
        if (powers[g] == 0) continue;
        if (field.classify(g) == GenKind::Sigma)
            throw Error("complete_bound_guess: nonzero power on a Sigma generator");
        out = out * MultiPoly::variable(field.vars(), field.gen_var(g), static_cast<int>(powers[g]));
    }
    return out;
}

}  // namespace oresolve
