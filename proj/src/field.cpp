#include "oresolve/field.hpp"

#include <algorithm>

namespace oresolve {

FieldSpec::FieldSpec(std::vector<std::string> params, std::vector<Generator> generators)
    : params_(std::move(params)), gens_(std::move(generators)) {
    std::vector<std::string> gen_names;
    gen_names.reserve(gens_.size());
    std::vector<bool> param_used(params_.size(), false);
    std::size_t sigma_count = 0;
    for (const auto& g : gens_) {
        gen_names.push_back(g.name);
        if (g.kind == GenKind::Pi) {
            if (g.param_index >= params_.size())
                throw ConstructionError("Pi generator refers to missing parameter");
            if (param_used[g.param_index])
                throw ConstructionError("parameter shared by two Pi generators");
            param_used[g.param_index] = true;
        } else {
            if (g.beta == 0) throw ConstructionError("Sigma generator with beta = 0");
            ++sigma_count;
        }
    }
    if (gens_.empty()) throw ConstructionError("difference field needs at least one generator");
    if (sigma_count > 1)
        throw ConstructionError("at most one Sigma generator is supported");
    if (sigma_count == 1 && gens_.back().kind != GenKind::Sigma)
        throw ConstructionError("the Sigma generator must come last");
    vars_ = make_varset(params_, gen_names);
}

FieldSpecPtr FieldSpec::rational(const std::string& t, const Rational& beta) {
    return std::make_shared<FieldSpec>(std::vector<std::string>{},
                                       std::vector<Generator>{{t, GenKind::Sigma, 0, beta}});
}

FieldSpecPtr FieldSpec::q_rational(const std::string& q, const std::string& t) {
    return std::make_shared<FieldSpec>(std::vector<std::string>{q},
                                       std::vector<Generator>{{t, GenKind::Pi, 0, 0}});
}

FieldSpecPtr FieldSpec::multibasic(const std::vector<std::string>& qs,
                                   const std::vector<std::string>& ts) {
    if (qs.size() != ts.size())
        throw ConstructionError("multibasic field needs one parameter per generator");
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < ts.size(); ++i) gens.push_back({ts[i], GenKind::Pi, i, 0});
    return std::make_shared<FieldSpec>(qs, gens);
}

FieldSpecPtr FieldSpec::mixed(const std::vector<std::string>& qs,
                              const std::vector<std::string>& ts, const std::string& t,
                              const Rational& beta) {
    if (qs.size() != ts.size())
        throw ConstructionError("mixed field needs one parameter per Pi generator");
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < ts.size(); ++i) gens.push_back({ts[i], GenKind::Pi, i, 0});
    gens.push_back({t, GenKind::Sigma, 0, beta});
    return std::make_shared<FieldSpec>(qs, gens);
}

std::string FieldSpec::header() const {
    const bool has_sigma = gens_.back().kind == GenKind::Sigma;
    std::string kind;
    if (params_.empty())
        kind = "rational";
    else if (!has_sigma)
        kind = gens_.size() == 1 ? "qrational" : "multibasic";
    else
        kind = "mixed";
    std::string s = kind + "(";
    for (std::size_t i = 0; i < params_.size(); ++i) {
        if (i) s += ",";
        s += params_[i];
    }
    if (!params_.empty()) s += "; ";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ",";
        s += gens_[i].name;
    }
    return s + ")";
}

MultiPoly apply_sigma(const FieldSpec& field, const MultiPoly& p, long k) {
    if (k == 0 || p.is_zero()) return p;
    const VarSetPtr& vs = p.vars();
    if (!field.vars()->same_prefix_of(*vs))
        throw VariableError("apply_sigma: polynomial over incompatible variables");

    // Pi generators: move each term's q-exponent by k * (generator degree).
    // Sigma generators: substitute t -> t + k*beta via binomial expansion,
    // with the powers of (t + k*beta) cached per needed degree.
    std::vector<Rational> sigma_shift(field.generator_count(), Rational(0));
    MultiPoly out(vs);
    for (const auto& [e, c] : p.terms()) {
        Exponents e2(e);
        Rational coef = c;
        MultiPoly term = MultiPoly(vs);
        // Start from the Pi-adjusted monomial, then expand Sigma powers.
        std::vector<std::pair<std::size_t, int>> sigma_pows;
        for (std::size_t g = 0; g < field.generator_count(); ++g) {
            const Generator& gen = field.generator(g);
            const std::size_t var = field.gen_var(g);
            if (e[var] == 0) continue;
            if (gen.kind == GenKind::Pi) {
                e2[field.param_var(gen.param_index)] += static_cast<int>(k) * e[var];
            } else {
                sigma_pows.emplace_back(var, e[var]);
                e2[var] = 0;
            }
        }
        term = MultiPoly::monomial(vs, e2, coef);
        for (const auto& [var, deg] : sigma_pows) {
            const Generator& gen = field.generator(var - field.parameter_count());
            MultiPoly shifted = MultiPoly::variable(vs, var) +
                                MultiPoly::constant(vs, gen.beta * Rational(static_cast<long>(k)));
            term = term * shifted.pow(static_cast<unsigned long>(deg));
        }
        out += term;
    }
    return out;
}

RatFunc apply_sigma(const FieldSpec& field, const RatFunc& r, long k) {
    if (k == 0) return r;
    return RatFunc(apply_sigma(field, r.num(), k), apply_sigma(field, r.den(), k));
}

std::vector<RatFunc> apply_sigma(const FieldSpec& field, const std::vector<RatFunc>& v, long k) {
    std::vector<RatFunc> out;
    out.reserve(v.size());
    for (const auto& r : v) out.push_back(apply_sigma(field, r, k));
    return out;
}

PeriodicSplit split_periodic(const FieldSpec& field, const MultiPoly& p, std::size_t gen) {
    if (p.is_zero()) throw ZeroInputError("split_periodic of zero polynomial");
    const VarSetPtr& vs = p.vars();
    if (field.classify(gen) == GenKind::Sigma)
        return {MultiPoly::constant(vs, 1), p};
    const std::size_t var = field.gen_var(gen);
    const int v = p.valuation(var);
    if (v == 0) return {MultiPoly::constant(vs, 1), p};
    return {MultiPoly::variable(vs, var, v), p.shift_exponent(var, -v)};
}

MultiPoly aperiodic_part_all(const FieldSpec& field, const MultiPoly& p) {
    if (p.is_zero()) throw ZeroInputError("aperiodic part of zero polynomial");
    MultiPoly out = p;
    for (std::size_t g = 0; g < field.generator_count(); ++g) {
        if (field.classify(g) != GenKind::Pi) continue;
        const std::size_t var = field.gen_var(g);
        const int v = out.valuation(var);
        if (v > 0) out = out.shift_exponent(var, -v);
    }
    return out;
}

}  // namespace oresolve
