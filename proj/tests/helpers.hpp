#ifndef ORESOLVE_TEST_HELPERS_HPP
#define ORESOLVE_TEST_HELPERS_HPP

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oresolve/io.hpp"
#include "oresolve/linalg.hpp"
#include "oresolve/oracle.hpp"

namespace test_helpers {

using namespace oresolve;

inline std::string read_data_file(const std::string& name) {
    std::string path = std::string(ORESOLVE_DATA_DIR) + "/" + name;
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline MultiPoly P(const VarSetPtr& vars, const std::string& text) {
    return parse_poly(vars, text);
}

inline RatFunc R(const VarSetPtr& vars, const std::string& text) {
    return parse_ratfunc(vars, text);
}

/// Random dense-ish polynomial for property tests.
inline MultiPoly random_poly(std::mt19937_64& rng, const FieldSpec& field, int max_deg,
                             int terms) {
    OracleRng orng(rng());
    return orng.random_poly(field, max_deg, terms);
}

/// Membership of `target` in the constant-field span of `vectors`, decided
/// exactly by coefficient comparison over the generator monomials.
inline bool in_span(const FieldSpec& field, const std::vector<std::vector<RatFunc>>& vectors,
                    const std::vector<RatFunc>& target) {
    const VarSetPtr& vars = field.vars();
    if (vectors.empty()) {
        for (const auto& e : target)
            if (!e.is_zero()) return false;
        return true;
    }
    const std::size_t n = target.size();
    MultiPoly D = MultiPoly::constant(vars, 1);
    for (const auto& v : vectors)
        for (const auto& e : v) D = lcm_full(D, e.den());
    for (const auto& e : target) D = lcm_full(D, e.den());

    // One equation per (component, generator monomial).
    std::map<std::pair<std::size_t, Exponents>, std::vector<MultiPoly>> rows;
    std::map<std::pair<std::size_t, Exponents>, MultiPoly> rhs;
    auto row_of = [&](std::size_t j, const Exponents& key) -> std::vector<MultiPoly>& {
        auto it = rows.find({j, key});
        if (it == rows.end())
            it = rows.emplace(std::make_pair(j, key),
                              std::vector<MultiPoly>(vectors.size(), MultiPoly(vars)))
                     .first;
        return it->second;
    };
    for (std::size_t s = 0; s < vectors.size(); ++s)
        for (std::size_t j = 0; j < n; ++j) {
            RatFunc cleared = vectors[s][j] * RatFunc(D);
            REQUIRE(cleared.is_polynomial());
            for (auto& [key, coeff] : split_by_generator_monomials(cleared.num()))
                row_of(j, key)[s] += coeff;
        }
    for (std::size_t j = 0; j < n; ++j) {
        RatFunc cleared = target[j] * RatFunc(D);
        REQUIRE(cleared.is_polynomial());
        for (auto& [key, coeff] : split_by_generator_monomials(cleared.num())) {
            row_of(j, key);
            auto it = rhs.find({j, key});
            if (it == rhs.end())
                rhs.emplace(std::make_pair(j, key), coeff);
            else
                it->second += coeff;
        }
    }

    RatMat M(rows.size(), vectors.size(), RatFunc::zero(vars));
    std::vector<RatFunc> b(rows.size(), RatFunc::zero(vars));
    std::size_t ri = 0;
    for (auto& [key, coeffs] : rows) {
        for (std::size_t s = 0; s < vectors.size(); ++s)
            if (!coeffs[s].is_zero()) M(ri, s) = laurent_to_ratfunc(coeffs[s]);
        auto it = rhs.find(key);
        if (it != rhs.end()) b[ri] = laurent_to_ratfunc(it->second);
        ++ri;
    }
    return ff_solve(M, b).consistent;
}

}  // namespace test_helpers

#endif
