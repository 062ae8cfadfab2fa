#include <doctest.h>

#include <random>

#include "oresolve/io.hpp"
#include "helpers.hpp"

using namespace oresolve;
using test_helpers::P;

namespace {

VarSetPtr uni() { return make_varset({}, {"t"}); }
VarSetPtr with_k() { return make_varset({"k"}, {"t"}); }

/// Sylvester-determinant resultant, the independent route for the PRS one.
MultiPoly sylvester_resultant(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
    const VarSetPtr& vs = a.vars();
    int da = a.degree(var), db = b.degree(var);
    REQUIRE(da >= 0);
    REQUIRE(db >= 0);
    if (da == 0 && db == 0) return MultiPoly::constant(vs, 1);
    if (da == 0) return a.pow(static_cast<unsigned long>(db));
    if (db == 0) return b.pow(static_cast<unsigned long>(da));
    std::size_t n = static_cast<std::size_t>(da + db);
    PolyMat S(n, n, MultiPoly(vs));
    for (int r = 0; r < db; ++r)
        for (int c = 0; c <= da; ++c) S(r, r + c) = a.coeff_of(var, da - c);
    for (int r = 0; r < da; ++r)
        for (int c = 0; c <= db; ++c) S(db + r, r + c) = b.coeff_of(var, db - c);
    return det_bareiss(S);
}

}  // namespace

TEST_CASE("gcd examples") {
    auto vs = uni();
    CHECK(poly_gcd(P(vs, "t^2 - 1"), P(vs, "t - 1"), 0) == P(vs, "t - 1"));
    // factor-multiset intersection, checked against brute-force trial division
    MultiPoly a = P(vs, "t*(t^2 - t + 2)*(t + 1)");
    MultiPoly b = P(vs, "t^2*(t + 1)*(t^2 - t + 2)*(t^2 + 3*t + 3)");
    MultiPoly expect = P(vs, "t*(t + 1)*(t^2 - t + 2)");
    MultiPoly g = poly_gcd(a, b, 0);
    CHECK(assoc_equal(g, expect));
    CHECK(divides(g, a));
    CHECK(divides(g, b));
    // gcd with zero normalizes the other argument
    MultiPoly p = P(vs, "3*t^2 + 3");
    CHECK(poly_gcd(MultiPoly::zero(vs), p, 0) == P(vs, "t^2 + 1"));
}

TEST_CASE("gcd multiplicativity property") {
    std::mt19937_64 rng(7);
    auto field = FieldSpec::rational("t");
    auto vs = field->vars();
    for (int i = 0; i < 40; ++i) {
        MultiPoly a = test_helpers::random_poly(rng, *field, 3, 3);
        MultiPoly b = test_helpers::random_poly(rng, *field, 3, 3);
        MultiPoly c = test_helpers::random_poly(rng, *field, 2, 2);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        MultiPoly lhs = poly_gcd(a * c, b * c, 0);
        MultiPoly rhs = normalize_assoc(c * poly_gcd(a, b, 0));
        CHECK(assoc_equal(lhs, rhs));
    }
}

TEST_CASE("resultant examples") {
    auto vs = with_k();
    std::size_t t = 1;
    // Sylvester convention: Res(t - c, t - d) = c - d, an associate of d - c.
    CHECK(poly_resultant(P(vs, "t - 3"), P(vs, "t - 5"), t) == P(vs, "-2"));
    CHECK(poly_resultant(P(vs, "t^2 - 1"), P(vs, "t - 2"), t) == P(vs, "3"));
    CHECK(poly_resultant(P(vs, "t - 1"), P(vs, "k + t"), t) == P(vs, "k + 1"));
    CHECK_THROWS_AS(poly_resultant(MultiPoly::zero(vs), P(vs, "t"), t), ZeroInputError);
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
    std::mt19937_64 rng(11);
    auto field = FieldSpec::mixed({"q1"}, {"t1"}, "t");
    std::size_t var = field->gen_var(1);
    for (int i = 0; i < 30; ++i) {
        MultiPoly a = test_helpers::random_poly(rng, *field, 2, 3);
        MultiPoly b = test_helpers::random_poly(rng, *field, 2, 3);
        if (a.is_zero() || b.is_zero()) continue;
        if (a.degree(var) < 1 && b.degree(var) < 1) continue;
        CHECK(poly_resultant(a, b, var) == sylvester_resultant(a, b, var));
    }
}

TEST_CASE("resultant vanishes exactly when the gcd has positive degree") {
    std::mt19937_64 rng(13);
    auto field = FieldSpec::rational("t");
    auto vs = field->vars();
    for (int i = 0; i < 40; ++i) {
        MultiPoly a = test_helpers::random_poly(rng, *field, 3, 2);
        MultiPoly b = test_helpers::random_poly(rng, *field, 3, 2);
        if (a.is_zero() || b.is_zero()) continue;
        if (a.degree(0) < 1 || b.degree(0) < 1) continue;
        bool share = i % 2 == 0;
        if (share) {
            MultiPoly f = P(vs, "t + 2");
            a = a * f;
            b = b * f;
        }
        bool res_zero = poly_resultant(a, b, 0).is_zero();
        bool gcd_pos = poly_gcd(a, b, 0).degree(0) > 0;
        CHECK(res_zero == gcd_pos);
    }
}
