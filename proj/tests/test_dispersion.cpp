#include <doctest.h>

#include <random>

#include "oresolve/io.hpp"
#include "helpers.hpp"

using namespace oresolve;
using test_helpers::P;

TEST_CASE("spread in the rational field") {
    auto f = FieldSpec::rational("t");
    auto vs = f->vars();
    SUBCASE("single shift overlap") {
        SpreadResult s = spread(*f, P(vs, "t + 3"), P(vs, "t"), 0);
        CHECK(!s.is_infinite);
        CHECK(s.finite_set == std::vector<long>{3});
    }
    SUBCASE("self overlap") {
        MultiPoly p = P(vs, "t*(t + 2)");
        SpreadResult s = spread(*f, p, p, 0);
        CHECK(s.finite_set == std::vector<long>{0, 2});
        CHECK(dispersion(*f, p, p, 0) == Disp::finite(2));
    }
    SUBCASE("empty spread") {
        CHECK(dispersion(*f, P(vs, "t"), P(vs, "t + 1/2"), 0) == Disp::neg_inf());
    }
}

TEST_CASE("spread in the q-rational field") {
    auto f = FieldSpec::q_rational("q", "t");
    auto vs = f->vars();
    SUBCASE("q-power overlap") {
        SpreadResult s = spread(*f, P(vs, "t - 1"), P(vs, "t - q^2"), 0);
        CHECK(s.finite_set == std::vector<long>{2});
    }
    SUBCASE("periodic pair") {
        CHECK(spread(*f, P(vs, "t^2"), P(vs, "t*(t-1)"), 0).is_infinite);
        CHECK(dispersion(*f, P(vs, "t"), P(vs, "t"), 0) == Disp::pos_inf());
    }
    SUBCASE("aperiodic parts are used when only one side has t-powers") {
        SpreadResult s = spread(*f, P(vs, "t^3*(t - 1)"), P(vs, "t - q"), 0);
        CHECK(s.finite_set == std::vector<long>{1});
    }
}

TEST_CASE("spread across generators in mixed fields") {
    auto f = FieldSpec::mixed({"q1"}, {"t1"}, "t");
    auto vs = f->vars();
    // sigma^2(t1 + t) = q1^2 t1 + t + 2
    MultiPoly a = P(vs, "q1^2*t1 + t + 2");
    MultiPoly b = P(vs, "t1 + t");
    SUBCASE("with respect to the Pi generator") {
        SpreadResult s = spread(*f, a, b, 0);
        CHECK(s.finite_set == std::vector<long>{2});
    }
    SUBCASE("with respect to the Sigma generator") {
        SpreadResult s = spread(*f, a, b, 1);
        CHECK(s.finite_set == std::vector<long>{2});
    }
}

TEST_CASE("zero inputs are rejected") {
    auto f = FieldSpec::rational("t");
    CHECK_THROWS_AS(spread(*f, MultiPoly::zero(f->vars()), P(f->vars(), "t"), 0), ZeroInputError);
}

TEST_CASE("brute force oracle") {
    auto f = FieldSpec::rational("t");
    auto vs = f->vars();
    CHECK(dispersion_bruteforce(*f, P(vs, "t + 3"), P(vs, "t"), 0, 2).empty());
    CHECK(dispersion_bruteforce(*f, P(vs, "t + 3"), P(vs, "t"), 0, 5) == std::vector<long>{3});
}

TEST_CASE("spread agrees with brute force on random instances") {
    std::mt19937_64 rng(2024);
    for (std::size_t fc = 0; fc < 4; ++fc) {
        FieldSpecPtr f = oracle_field_case(fc);
        for (int it = 0; it < 12; ++it) {
            OracleRng orng(rng());
            MultiPoly u = orng.planted_denominator(*f, 4);
            long k0 = orng.int_in(0, 4);
            MultiPoly a = apply_sigma(*f, u, k0) * orng.random_poly(*f, 1, 2, false);
            MultiPoly b = u * orng.random_poly(*f, 1, 2, false);
            std::size_t gen = static_cast<std::size_t>(orng.int_in(0, static_cast<long>(f->generator_count()) - 1));
            SpreadResult s = spread(*f, a, b, gen, rng());
            if (s.is_infinite) {
                const std::size_t var = f->gen_var(gen);
                CHECK(a.valuation(var) > 0);
                CHECK(b.valuation(var) > 0);
                continue;
            }
            long k_max = (s.finite_set.empty() ? 0 : s.finite_set.back()) + 3;
            CHECK(dispersion_bruteforce(*f, a, b, gen, k_max) == s.finite_set);
        }
    }
}

TEST_CASE("spread is monotone under extra factors") {
    std::mt19937_64 rng(99);
    auto f = FieldSpec::rational("t");
    for (int it = 0; it < 15; ++it) {
        OracleRng orng(rng());
        MultiPoly a = orng.random_poly(*f, 2, 2, false);
        MultiPoly b = orng.random_poly(*f, 2, 2, false);
        MultiPoly c = orng.random_poly(*f, 2, 2, false);
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        SpreadResult small = spread(*f, c, b, 0, it + 1);
        SpreadResult big = spread(*f, a * c, b, 0, it + 1);
        for (long k : small.finite_set)
            CHECK(std::find(big.finite_set.begin(), big.finite_set.end(), k) != big.finite_set.end());
    }
}
