#include <doctest.h>

#include "oresolve/io.hpp"
#include "helpers.hpp"

using namespace oresolve;
using test_helpers::P;
using test_helpers::R;

TEST_CASE("unimodular head and tail matrices give the trivial bound") {
    auto f = FieldSpec::rational("t");
    auto vs = f->vars();
    OreMatrix op(f, 1, 1);
    op.set_entry(1, 0, 0, R(vs, "1"));
    op.set_entry(0, 0, 0, R(vs, "2"));
    LinearSystem sys{op, {MultiPoly::zero(vs)}};
    DenBound db = denbound_multivariate(sys);
    CHECK(db.d == P(vs, "1"));
    CHECK(db.per_generator.size() == 1);
}

TEST_CASE("planted denominator divides the bound") {
    auto f = FieldSpec::rational("t");
    auto vs = f->vars();
    MultiPoly den = P(vs, "t*(t + 1)");
    std::vector<std::vector<RatFunc>> planted{
        {RatFunc(P(vs, "1"), den), RatFunc(P(vs, "t"), den)}};
    PlantedInstance inst = plant_system(f, 2, 1, planted, 5);
    DenBound db = denbound_multivariate(inst.system);
    CHECK(divides(P(vs, "t*(t+1)"), db.d));
    CHECK(check_divisibility(*f, db, inst));
}

TEST_CASE("bound is aperiodic for Pi generators") {
    auto f = FieldSpec::q_rational("q", "t");
    auto vs = f->vars();
    MultiPoly den = P(vs, "t - 1");
    std::vector<std::vector<RatFunc>> planted{{RatFunc(P(vs, "1"), den)}};
    PlantedInstance inst = plant_system(f, 1, 1, planted, 77);
    DenBound db = denbound_multivariate(inst.system);
    CHECK(db.d.valuation(f->gen_var(0)) == 0);
    CHECK(check_divisibility(*f, db, inst));
}

TEST_CASE("improved merge divides the lcm merge") {
    for (std::size_t c = 0; c < 6; ++c) {
        OracleRng rng(c + 4000);
        FieldSpecPtr f = oracle_field_case(2 + (c % 2));  // multibasic and mixed
        MultiPoly den = rng.planted_denominator(*f, 3);
        std::vector<std::vector<RatFunc>> planted{
            {RatFunc(rng.random_poly(*f, 1, 2, false), den),
             RatFunc(rng.random_poly(*f, 1, 2, false), den)}};
        PlantedInstance inst = plant_system(f, 2, 1, planted, c + 4000);
        RegulariseResult r = regularise(inst.system);
        REQUIRE(r.solvable);
        DenBound improved = denbound_all(*f, *r.system, true, c + 1);
        DenBound merged = denbound_all(*f, *r.system, false, c + 1);
        CHECK(divides(improved.d, merged.d));
        CHECK(check_divisibility(*f, improved, inst));
        CHECK(check_divisibility(*f, merged, inst));
    }
}

TEST_CASE("bound is invariant under row-wise unit rescaling") {
    auto f = FieldSpec::q_rational("q", "t");
    auto vs = f->vars();
    OracleRng rng(606);
    MultiPoly den = rng.planted_denominator(*f, 2);
    std::vector<std::vector<RatFunc>> planted{
        {RatFunc(P(vs, "1"), den), RatFunc(P(vs, "t"), den)}};
    PlantedInstance inst = plant_system(f, 2, 1, planted, 606);
    DenBound base = denbound_multivariate(inst.system);

    // Scale row 0 by the unit 3*q (parameters are units of the field).
    LinearSystem scaled = inst.system;
    OreMatrix op(f, 2, 2);
    for (long k = 0; k <= inst.system.op.hi(); ++k)
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                RatFunc e = inst.system.op.entry(k, i, j);
                if (e.is_zero()) continue;
                if (i == 0) e = e * R(vs, "3*q");
                op.set_entry(k, i, j, e);
            }
    scaled.op = op;
    scaled.rhs[0] = scaled.rhs[0] * P(vs, "3*q");
    DenBound rescaled = denbound_multivariate(scaled);
    CHECK(assoc_equal(base.d, rescaled.d));
}

TEST_CASE("complete bound guess") {
    auto f = FieldSpec::mixed({"q1"}, {"t1"}, "t");
    auto vs = f->vars();
    DenBound db{P(vs, "t - 1"), {}, true};
    CHECK(complete_bound_guess(*f, db, {2, 0}) == P(vs, "t1^2*(t - 1)"));
    CHECK(complete_bound_guess(*f, db, {0, 0}) == db.d);
    CHECK_THROWS_AS(complete_bound_guess(*f, db, {0, 1}), Error);
    CHECK_THROWS_AS(complete_bound_guess(*f, db, {1}), ShapeError);
}

TEST_CASE("soundness suite sample") {
    SuiteReport rep = run_soundness_suite(12, 8675309);
    for (const auto& fmsg : rep.failures) MESSAGE(fmsg);
    CHECK(rep.passes == rep.cases);
}
