#include <doctest.h>

#include "oresolve/io.hpp"
#include "helpers.hpp"

using namespace oresolve;
using test_helpers::P;

TEST_CASE("same seed reproduces the same instance") {
    auto f = FieldSpec::rational("t");
    auto vs = f->vars();
    MultiPoly den = P(vs, "t*(t + 3)");
    std::vector<std::vector<RatFunc>> planted{
        {RatFunc(P(vs, "1"), den), RatFunc(P(vs, "t - 1"), den)}};
    PlantedInstance a = plant_system(f, 2, 2, planted, 1234);
    PlantedInstance b = plant_system(f, 2, 2, planted, 1234);
    CHECK(to_string(a.system) == to_string(b.system));
    PlantedInstance c = plant_system(f, 2, 2, planted, 1235);
    CHECK(to_string(a.system) != to_string(c.system));
}

TEST_CASE("planted vectors satisfy the instance") {
    for (std::size_t c = 0; c < 4; ++c) {
        OracleRng rng(c + 1);
        FieldSpecPtr f = oracle_field_case(c);
        MultiPoly den = rng.planted_denominator(*f, 3);
        std::vector<std::vector<RatFunc>> planted{
            {RatFunc(rng.random_poly(*f, 1, 2, false), den)}};
        PlantedInstance inst = plant_system(f, 1, 2, planted, c + 1);
        for (const auto& y : inst.planted) CHECK(verify_solution(inst.system, y));
    }
}

TEST_CASE("inhomogeneous planting keeps every stored vector a solution") {
    auto f = FieldSpec::rational("t");
    auto vs = f->vars();
    MultiPoly den = P(vs, "t + 1");
    std::vector<std::vector<RatFunc>> planted{
        {RatFunc(P(vs, "1"), den), RatFunc(P(vs, "2"), den)}};
    std::vector<RatFunc> part{RatFunc(P(vs, "t"), P(vs, "1")), RatFunc(P(vs, "1"), P(vs, "1"))};
    PlantedInstance inst = plant_system(f, 2, 1, planted, 99, &part);
    bool has_rhs = false;
    for (const auto& r : inst.system.rhs) has_rhs = has_rhs || !r.is_zero();
    CHECK(has_rhs);
    CHECK(inst.planted.size() == 2);
    for (const auto& y : inst.planted) CHECK(verify_solution(inst.system, y));
}

TEST_CASE("check_divisibility spots corrupted bounds") {
    auto f = FieldSpec::rational("t");
    auto vs = f->vars();
    MultiPoly den = P(vs, "t*(t + 1)");
    std::vector<std::vector<RatFunc>> planted{
        {RatFunc(P(vs, "1"), den), RatFunc(P(vs, "t - 2"), den)}};
    PlantedInstance inst = plant_system(f, 2, 1, planted, 7);
    DenBound good = denbound_multivariate(inst.system);
    CHECK(check_divisibility(*f, good, inst));
    DenBound corrupted = good;
    corrupted.d = divide_exact(good.d, P(vs, "t"));  // drop one factor
    CHECK(!check_divisibility(*f, corrupted, inst));
    DenBound trivial{P(vs, "1"), {}, true};
    PlantedInstance poly_inst = plant_system(
        f, 1, 1, {{RatFunc(P(vs, "t"), P(vs, "1"))}}, 8);
    CHECK(check_divisibility(*f, trivial, poly_inst));
}

TEST_CASE("overfull planting is rejected") {
    auto f = FieldSpec::rational("t");
    auto vs = f->vars();
    std::vector<std::vector<RatFunc>> planted{
        {RatFunc(P(vs, "1"), P(vs, "1"))},
        {RatFunc(P(vs, "2"), P(vs, "1"))}};
    CHECK_THROWS_AS(plant_system(f, 1, 1, planted, 11), ConstructionError);
}
