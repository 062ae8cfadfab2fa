#include <doctest.h>

#include "oresolve/io.hpp"
#include "helpers.hpp"

using namespace oresolve;
using test_helpers::P;
using test_helpers::R;

namespace {

LinearSystem small_system(const FieldSpecPtr& f, std::vector<std::vector<const char*>> a1,
                          std::vector<std::vector<const char*>> a0, std::vector<const char*> b) {
    const std::size_t n = a1.size();
    OreMatrix op(f, n, a1[0].size());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < a1[i].size(); ++j) {
            RatFunc v1 = R(f->vars(), a1[i][j]);
            RatFunc v0 = R(f->vars(), a0[i][j]);
            if (!v1.is_zero()) op.set_entry(1, i, j, v1);
            if (!v0.is_zero()) op.set_entry(0, i, j, v0);
        }
    std::vector<MultiPoly> rhs;
    for (const char* text : b) rhs.push_back(P(f->vars(), text));
    return LinearSystem{op, rhs};
}

}  // namespace

TEST_CASE("head and tail regularity tests") {
    auto f = FieldSpec::rational("t");
    LinearSystem sys = small_system(f, {{"1", "0"}, {"0", "t"}}, {{"t", "1"}, {"0", "1"}},
                                    {"0", "0"});
    CHECK(is_head_regular(sys));
    CHECK(is_tail_regular(sys));
    LinearSystem bad_tail = small_system(f, {{"1", "0"}, {"0", "1"}}, {{"1", "1"}, {"1", "1"}},
                                         {"0", "0"});
    CHECK(is_head_regular(bad_tail));
    CHECK(!is_tail_regular(bad_tail));
    LinearSystem rect{OreMatrix::zero(f, 1, 2), {MultiPoly::zero(f->vars())}};
    CHECK_THROWS_AS(is_head_regular(rect), ShapeError);
}

TEST_CASE("fully regular input is a fixed point") {
    auto f = FieldSpec::rational("t");
    LinearSystem sys = small_system(f, {{"1", "0"}, {"0", "t"}}, {{"t", "1"}, {"0", "1"}},
                                    {"1", "t"});
    RegulariseResult r = regularise(sys);
    REQUIRE(r.solvable);
    const RegularisedSystem& reg = *r.system;
    CHECK(reg.compat.empty());
    CHECK(reg.free_vars.empty());
    CHECK(reg.P_total.fwd == OreMatrix::identity(f, 2));
    CHECK(reg.Q_total.fwd == OreMatrix::identity(f, 2));
    CHECK(reg.tail_transform.fwd == OreMatrix::identity(f, 2));
    CHECK(reg.head.op == sys.op);
    CHECK(reg.tail.op == sys.op);
}

TEST_CASE("duplicated consistent row produces a satisfied compatibility condition") {
    auto f = FieldSpec::rational("t");
    LinearSystem sys = small_system(f, {{"1"}, {"1"}}, {{"t"}, {"t"}}, {"t", "t"});
    RegulariseResult r = regularise(sys);
    REQUIRE(r.solvable);
    CHECK(r.system->head.size() == 1);
    REQUIRE(r.system->compat.size() == 1);
    CHECK(r.system->compat[0].is_zero());
}

TEST_CASE("duplicated inconsistent row is unsolvable with a witness") {
    auto f = FieldSpec::rational("t");
    LinearSystem sys = small_system(f, {{"1"}, {"1"}}, {{"t"}, {"t"}}, {"t", "t + 1"});
    RegulariseResult r = regularise(sys);
    CHECK(!r.solvable);
    REQUIRE(r.compat.size() == 1);
    CHECK(!r.compat[0].is_zero());
}

TEST_CASE("regularised invariants on planted systems") {
    SuiteReport rep = run_equivalence_suite(8, 314159);
    for (const auto& fmsg : rep.failures) MESSAGE(fmsg);
    CHECK(rep.passes == rep.cases);
}

TEST_CASE("head and tail determinant certificates hold on random solvable systems") {
    for (std::size_t c = 0; c < 8; ++c) {
        OracleRng rng(c + 900);
        FieldSpecPtr f = oracle_field_case(c);
        MultiPoly den = rng.planted_denominator(*f, 2);
        std::vector<std::vector<RatFunc>> planted{
            {RatFunc(rng.random_poly(*f, 1, 2, false), den),
             RatFunc(rng.random_poly(*f, 1, 2, false), den)}};
        PlantedInstance inst = plant_system(f, 2, 2, planted, c + 900);
        RegulariseResult r = regularise(inst.system);
        REQUIRE(r.solvable);
        CHECK(is_head_regular(r.system->head));
        CHECK(is_tail_regular(r.system->tail));
        CHECK(ore_mul(r.system->tail_transform.fwd, r.system->head.op) == r.system->tail.op);
    }
}
