#include <doctest.h>

#include <random>

#include "oresolve/io.hpp"
#include "helpers.hpp"

using namespace oresolve;
using test_helpers::R;

namespace {

OreMatrix from_entries(const FieldSpecPtr& f, std::size_t rows, std::size_t cols,
                       std::initializer_list<std::tuple<long, std::size_t, std::size_t, const char*>> entries) {
    OreMatrix op(f, rows, cols);
    for (const auto& [k, i, j, text] : entries) op.set_entry(k, i, j, R(f->vars(), text));
    return op;
}

}  // namespace

TEST_CASE("lrcm") {
    auto f = FieldSpec::rational("t");
    auto vs = f->vars();
    SUBCASE("equal row degrees give the plain leading matrix") {
        OreMatrix A = from_entries(f, 2, 2, {{1, 0, 0, "t"}, {1, 1, 1, "2"}, {0, 0, 1, "1"}});
        RatMat L = lrcm(A);
        CHECK(L(0, 0) == R(vs, "t"));
        CHECK(L(1, 1) == R(vs, "2"));
        CHECK(L(0, 1).is_zero());
    }
    SUBCASE("lower rows are shifted up") {
        // A = [[sigma, 1], [1, 1]] -> rows [[1, 0], [1, 1]]
        OreMatrix A = from_entries(f, 2, 2, {{1, 0, 0, "1"}, {0, 0, 1, "1"}, {0, 1, 0, "1"}, {0, 1, 1, "1"}});
        RatMat L = lrcm(A);
        CHECK(L(0, 0) == R(vs, "1"));
        CHECK(L(0, 1).is_zero());
        CHECK(L(1, 0) == R(vs, "1"));
        CHECK(L(1, 1) == R(vs, "1"));
    }
    SUBCASE("shifts transform the coefficients") {
        // rows: [t*sigma], [t] -> lrcm rows [t], [t+1] (second row shifted by sigma)
        OreMatrix A = from_entries(f, 2, 1, {{1, 0, 0, "t"}, {0, 1, 0, "t"}});
        RatMat L = lrcm(A);
        CHECK(L(0, 0) == R(vs, "t"));
        CHECK(L(1, 0) == R(vs, "t + 1"));
    }
}

TEST_CASE("row_reduce examples") {
    auto f = FieldSpec::rational("t");
    SUBCASE("row reduced input is a fixed point") {
        OreMatrix A = from_entries(f, 2, 2, {{1, 0, 0, "1"}, {0, 1, 1, "1"}});
        RowReduction rr = row_reduce(A);
        CHECK(rr.rank == 2);
        CHECK(rr.R == A);
        CHECK(rr.P.fwd == OreMatrix::identity(f, 2));
    }
    SUBCASE("2x1 column drops to rank 1") {
        OreMatrix A = from_entries(f, 2, 1, {{1, 0, 0, "1"}, {0, 1, 0, "1"}});
        RowReduction rr = row_reduce(A);
        CHECK(rr.rank == 1);
        CHECK(rr.zero_rows == std::vector<std::size_t>{1});
        CHECK(ore_mul(rr.P.fwd, A) == rr.R);
        CHECK(ore_mul(rr.P.fwd, rr.P.inv) == OreMatrix::identity(f, 2));
    }
    SUBCASE("duplicated rows") {
        OreMatrix A = from_entries(f, 2, 1, {{1, 0, 0, "1"}, {0, 0, 0, "1"}, {1, 1, 0, "1"}, {0, 1, 0, "1"}});
        RowReduction rr = row_reduce(A);
        CHECK(rr.rank == 1);
        CHECK(ore_mul(rr.P.fwd, A) == rr.R);
    }
}

TEST_CASE("column_reduce examples") {
    auto f = FieldSpec::rational("t");
    SUBCASE("column reduced input") {
        OreMatrix A = from_entries(f, 2, 2, {{1, 0, 0, "1"}, {0, 1, 1, "t"}});
        ColReduction cr = column_reduce(A);
        CHECK(cr.rank == 2);
        CHECK(cr.Q.fwd == OreMatrix::identity(f, 2));
    }
    SUBCASE("zero column moves right") {
        OreMatrix A = from_entries(f, 2, 2, {{0, 0, 1, "1"}, {1, 1, 1, "t"}});
        ColReduction cr = column_reduce(A);
        CHECK(cr.rank == 1);
        CHECK(cr.zero_cols == std::vector<std::size_t>{1});
        CHECK(ore_mul(A, cr.Q.fwd) == cr.R);
    }
}

TEST_CASE("reduction ledger on random operators") {
    SuiteReport rep = run_ledger_suite(16, 20260811);
    for (const auto& fmsg : rep.failures) MESSAGE(fmsg);
    CHECK(rep.passes == rep.cases);
}

TEST_CASE("row reduction works toward sigma^{-1} as well") {
    std::mt19937_64 rng(3);
    auto f = FieldSpec::rational("t");
    OracleRng orng(8);
    OreMatrix A(f, 2, 2);
    for (long k = -2; k <= 0; ++k)
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                if (orng.int_in(0, 1) == 0)
                    A.set_entry(k, i, j, RatFunc(orng.random_poly(*f, 2, 2, false)));
    if (A.is_zero()) A.set_entry(0, 0, 0, RatFunc::one(f->vars()));
    RowReduction rr = row_reduce(A, -1);
    CHECK(ore_mul(rr.P.fwd, A) == rr.R);
    CHECK(ore_mul(rr.P.fwd, rr.P.inv) == OreMatrix::identity(f, 2));
    if (rr.rank > 0) {
        RatMat cert = lrcm(rr.R, -1);
        RatMat sub(rr.rank, 2, RatFunc::zero(f->vars()));
        for (std::size_t i = 0; i < rr.rank; ++i)
            for (std::size_t j = 0; j < 2; ++j) sub(i, j) = cert(i, j);
        CHECK(left_kernel(sub).empty());
    }
}
