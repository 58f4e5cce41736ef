#include "lrvan/simplex.hpp"

#include "doctest.h"
#include "fourier_motzkin.hpp"
#include "lrvan/polytope.hpp"

#include <random>
#include <vector>

using namespace lrvan;

namespace {

ConstraintSystem make_system(int num_vars,
                             std::vector<std::pair<std::vector<int>, long long>> eqs,
                             std::vector<std::pair<std::vector<int>, long long>> ineqs) {
    ConstraintSystem sys;
    sys.num_vars = num_vars;
    sys.shape_rows = num_vars;  // irrelevant to feasibility, keep indices legal
    sys.labels = 1;
    for (auto& [coeffs, rhs] : eqs)
        sys.equalities.push_back({ConstraintTag::B, 0, 0, coeffs, rhs});
    for (auto& [coeffs, rhs] : ineqs)
        sys.inequalities.push_back({ConstraintTag::D, 0, 0, coeffs, rhs});
    return sys;
}

}  // namespace

TEST_CASE("hand-sized systems") {
    SUBCASE("empty system") {
        CHECK(feasible(make_system(0, {}, {})).feasible);
        CHECK(feasible(make_system(2, {}, {})).feasible);
    }
    SUBCASE("contradictory bounds") {
        // -x <= 0 and x <= -1
        auto sys = make_system(1, {}, {{{-1}, 0}, {{1}, -1}});
        CHECK_FALSE(feasible(sys).feasible);
    }
    SUBCASE("pinned variable") {
        auto sys = make_system(1, {{{1}, 3}}, {});
        FeasibilityResult r = feasible(sys);
        REQUIRE(r.feasible);
        CHECK(r.point == std::vector<Rational>{Rational(3)});
    }
    SUBCASE("fractional solution") {
        // x + y = 1, x - y = 0 has only x = y = 1/2.
        auto sys = make_system(2, {{{1, 1}, 1}, {{1, -1}, 0}}, {});
        FeasibilityResult r = feasible(sys);
        REQUIRE(r.feasible);
        CHECK(r.point == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
    }
    SUBCASE("zero rows") {
        CHECK(feasible(make_system(2, {{{0, 0}, 0}}, {})).feasible);
        CHECK_FALSE(feasible(make_system(2, {{{0, 0}, 1}}, {})).feasible);
        CHECK(feasible(make_system(2, {}, {{{0, 0}, 0}})).feasible);
        CHECK_FALSE(feasible(make_system(2, {}, {{{0, 0}, -2}})).feasible);
    }
    SUBCASE("free variables") {
        // x - y <= -5 with both unconstrained below.
        auto sys = make_system(2, {}, {{{1, -1}, -5}});
        FeasibilityResult r = feasible(sys);
        REQUIRE(r.feasible);
        CHECK(r.point[0] - r.point[1] <= Rational(-5));
    }
    SUBCASE("equalities forcing negativity") {
        // x + y = -2, x - y = 0, x >= 0 is infeasible; dropping the bound is not.
        auto bounded = make_system(2, {{{1, 1}, -2}, {{1, -1}, 0}}, {{{-1, 0}, 0}});
        CHECK_FALSE(feasible(bounded).feasible);
        auto unbounded = make_system(2, {{{1, 1}, -2}, {{1, -1}, 0}}, {});
        FeasibilityResult r = feasible(unbounded);
        REQUIRE(r.feasible);
        CHECK(r.point == std::vector<Rational>{Rational(-1), Rational(-1)});
    }
}

TEST_CASE("deterministic output") {
    auto sys = make_system(3, {{{1, 1, 1}, 4}}, {{{-1, 0, 0}, 0}, {{0, -1, 0}, 0}, {{1, 2, -1}, 3}});
    FeasibilityResult a = feasible(sys);
    FeasibilityResult b = feasible(sys);
    REQUIRE(a.feasible);
    CHECK(a.point == b.point);
}

TEST_CASE("random systems agree with elimination") {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> var_count(1, 5);
    std::uniform_int_distribution<int> eq_count(0, 2);
    std::uniform_int_distribution<int> ineq_count(1, 6);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<long long> rhs(-4, 6);

    int feasible_seen = 0, infeasible_seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int n = var_count(rng);
        std::vector<std::pair<std::vector<int>, long long>> eqs, ineqs;
        for (int e = eq_count(rng); e > 0; --e) {
            std::vector<int> row(n);
            for (int& c : row) c = coeff(rng);
            eqs.push_back({row, rhs(rng)});
        }
        for (int e = ineq_count(rng); e > 0; --e) {
            std::vector<int> row(n);
            for (int& c : row) c = coeff(rng);
            ineqs.push_back({row, rhs(rng)});
        }
        auto sys = make_system(n, eqs, ineqs);
        FeasibilityResult got = feasible(sys);
        bool expected = testing::fm_feasible(sys);
        CHECK(got.feasible == expected);
        if (got.feasible) {
            ++feasible_seen;
            CHECK(check_point(got.point, sys).ok);
        } else {
            ++infeasible_seen;
        }
    }
    // The sample must exercise both outcomes to mean anything.
    CHECK(feasible_seen > 30);
    CHECK(infeasible_seen > 30);
}

TEST_CASE("polytope systems agree with elimination") {
    std::vector<Partition> shapes{Partition(), Partition({1}), Partition({2}), Partition({1, 1}),
                                  Partition({2, 1})};
    std::vector<Partition> mus{Partition({1}), Partition({2}), Partition({1, 1}),
                               Partition({2, 1}), Partition({1, 1, 1})};
    int checked = 0;
    for (const auto& la : shapes)
        for (const auto& nu : shapes)
            for (const auto& mu : mus) {
                ConstraintSystem sys = build_constraints(la, mu, nu);
                if (sys.num_vars > 12) continue;
                CHECK(feasible(sys).feasible == testing::fm_feasible(sys));
                ++checked;
            }
    CHECK(checked > 50);
}
