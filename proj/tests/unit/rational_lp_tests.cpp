#include <doctest.h>

#include "semwidth/errors.hpp"
#include "semwidth/lp.hpp"
#include "semwidth/rational.hpp"

using namespace semwidth;

TEST_CASE("rationals normalize to lowest terms") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(7, 2) / Rational(7) == Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("rational string form is p or p/q") {
    CHECK(Rational(3, 2).str() == "3/2");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational(-3, 9).str() == "-1/3");
    CHECK(Rational(0).str() == "0");
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("2") == Rational(2));
    CHECK(Rational::parse("-5/10") == Rational(-1, 2));
    CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
    CHECK_THROWS_AS(Rational::parse("a/b"), DomainError);
    CHECK_THROWS_AS(Rational::parse(""), DomainError);
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("simplex solves tiny covering programs exactly") {
    // minimize x subject to x >= 1
    LinearProgram lp;
    lp.num_vars = 1;
    lp.objective = {Rational(1)};
    lp.rows = {{Rational(1)}};
    lp.rhs = {Rational(1)};
    const LPSolution sol = solve_min_lp(lp);
    REQUIRE(sol.feasible);
    CHECK(sol.objective == Rational(1));
    CHECK(sol.x[0] == Rational(1));
    CHECK(sol.dual[0] == Rational(1));
}

TEST_CASE("simplex reports infeasibility") {
    // 0 * x >= 1 has no solution
    LinearProgram lp;
    lp.num_vars = 1;
    lp.objective = {Rational(1)};
    lp.rows = {{Rational(0)}};
    lp.rhs = {Rational(1)};
    CHECK_FALSE(solve_min_lp(lp).feasible);
}

TEST_CASE("simplex triangle program has value 3/2 with matching dual") {
    // Vertices x,y,z of a triangle; one variable per edge.
    LinearProgram lp;
    lp.num_vars = 3;
    lp.objective = {Rational(1), Rational(1), Rational(1)};
    lp.rows = {
        {Rational(1), Rational(0), Rational(1)},   // x: xy + zx
        {Rational(1), Rational(1), Rational(0)},   // y: xy + yz
        {Rational(0), Rational(1), Rational(1)},   // z: yz + zx
    };
    lp.rhs = {Rational(1), Rational(1), Rational(1)};
    const LPSolution sol = solve_min_lp(lp);
    REQUIRE(sol.feasible);
    CHECK(sol.objective == Rational(3, 2));
    Rational dual_total(0);
    for (const Rational& y : sol.dual) {
        CHECK(y >= Rational(0));
        dual_total += y;
    }
    CHECK(dual_total == Rational(3, 2));
}

TEST_CASE("empty program is trivially optimal at zero") {
    LinearProgram lp;
    lp.num_vars = 2;
    lp.objective = {Rational(1), Rational(1)};
    const LPSolution sol = solve_min_lp(lp);
    REQUIRE(sol.feasible);
    CHECK(sol.objective == Rational(0));
}

TEST_CASE("simplex handles duplicate rows") {
    // Two identical constraints; one becomes redundant after phase 1.
    LinearProgram lp;
    lp.num_vars = 2;
    lp.objective = {Rational(1), Rational(3)};
    lp.rows = {{Rational(1), Rational(1)}, {Rational(1), Rational(1)}};
    lp.rhs = {Rational(1), Rational(1)};
    const LPSolution sol = solve_min_lp(lp);
    REQUIRE(sol.feasible);
    CHECK(sol.objective == Rational(1));
    CHECK(sol.x[0] == Rational(1));
    CHECK(sol.dual[0] + sol.dual[1] == Rational(1));
}
