#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lp.hpp"

using namespace crnkit;

namespace {

LpConstraint row(std::vector<Rational> a, Rel rel, Rational b) {
    return LpConstraint{std::move(a), rel, std::move(b)};
}

}  // namespace

TEST_CASE("simple bounded maximum") {
    // max x + y  s.t.  x + 2y <= 3, x <= 1, x,y >= 0 -> optimum 2 at (1, 1).
    LinearProgram lp;
    lp.nvars = 2;
    lp.objective = {1, 1};
    lp.rows.push_back(row({1, 2}, Rel::le, 3));
    lp.rows.push_back(row({1, 0}, Rel::le, 1));
    LpResult r = solve_lp(lp);
    REQUIRE(r.status == LpResult::Status::optimal);
    CHECK(r.objective == 2);
    CHECK(r.x[0] == 1);
    CHECK(r.x[1] == 1);
}

TEST_CASE("equality constraints are honored exactly") {
    // max 3x + 2y  s.t.  x + y = 4, x - y <= 2 -> x = 3, y = 1, objective 11.
    LinearProgram lp;
    lp.nvars = 2;
    lp.objective = {3, 2};
    lp.rows.push_back(row({1, 1}, Rel::eq, 4));
    lp.rows.push_back(row({1, -1}, Rel::le, 2));
    LpResult r = solve_lp(lp);
    REQUIRE(r.status == LpResult::Status::optimal);
    CHECK(r.objective == 11);
    CHECK(r.x[0] == 3);
    CHECK(r.x[1] == 1);
    CHECK(r.x[0] + r.x[1] == 4);
}

TEST_CASE("ge rows and fractional optima stay rational") {
    // max y  s.t.  3y <= 1, y >= 1/6 -> y = 1/3 exactly.
    LinearProgram lp;
    lp.nvars = 1;
    lp.objective = {1};
    lp.rows.push_back(row({3}, Rel::le, 1));
    lp.rows.push_back(row({1}, Rel::ge, Rational(1, 6)));
    LpResult r = solve_lp(lp);
    REQUIRE(r.status == LpResult::Status::optimal);
    CHECK(r.objective == Rational(1, 3));
}

TEST_CASE("infeasible systems are reported") {
    LinearProgram lp;
    lp.nvars = 2;
    lp.objective = {1, 0};
    lp.rows.push_back(row({1, 1}, Rel::le, 1));
    lp.rows.push_back(row({1, 1}, Rel::ge, 2));
    CHECK(solve_lp(lp).status == LpResult::Status::infeasible);

    LinearProgram neg;
    neg.nvars = 1;
    neg.objective = {1};
    neg.rows.push_back(row({1}, Rel::le, -1));  // x >= 0 makes this empty
    CHECK(solve_lp(neg).status == LpResult::Status::infeasible);
}

TEST_CASE("unbounded rays are reported") {
    LinearProgram lp;
    lp.nvars = 2;
    lp.objective = {1, 1};
    lp.rows.push_back(row({1, -1}, Rel::le, 1));
    CHECK(solve_lp(lp).status == LpResult::Status::unbounded);
}

TEST_CASE("feasibility-only runs return a feasible point") {
    LinearProgram lp;
    lp.nvars = 3;
    lp.rows.push_back(row({1, 1, 1}, Rel::eq, 1));
    lp.rows.push_back(row({1, -1, 0}, Rel::ge, Rational(1, 2)));
    LpResult r = solve_lp(lp);
    REQUIRE(r.status == LpResult::Status::optimal);
    CHECK(r.x[0] + r.x[1] + r.x[2] == 1);
    CHECK(r.x[0] - r.x[1] >= Rational(1, 2));
    for (const Rational& xi : r.x) CHECK(xi >= 0);
}

TEST_CASE("degenerate pivots terminate under the anti-cycling rule") {
    // A classic degenerate instance (many bases share the optimal vertex).
    LinearProgram lp;
    lp.nvars = 4;
    lp.objective = {Rational(3, 4), -150, Rational(1, 50), -6};
    lp.rows.push_back(row({Rational(1, 4), -60, Rational(-1, 25), 9}, Rel::le, 0));
    lp.rows.push_back(row({Rational(1, 2), -90, Rational(-1, 50), 3}, Rel::le, 0));
    lp.rows.push_back(row({0, 0, 1, 0}, Rel::le, 1));
    LpResult r = solve_lp(lp);
    REQUIRE(r.status == LpResult::Status::optimal);
    CHECK(r.objective == Rational(1, 20));
}

TEST_CASE("strictness encoding: max t with a simplex constraint") {
    // max t  s.t.  v1 + v2 = 1, v1 - v2 - t >= 0, t <= 5; optimum t = 1.
    LinearProgram lp;
    lp.nvars = 3;
    lp.objective = {0, 0, 1};
    lp.rows.push_back(row({1, 1, 0}, Rel::eq, 1));
    lp.rows.push_back(row({1, -1, -1}, Rel::ge, 0));
    lp.rows.push_back(row({0, 0, 1}, Rel::le, 5));
    LpResult r = solve_lp(lp);
    REQUIRE(r.status == LpResult::Status::optimal);
    CHECK(r.objective == 1);
    CHECK(r.x[0] == 1);
}
