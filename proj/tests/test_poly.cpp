#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "poly.hpp"
#include "rational.hpp"

#include <vector>

using crnkit::Polynomial;
using crnkit::Rational;

namespace {

Polynomial var(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }

std::vector<Rational> rpoint(std::initializer_list<long> nums, long denom = 4) {
    std::vector<Rational> out;
    for (long n : nums) {
        Rational r(n, denom);
        r.canonicalize();
        out.push_back(r);
    }
    return out;
}

}  // namespace

TEST_CASE("constant and variable basics") {
    Polynomial c = Polynomial::constant(3, Rational(5));
    CHECK(c.is_constant());
    CHECK(c.constant_value() == Rational(5));
    CHECK(Polynomial(3).is_zero());
    Polynomial x = var(3, 0);
    CHECK_FALSE(x.is_constant());
    CHECK(x.degree_in(0) == 1);
    CHECK(x.degree_in(1) == 0);
}

TEST_CASE("arithmetic stays canonical") {
    Polynomial x = var(2, 0), y = var(2, 1);
    Polynomial p = x * y + x * y;             // 2xy
    CHECK(p.terms().size() == 1);
    CHECK(p.terms()[0].coeff == Rational(2));
    Polynomial q = p - p;
    CHECK(q.is_zero());
    Polynomial r = (x + y) * (x - y);         // x^2 - y^2
    CHECK(r.terms().size() == 2);
    CHECK(r == x * x - y * y);
}

TEST_CASE("pow matches repeated multiplication") {
    Polynomial x = var(2, 0), y = var(2, 1);
    Polynomial base = x + Polynomial::constant(2, Rational(1)) + y;
    Polynomial byhand = base * base * base;
    CHECK(base.pow(3) == byhand);
    CHECK(base.pow(0) == Polynomial::constant(2, Rational(1)));
}

TEST_CASE("derivative follows the product rule") {
    Polynomial x = var(3, 0), y = var(3, 1), z = var(3, 2);
    Polynomial p = x * x * y + z.scaled(Rational(3));
    Polynomial q = y * z - x;
    Polynomial lhs = (p * q).derivative(0);
    Polynomial rhs = p.derivative(0) * q + p * q.derivative(0);
    CHECK(lhs == rhs);

    Polynomial d = (x * x * y).derivative(0);  // 2xy
    CHECK(d == (x * y).scaled(Rational(2)));
    CHECK(Polynomial::constant(3, Rational(7)).derivative(1).is_zero());
}

TEST_CASE("substitute pins one variable exactly") {
    Polynomial x = var(2, 0), y = var(2, 1);
    Polynomial p = x * x * y - y.scaled(Rational(1, 2));
    Polynomial sub = p.substitute(0, Rational(3, 2));  // (9/4)y - y/2 = (7/4)y
    CHECK(sub == y.scaled(Rational(7, 4)));
    CHECK(sub.degree_in(0) == 0);
}

TEST_CASE("exact and double evaluation agree on dyadic points") {
    Polynomial x = var(3, 0), y = var(3, 1), z = var(3, 2);
    Polynomial p = x * y * z - x.scaled(Rational(5, 8)) + z * z + Polynomial::constant(3, Rational(3, 4));
    std::vector<Rational> rp = rpoint({3, -2, 7}, 4);
    std::vector<double> dp;
    for (const Rational& r : rp) dp.push_back(crnkit::to_double(r));
    CHECK(crnkit::to_double(p.eval_exact(rp)) == doctest::Approx(p.eval(dp)).epsilon(1e-15));
}

TEST_CASE("positive part keeps exactly the positive monomials") {
    Polynomial x = var(2, 0), y = var(2, 1);
    Polynomial p = x * y - x.scaled(Rational(2)) + y.scaled(Rational(1, 3));
    Polynomial pos = p.positive_part();
    CHECK(pos == x * y + y.scaled(Rational(1, 3)));
    CHECK((pos - p) == x.scaled(Rational(2)));
    CHECK(Polynomial(2).positive_part().is_zero());
}

TEST_CASE("rendering is deterministic and name driven") {
    Polynomial x = var(2, 0), y = var(2, 1);
    Polynomial p = x * x - y.scaled(Rational(3, 2));
    auto name = [](std::size_t i) { return i == 0 ? std::string("a") : std::string("b"); };
    CHECK(p.to_string(name) == p.to_string(name));
    std::string s = p.to_string(name);
    CHECK(s.find("a") != std::string::npos);
    CHECK(s.find("b") != std::string::npos);
}
