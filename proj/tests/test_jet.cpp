#include <doctest.h>

#include "test_support.hpp"

using namespace nullag;
using namespace nullag::testing;

TEST_CASE("total derivative examples") {
    CHECK(total_derivative(q(0)) == q(1));
    CHECK(total_derivative(p("c1") / rat(2) * q(0).pow(2)) == p("c1") * q(0) * q(1));
    Expr pre = q(2) / q(1);
    CHECK(total_derivative(pre) - rat(1, 2) * pre.pow(2) == schwarzian());
    CHECK(total_derivative(t()) == Expr(1));
    CHECK(total_derivative(p("a")).is_zero());
    CHECK(total_derivative(q(0), 3) == q(3));
    Expr arg = p("a2") * q(0) + p("a4");
    CHECK(total_derivative(log(arg)) == p("a2") * q(1) / arg);
}

TEST_CASE("jet order") {
    CHECK(jet_order(schwarzian()) == 3U);
    CHECK(!jet_order(p("c1")).has_value());
    CHECK(!jet_order(t().pow(2)).has_value());
    CHECK(jet_order(krivonos(5)) == 5U);
    CHECK(jet_order(log(q(2) + rat(1))) == 2U);
    CHECK(is_autonomous(schwarzian()));
    CHECK(!is_autonomous(t() * q(1)));
}

TEST_CASE("prolongation examples") {
    CHECK(prolong({Expr(1)}, schwarzian()).is_zero());
    CHECK(prolong({q(0).pow(2)}, q(2) / q(1)) == rat(2) * q(1));
    CHECK(prolong({q(0)}, schwarzian()).is_zero());
    CHECK(prolong({q(0)}, q(0).pow(3)) == rat(3) * q(0).pow(3));
}

TEST_CASE("total derivative matches d/dt along a curve") {
    Gen g(21);
    Curve c;
    int checked = 0;
    for (int i = 0; i < 60; ++i) {
        Expr e = g.rational(3, true);
        if (g.coin(0.3)) {
            e += Expr(g.coeff()) * log(q(1) + rat(2));
        }
        try {
            double fd = curve_time_derivative(e, c, 0.4, 3);
            double exact = eval(total_derivative(e), c.point(0.4, 4));
            CHECK(close(fd, exact, 1e-5));
            ++checked;
        } catch (const Error&) {
        }
    }
    CHECK(checked > 30);
}

TEST_CASE("property: Leibniz rule") {
    Gen g(22);
    for (int i = 0; i < 100; ++i) {
        Expr a = g.rational(3, true);
        Expr b = g.rational(3, true);
        CHECK(total_derivative(a * b) == total_derivative(a) * b + a * total_derivative(b));
    }
}

TEST_CASE("property: prolongation commutes with the total derivative") {
    Gen g(23);
    for (int i = 0; i < 60; ++i) {
        Expr e = g.rational(2, false);
        Characteristic v{g.rational(1, false)};
        CHECK(prolong(v, total_derivative(e)) == total_derivative(prolong(v, e)));
    }
}

TEST_CASE("property: linearity") {
    Gen g(24);
    for (int i = 0; i < 100; ++i) {
        Expr a = g.rational(3, true);
        Expr b = g.rational(3, true);
        Expr r(g.coeff());
        Expr s(g.coeff());
        CHECK(total_derivative(r * a + s * b) == r * total_derivative(a) + s * total_derivative(b));
        Characteristic v{q(0).pow(2)};
        CHECK(prolong(v, r * a + s * b) == r * prolong(v, a) + s * prolong(v, b));
    }
}
