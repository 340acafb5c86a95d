#include <doctest.h>

#include "test_support.hpp"

#include <stop_token>

using namespace nullag;
using namespace nullag::testing;

namespace {

Expr nl1() { return p("c1") * q(0) * q(1); }
Expr nl2() { return p("a1") * q(1) / (p("a2") * q(0) + p("a4")); }

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return Errc::DomainError;
}

}  // namespace

TEST_CASE("euler-lagrange examples") {
    Expr eq8 = (q(1).pow(2) * q(4) - rat(4) * q(1) * q(2) * q(3) + rat(3) * q(2).pow(3)) /
               q(1).pow(4);
    CHECK(euler_lagrange(lagrangian_l2()) == eq8);
    CHECK(euler_lagrange(krivonos(4)).is_zero());
    CHECK(euler_lagrange(nl1()).is_zero());
    CHECK(euler_lagrange(nl2()).is_zero());
    CHECK(euler_lagrange(p("c")).is_zero());
    CHECK(euler_lagrange(q(1).pow(2) / rat(2)) == -q(2));
}

TEST_CASE("jacobi examples") {
    CHECK(jacobi(lagrangian_l2()) == -schwarzian());
    CHECK(jacobi(schwarzian()) == schwarzian());
    CHECK(jacobi(nl1()).is_zero());
    CHECK(jacobi(nl2()).is_zero());
    CHECK(jacobi(p("c")) == -p("c"));
    // Harmonic oscillator energy.
    Expr L = (q(1).pow(2) - q(0).pow(2)) / rat(2);
    CHECK(jacobi(L) == (q(1).pow(2) + q(0).pow(2)) / rat(2));
}

TEST_CASE("library operators agree with the direct formulas") {
    Gen g(31);
    for (int i = 0; i < 40; ++i) {
        Expr L = g.rational(3, g.coin());
        CHECK(euler_lagrange(L) == el_direct(L));
        CHECK(jacobi(L) == jacobi_direct(L));
    }
    for (int n = 3; n <= 5; ++n) {
        CHECK(euler_lagrange(krivonos(n)) == el_direct(krivonos(n)));
        CHECK(jacobi(krivonos(n)) == jacobi_direct(krivonos(n)));
    }
}

TEST_CASE("null detection") {
    CHECK(is_null(krivonos(4)));
    CHECK(!is_null(krivonos(5)));
    CHECK(!is_null(lagrangian_l2()));
    CHECK(is_null(nl1()));
}

TEST_CASE("gauge extraction examples") {
    CHECK(extract_gauge(nl1()).gauge == p("c1") / rat(2) * q(0).pow(2));
    GaugeResult r = extract_gauge(nl2());
    CHECK(r.gauge == p("a1") / p("a2") * log(p("a2") * q(0) + p("a4")));
    CHECK(r.residual_constant == 0);
    Expr eq16 = q(5) / q(1) - rat(5) * q(2) * q(4) / q(1).pow(2) - rat(5) * q(3).pow(2) / q(1).pow(2) +
                rat(20) * q(2).pow(2) * q(3) / q(1).pow(3) - rat(45, 4) * q(2).pow(4) / q(1).pow(4);
    CHECK(extract_gauge(krivonos(6)).gauge == eq16);
    CHECK(extract_gauge(krivonos(4)).gauge == schwarzian());
    // Pure time dependence and dropped additive constants.
    CHECK(extract_gauge(rat(3) * t().pow(2)).gauge == t().pow(3));
    CHECK(extract_gauge(q(1) * (rat(7) + q(0))).gauge == rat(7) * q(0) + q(0).pow(2) / rat(2));
    CHECK(extract_gauge(Expr(0)).gauge.is_zero());
}

TEST_CASE("gauge extraction errors") {
    CHECK(code_of([] { extract_gauge(krivonos(5)); }) == Errc::NotNull);
    CHECK(code_of([] { extract_gauge(lagrangian_l2()); }) == Errc::NotNull);
    // The gauge of q1/(q0^2 + 1) is an arctangent.
    CHECK(code_of([] { extract_gauge(q(1) / (q(0).pow(2) + rat(1))); }) ==
          Errc::IntegrationUnsupported);
    CHECK(code_of([] { extract_gauge(rat(1) / (t().pow(2) + rat(1))); }) == Errc::IntegrationUnsupported);
}

TEST_CASE("integrate") {
    const Atom x = Atom::jet(0);
    CHECK(integrate(q(0).pow(2), x) == q(0).pow(3) / rat(3));
    CHECK(integrate(rat(1) / (rat(2) * q(0) + rat(3)), x) == log(rat(2) * q(0) + rat(3)) / rat(2));
    CHECK(integrate(rat(1) / (q(0) + q(1)).pow(2), x) == -rat(1) / (q(0) + q(1)));
    CHECK(integrate(q(1) / q(2), x) == q(0) * q(1) / q(2));
    Gen g(32);
    for (int i = 0; i < 50; ++i) {
        Expr f = g.polynomial(2, 3, true) / (Expr(g.coeff()) * q(0) + Expr(g.coeff()) * q(1)).pow(g.range(1, 3));
        Expr F = integrate(f, x);
        CHECK(partial(F, x) == f);
    }
}

TEST_CASE("isolate top") {
    TopIsolation iso = isolate_top(euler_lagrange(lagrangian_l2()));
    CHECK(iso.order == 4);
    CHECK(iso.coefficient == rat(1) / q(1).pow(2));
    CHECK(iso.remainder ==
          -(rat(4) * q(1) * q(2) * q(3) - rat(3) * q(2).pow(3)) / q(1).pow(4));
    TopIsolation s = isolate_top(schwarzian());
    CHECK(s.order == 3);
    CHECK(s.coefficient == rat(1) / q(1));
    CHECK(s.remainder == -rat(3, 2) * q(2).pow(2) / q(1).pow(2));
    CHECK(code_of([] { isolate_top(q(3).pow(2)); }) == Errc::NonlinearTop);
    CHECK(code_of([] { isolate_top(p("a") + t()); }) == Errc::NoJet);
}

TEST_CASE("cancellation") {
    std::stop_source src;
    src.request_stop();
    CHECK(code_of([&] { euler_lagrange(krivonos(6), src.get_token()); }) == Errc::Cancelled);
    CHECK(code_of([&] { jacobi(krivonos(6), src.get_token()); }) == Errc::Cancelled);
    CHECK(code_of([&] { extract_gauge(krivonos(6), src.get_token()); }) == Errc::Cancelled);
}

TEST_CASE("property: total derivatives are annihilated") {
    Gen g(33);
    for (int i = 0; i < 60; ++i) {
        Expr P = g.rational(3, true);
        CHECK(euler_lagrange(total_derivative(P)).is_zero());
    }
}

TEST_CASE("property: null energy and its time-dependent boundary") {
    Gen g(34);
    for (int i = 0; i < 60; ++i) {
        Expr P = g.rational(3, false);
        CHECK(jacobi(total_derivative(P)).is_zero());
    }
    for (int i = 0; i < 40; ++i) {
        Expr P = g.polynomial(0, 3, true) + Expr(g.coeff()) * t() * q(0);
        CHECK(jacobi(total_derivative(P)) == -partial(P, Atom::time()));
    }
}

TEST_CASE("property: conservation identity") {
    Gen g(35);
    for (int i = 0; i < 60; ++i) {
        Expr L = g.rational(3, false);
        CHECK((total_derivative(jacobi(L)) + q(1) * euler_lagrange(L)).is_zero());
    }
    for (Expr L : {lagrangian_l2(), pre_schwarzian(), schippers(4), krivonos(3), krivonos(4),
                   krivonos(5), krivonos(6)}) {
        CHECK((total_derivative(jacobi(L)) + q(1) * euler_lagrange(L)).is_zero());
    }
}

TEST_CASE("property: gauge round trip and the three null characterizations") {
    Gen g(36);
    for (int i = 0; i < 60; ++i) {
        bool time = g.coin();
        Expr P = g.gauge(3, time);
        Expr L = total_derivative(P);
        REQUIRE(is_null(L));
        GaugeResult r = extract_gauge(L);
        CHECK(total_derivative(r.gauge) == L);
        if (is_autonomous(P)) {
            CHECK(jacobi(L).is_zero());
        }
    }
    for (Expr L : {lagrangian_l2(), krivonos(3), krivonos(5), schippers(4)}) {
        CHECK(!is_null(L));
        CHECK(!jacobi(L).is_zero());
    }
}
