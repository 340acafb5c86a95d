#include <doctest.h>

#include "test_support.hpp"

#include <cmath>

using namespace nullag;
using namespace nullag::testing;

namespace {

JetPoint jets(std::initializer_list<std::pair<unsigned, double>> values) {
    JetPoint pt;
    for (const auto& [k, v] : values) {
        pt.values[Atom::jet(k)] = v;
    }
    return pt;
}

double rel_drift(const Expr& L, std::vector<double> init, double t1, double h) {
    ODESystem sys = derive_ode(L);
    return monitor(integrate_rk4(sys, init, 0.0, t1, h), jacobi(L)).max_rel_drift;
}

}  // namespace

TEST_CASE("evaluation") {
    CHECK(eval(schwarzian(), jets({{1, 1.0}, {2, 0.0}, {3, 0.0}})) == 0.0);
    CHECK(eval(schwarzian(), jets({{1, 1.0}, {2, 1.0}, {3, 1.0}})) == doctest::Approx(-0.5));
    CHECK(eval(lagrangian_l2(), jets({{1, 2.0}, {2, 2.0}})) == doctest::Approx(0.5));

    JetPoint pt = jets({{0, 1.0}});
    pt.values[Atom::param("a2")] = 2.0;
    pt.values[Atom::param("a4")] = 3.0;
    CHECK(eval(log(p("a2") * q(0) + p("a4")), pt) == doctest::Approx(std::log(5.0)));
    pt.values[Atom::param("a4")] = -3.0;
    CHECK_THROWS_AS(eval(log(p("a2") * q(0) + p("a4")), pt), Error);

    CHECK_THROWS_AS(eval(schwarzian(), jets({{1, 1.0}})), Error);
    CHECK_THROWS_AS(eval(rat(1) / q(1), jets({{1, 0.0}})), Error);
}

TEST_CASE("derived ODE systems") {
    ODESystem l2 = derive_ode(lagrangian_l2());
    CHECK(l2.order == 4);
    CHECK(l2.rhs == (rat(4) * q(1) * q(2) * q(3) - rat(3) * q(2).pow(3)) / q(1).pow(2));
    CHECK(l2.singular_set == rat(1) / q(1).pow(2));

    ODESystem s5 = derive_ode(krivonos(5));
    CHECK(s5.order == 6);
    CHECK(s5.rhs.den() == (rat(2) * q(1).pow(4)).num());

    try {
        derive_ode(krivonos(4));
        FAIL("expected NullODE");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NullODE);
    }
}

TEST_CASE("RK4 against a closed-form solution") {
    // q'' = -q with q(0) = 1, q'(0) = 0.
    Expr L = (q(1).pow(2) - q(0).pow(2)) / rat(2);
    ODESystem sys = derive_ode(L);
    REQUIRE(sys.order == 2);
    std::vector<double> init{1.0, 0.0};
    Trajectory traj = integrate_rk4(sys, init, 0.0, 2.0, 0.01);
    REQUIRE(traj.size() == 201);
    CHECK(traj.back().t == 2.0);
    for (const auto& s : traj) {
        CHECK(std::abs(s.state[0] - std::cos(s.t)) < 1e-9);
        CHECK(std::abs(s.state[1] + std::sin(s.t)) < 1e-9);
    }
    // A step that does not divide the interval is shortened at the end.
    Trajectory odd = integrate_rk4(sys, init, 0.0, 1.0, 0.3);
    CHECK(odd.size() == 5);
    CHECK(odd.back().t == 1.0);
    CHECK(std::abs(odd.back().state[0] - std::cos(1.0)) < 1e-3);
}

TEST_CASE("Mobius solutions keep the Schwarzian at zero") {
    ODESystem sys = derive_ode(lagrangian_l2());
    std::vector<double> init{1.0, -1.0, 2.0, -6.0};
    Trajectory traj = integrate_rk4(sys, init, 0.0, 1.0, 1e-3);
    double worst = 0.0;
    for (const auto& s : traj) {
        worst = std::max(worst, std::abs(eval(schwarzian(), jets({{1, s.state[1]},
                                                                  {2, s.state[2]},
                                                                  {3, s.state[3]}}))));
        CHECK(s.state[0] == doctest::Approx(1.0 / (1.0 + s.t)).epsilon(1e-9));
    }
    CHECK(worst <= 1e-8);
}

TEST_CASE("singular states abort with the partial trajectory") {
    ODESystem sys = derive_ode(lagrangian_l2());
    std::vector<double> init{0.0, 0.0, 1.0, 0.0};
    try {
        integrate_rk4(sys, init, 0.0, 1.0, 1e-3);
        FAIL("expected NumericSingularity");
    } catch (const IntegrationAborted& e) {
        CHECK(e.code() == Errc::NumericSingularity);
        CHECK(e.partial().empty());
    }
    // q = 1/(1 - t) blows up at t = 1, where 1/q'^2 vanishes.
    std::vector<double> toward{1.0, 1.0, 2.0, 6.0};
    try {
        integrate_rk4(sys, toward, 0.0, 3.0, 1e-3);
        FAIL("expected NumericSingularity");
    } catch (const IntegrationAborted& e) {
        CHECK(!e.partial().empty());
        CHECK(e.partial().back().t < 3.0);
    }
    CHECK_THROWS_AS(integrate_rk4(sys, std::vector<double>{1.0, 1.0}, 0.0, 1.0, 1e-3), Error);
    CHECK_THROWS_AS(integrate_rk4(sys, std::vector<double>{0, 1, 1, 0}, 0.0, 1.0, -1.0), Error);
}

TEST_CASE("monitor") {
    ODESystem sys = derive_ode(lagrangian_l2());
    std::vector<double> init{0.0, 1.0, 1.0, 0.0};
    Trajectory traj = integrate_rk4(sys, init, 0.0, 1.0, 1e-3);
    DriftReport one = monitor(traj, Expr(1));
    CHECK(one.max_abs_drift == 0.0);
    CHECK(one.max_rel_drift == 0.0);
    CHECK(one.samples.size() == traj.size());
    DriftReport j = monitor(traj, jacobi(lagrangian_l2()));
    CHECK(j.samples.front().second == doctest::Approx(1.5));
    CHECK(j.max_rel_drift <= 1e-6);
    CHECK_THROWS_AS(monitor(traj, q(5)), Error);
    CHECK_THROWS_AS(monitor(Trajectory{}, Expr(1)), Error);
}

TEST_CASE("sigma5 Jacobi integral is conserved") {
    std::vector<double> init{0.0, 1.0, 0.5, 0.25, 0.5, 0.25};
    ODESystem sys = derive_ode(krivonos(5));
    DriftReport d = monitor(integrate_rk4(sys, init, 0.0, 0.5, 1e-4), jacobi(krivonos(5)));
    CHECK(d.samples.front().second != 0.0);
    CHECK(d.max_rel_drift <= 1e-5);
    MESSAGE("sigma5 drift " << d.max_rel_drift << " from J0 = " << d.samples.front().second);
}

TEST_CASE("on-shell drift shrinks with the step") {
    std::vector<double> l2{0.0, 1.0, 1.0, 0.0};
    CHECK(rel_drift(lagrangian_l2(), l2, 1.0, 5e-3) < rel_drift(lagrangian_l2(), l2, 1.0, 1e-2));
    CHECK(rel_drift(krivonos(3), l2, 1.0, 5e-3) < rel_drift(krivonos(3), l2, 1.0, 1e-2));
    std::vector<double> s5{0.0, 1.0, 0.5, 0.25, 0.5, 0.25};
    CHECK(rel_drift(krivonos(5), s5, 0.5, 5e-3) < rel_drift(krivonos(5), s5, 0.5, 1e-2));
}
