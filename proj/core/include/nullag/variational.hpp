#pragma once

#include <nullag/expr.hpp>

#include <stop_token>

namespace nullag {

/// Euler-Lagrange expression E(L) = sum_i (-1)^i D_t^i (dL/dq^(i)).
///
/// The stop token is polled between the terms of the sum; a requested stop
/// raises Errc::Cancelled.
Expr euler_lagrange(const Expr& lagrangian, std::stop_token stop = {});

/// Jacobi integral (energy function) of an n-th order Lagrangian,
///
///   J(L) = sum_{r=1..n} q^(r) sum_{k=0..n-r} (-1)^k D_t^k (dL/dq^(r+k)) - L.
///
/// For autonomous L, D_t J = -q' E(L) identically.
Expr jacobi(const Expr& lagrangian, std::stop_token stop = {});

/// True iff the Euler-Lagrange expression vanishes identically.
bool is_null(const Expr& lagrangian, std::stop_token stop = {});

struct GaugeResult {
    /// P with D_t P = L, free of additive constants.
    Expr gauge;
    /// Additive constant convention; always zero.
    Rational residual_constant;
};

/// Reconstructs the gauge function of a null Lagrangian by peeling off the
/// top jet variable one order at a time.
///
/// Errors: NotNull if E(L) != 0, NonexactTop if dL/dq^(n) still depends on
/// q^(n), IntegrationUnsupported if a peeled integrand is outside the
/// supported class (polynomial or Laurent polynomial in a single linear
/// factor of the integration variable, with log for the simple pole).
GaugeResult extract_gauge(const Expr& lagrangian, std::stop_token stop = {});

struct TopIsolation {
    unsigned order;
    Expr coefficient;
    Expr remainder;
};

/// Writes E = C q^(m) + R with m the jet order of E and C, R free of q^(m).
/// Errors: NoJet for jet-free input, NonlinearTop when E is not affine in q^(m).
TopIsolation isolate_top(const Expr& e);

/// Integral of f with respect to x, with zero integration constant. Exposed
/// for testing; see extract_gauge for the supported class.
Expr integrate(const Expr& f, const Atom& x);

}  // namespace nullag
