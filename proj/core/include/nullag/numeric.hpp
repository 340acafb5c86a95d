#pragma once

#include <nullag/error.hpp>
#include <nullag/expr.hpp>

#include <map>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace nullag {

/// Numeric values for the base atoms (t, q^(k), parameters) of an expression.
struct JetPoint {
    std::map<Atom, double> values;
};

/// Expr compiled for repeated double-precision evaluation against a fixed
/// input layout. Log atoms are evaluated through their arguments.
class Evaluator {
public:
    /// Throws MissingAtom if e uses a base atom absent from the layout.
    Evaluator(const Expr& e, std::vector<Atom> layout);
    ~Evaluator();
    Evaluator(Evaluator&&) noexcept;
    Evaluator& operator=(Evaluator&&) noexcept;

    /// Values in layout order. NumericSingularity on a zero denominator, a
    /// non-positive log argument, or a non-finite result.
    double operator()(std::span<const double> inputs) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// IEEE double evaluation of the canonical form.
double eval(const Expr& e, const JetPoint& point);

/// Explicit form q^(m) = rhs(t, q, ..., q^(m-1)) of an Euler-Lagrange equation.
struct ODESystem {
    unsigned order;
    Expr rhs;
    /// Coefficient of q^(m) in E(L); the system is singular where it vanishes
    /// or blows up.
    Expr singular_set;
};

/// Errors: NullODE when E(L) = 0, NonlinearTop when E(L) is not affine in its
/// top derivative.
ODESystem derive_ode(const Expr& lagrangian);

struct Sample {
    double t;
    /// q, q', ..., q^(m-1)
    std::vector<double> state;
};
using Trajectory = std::vector<Sample>;

/// Raised when the integration hits the singular set; carries the samples
/// computed before the failure.
class IntegrationAborted : public Error {
public:
    IntegrationAborted(const std::string& message, Trajectory partial)
        : Error(Errc::NumericSingularity, message), partial_(std::move(partial)) {}
    const Trajectory& partial() const noexcept { return partial_; }

private:
    Trajectory partial_;
};

/// Threshold on |C| below which the top-derivative coefficient counts as
/// singular.
inline constexpr double kSingularThreshold = 1e-12;

/// Classical fixed-step RK4 on the companion first-order system. The last
/// step is shortened to land exactly on t1. Parameters in the system are not
/// allowed (MissingAtom).
Trajectory integrate_rk4(const ODESystem& sys, std::span<const double> init, double t0, double t1,
                         double h);

struct DriftReport {
    std::vector<std::pair<double, double>> samples;
    double max_abs_drift;
    /// max_abs_drift / |initial value|, or max_abs_drift when the initial
    /// value is zero.
    double max_rel_drift;
};

/// Evaluates e along the trajectory (atoms t, q .. q^(m-1)).
DriftReport monitor(const Trajectory& trajectory, const Expr& e);

}  // namespace nullag
