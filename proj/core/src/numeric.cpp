#include <nullag/jet.hpp>
#include <nullag/numeric.hpp>
#include <nullag/text.hpp>
#include <nullag/variational.hpp>

#include <algorithm>
#include <cmath>

namespace nullag {

// ---------------------------------------------------------------- Evaluator

struct Evaluator::Impl {
    struct Poly {
        std::vector<double> coeff;
        std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> factors;
    };

    std::size_t ninputs = 0;
    std::vector<std::unique_ptr<Impl>> logs;  // slots ninputs, ninputs+1, ...
    std::vector<Atom> log_atoms;
    Poly num;
    Poly den;

    Impl(const Expr& e, const std::vector<Atom>& layout) : ninputs(layout.size()) {
        num = compile(e.num(), layout);
        den = compile(e.den(), layout);
    }

    std::size_t slot(const Atom& a, const std::vector<Atom>& layout) {
        if (a.is_log()) {
            for (std::size_t i = 0; i < log_atoms.size(); ++i) {
                if (log_atoms[i] == a) {
                    return ninputs + i;
                }
            }
            log_atoms.push_back(a);
            logs.push_back(std::make_unique<Impl>(a.argument(), layout));
            return ninputs + log_atoms.size() - 1;
        }
        auto it = std::find(layout.begin(), layout.end(), a);
        if (it == layout.end()) {
            throw Error(Errc::MissingAtom, "no value for " + render_atom(a));
        }
        return static_cast<std::size_t>(it - layout.begin());
    }

    Poly compile(const Polynomial& p, const std::vector<Atom>& layout) {
        Poly out;
        for (const auto& t : p.terms()) {
            out.coeff.push_back(t.coeff.get_d());
            std::vector<std::pair<std::size_t, std::uint32_t>> f;
            for (const auto& [a, e] : t.monomial.factors()) {
                f.emplace_back(slot(a, layout), e);
            }
            out.factors.push_back(std::move(f));
        }
        return out;
    }

    static double run(const Poly& p, const std::vector<double>& values) {
        double sum = 0.0;
        for (std::size_t i = 0; i < p.coeff.size(); ++i) {
            double term = p.coeff[i];
            for (const auto& [s, e] : p.factors[i]) {
                double v = values[s];
                term *= e == 1 ? v : std::pow(v, static_cast<double>(e));
            }
            sum += term;
        }
        return sum;
    }

    double evaluate(std::span<const double> inputs) const {
        std::vector<double> values(inputs.begin(), inputs.end());
        for (const auto& sub : logs) {
            double arg = sub->evaluate(inputs);
            if (!(arg > 0.0)) {
                throw Error(Errc::NumericSingularity, "log argument is not positive");
            }
            values.push_back(std::log(arg));
        }
        double d = run(den, values);
        if (d == 0.0) {
            throw Error(Errc::NumericSingularity, "denominator evaluates to zero");
        }
        double v = run(num, values) / d;
        if (!std::isfinite(v)) {
            throw Error(Errc::NumericSingularity, "non-finite value");
        }
        return v;
    }
};

Evaluator::Evaluator(const Expr& e, std::vector<Atom> layout)
    : impl_(std::make_unique<Impl>(e, layout)) {}
Evaluator::~Evaluator() = default;
Evaluator::Evaluator(Evaluator&&) noexcept = default;
Evaluator& Evaluator::operator=(Evaluator&&) noexcept = default;

double Evaluator::operator()(std::span<const double> inputs) const {
    if (inputs.size() != impl_->ninputs) {
        throw Error(Errc::MissingAtom, "input vector does not match the evaluator layout");
    }
    return impl_->evaluate(inputs);
}

double eval(const Expr& e, const JetPoint& point) {
    std::vector<Atom> layout;
    std::vector<double> values;
    for (const auto& [a, v] : point.values) {
        layout.push_back(a);
        values.push_back(v);
    }
    Evaluator ev(e, std::move(layout));
    return ev(values);
}

// --------------------------------------------------------------------- ODEs

ODESystem derive_ode(const Expr& lagrangian) {
    Expr el = euler_lagrange(lagrangian);
    if (el.is_zero()) {
        throw Error(Errc::NullODE, "null Lagrangian: the Euler-Lagrange expression vanishes");
    }
    TopIsolation iso = isolate_top(el);
    return {iso.order, -iso.remainder / iso.coefficient, iso.coefficient};
}

namespace {

std::vector<Atom> state_layout(unsigned order) {
    std::vector<Atom> layout{Atom::time()};
    for (unsigned k = 0; k < order; ++k) {
        layout.push_back(Atom::jet(k));
    }
    return layout;
}

}  // namespace

Trajectory integrate_rk4(const ODESystem& sys, std::span<const double> init, double t0, double t1,
                         double h) {
    const unsigned m = sys.order;
    if (init.size() != m) {
        throw Error(Errc::DomainError, "initial state must have " + std::to_string(m) + " values");
    }
    if (!(h > 0.0) || !(t1 > t0)) {
        throw Error(Errc::DomainError, "need h > 0 and t1 > t0");
    }
    const Evaluator rhs(sys.rhs, state_layout(m));
    const Evaluator coeff(sys.singular_set, state_layout(m));

    Trajectory traj;
    std::vector<double> input(m + 1);
    auto field = [&](double t, const std::vector<double>& y, std::vector<double>& dy) {
        input[0] = t;
        std::copy(y.begin(), y.end(), input.begin() + 1);
        double c = 0.0;
        double top = 0.0;
        try {
            c = coeff(input);
            top = rhs(input);
        } catch (const Error& e) {
            throw IntegrationAborted(std::string("singular state: ") + e.what(), traj);
        }
        if (std::abs(c) < kSingularThreshold) {
            throw IntegrationAborted("top-derivative coefficient vanishes", traj);
        }
        for (unsigned i = 0; i + 1 < m; ++i) {
            dy[i] = y[i + 1];
        }
        dy[m - 1] = top;
    };

    std::vector<double> y(init.begin(), init.end());
    std::vector<double> k1(m), k2(m), k3(m), k4(m), tmp(m);
    double t = t0;
    // Probe the initial state before recording it.
    field(t, y, k1);
    traj.push_back({t, y});
    const auto steps = static_cast<long>(std::ceil((t1 - t0) / h - 1e-9));
    for (long s = 0; s < steps; ++s) {
        const double step = (s + 1 == steps) ? t1 - t : h;
        field(t, y, k1);
        for (unsigned i = 0; i < m; ++i) tmp[i] = y[i] + 0.5 * step * k1[i];
        field(t + 0.5 * step, tmp, k2);
        for (unsigned i = 0; i < m; ++i) tmp[i] = y[i] + 0.5 * step * k2[i];
        field(t + 0.5 * step, tmp, k3);
        for (unsigned i = 0; i < m; ++i) tmp[i] = y[i] + step * k3[i];
        field(t + step, tmp, k4);
        for (unsigned i = 0; i < m; ++i) {
            y[i] += step / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        t = (s + 1 == steps) ? t1 : t0 + static_cast<double>(s + 1) * h;
        traj.push_back({t, y});
    }
    return traj;
}

DriftReport monitor(const Trajectory& trajectory, const Expr& e) {
    if (trajectory.empty()) {
        throw Error(Errc::DomainError, "empty trajectory");
    }
    const auto m = static_cast<unsigned>(trajectory.front().state.size());
    const Evaluator ev(e, state_layout(m));
    DriftReport report{{}, 0.0, 0.0};
    std::vector<double> input(m + 1);
    for (const auto& s : trajectory) {
        input[0] = s.t;
        std::copy(s.state.begin(), s.state.end(), input.begin() + 1);
        report.samples.emplace_back(s.t, ev(input));
    }
    const double v0 = report.samples.front().second;
    for (const auto& [t, v] : report.samples) {
        report.max_abs_drift = std::max(report.max_abs_drift, std::abs(v - v0));
    }
    report.max_rel_drift = v0 != 0.0 ? report.max_abs_drift / std::abs(v0) : report.max_abs_drift;
    return report;
}

}  // namespace nullag
