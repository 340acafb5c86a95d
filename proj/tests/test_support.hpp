#pragma once

#include <nullag/nullag.hpp>

#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace nullag::testing {

inline Expr q(unsigned k) { return Expr(Atom::jet(k)); }
inline Expr t() { return Expr(Atom::time()); }
inline Expr p(const std::string& name) { return Expr(Atom::param(name)); }
inline Expr rat(long n, long d = 1) { return Expr(make_rational(n, d)); }

/// Random expressions for property tests. Coefficients have numerator and
/// denominator bounded by 100.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    Rational coeff() {
        long n = 0;
        while (n == 0) {
            n = range(-100, 100);
        }
        return make_rational(n, range(1, 100));
    }

    /// Product of jet powers q_lo .. q_hi, optionally with t.
    Expr monomial(unsigned lo, unsigned hi, int max_deg, bool time) {
        Expr m(1);
        int factors = static_cast<int>(range(1, 2));
        for (int i = 0; i < factors; ++i) {
            m *= q(static_cast<unsigned>(range(lo, hi))).pow(range(1, max_deg));
        }
        if (time && coin(0.3)) {
            m *= t().pow(range(1, 2));
        }
        return m;
    }

    Expr polynomial(unsigned max_order, int terms, bool time) {
        Expr s(0);
        for (int i = 0; i < terms; ++i) {
            s += Expr(coeff()) * monomial(0, max_order, 2, time);
        }
        return s;
    }

    /// Small rational function of jet order <= max_order.
    Expr rational(unsigned max_order, bool time) {
        Expr num = polynomial(max_order, static_cast<int>(range(1, 3)), time);
        Expr den = coin() ? monomial(1, std::max(1U, max_order), 2, false)
                          : Expr(coeff()) * q(static_cast<unsigned>(range(0, max_order))) +
                                Expr(static_cast<long>(range(1, 9)));
        return num / den;
    }

    /// Gauge candidates inside the class that extract_gauge integrates:
    /// polynomials over monomials in q1..q3, a log of a linear function of
    /// q0, and polynomial time dependence.
    Expr gauge(unsigned max_order, bool time) {
        unsigned top = std::min(3U, max_order);
        Expr num = polynomial(top, static_cast<int>(range(1, 3)), time);
        Expr pgauge = num / monomial(1, std::max(1U, top), 2, false);
        if (coin(0.3)) {
            pgauge += Expr(coeff()) *
                      log(Expr(coeff()) * q(0) + Expr(static_cast<long>(range(1, 9))));
        }
        if (time && coin(0.3)) {
            pgauge += Expr(coeff()) * t().pow(range(1, 3));
        }
        return pgauge;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// Euler-Lagrange expression from the textbook alternating sum, computed
/// term by term (the library uses a momentum recurrence instead).
inline Expr el_direct(const Expr& L) {
    auto n = jet_order(L);
    if (!n) {
        return Expr(0);
    }
    Expr e(0);
    for (unsigned i = 0; i <= *n; ++i) {
        Expr d = partial(L, Atom::jet(i));
        if (i > 0) {
            d = total_derivative(d, i);
        }
        e += (i % 2 == 0) ? d : -d;
    }
    return e;
}

/// Jacobi integral as the explicit double sum minus L.
inline Expr jacobi_direct(const Expr& L) {
    auto n = jet_order(L);
    Expr j = -L;
    if (!n) {
        return j;
    }
    for (unsigned r = 1; r <= *n; ++r) {
        Expr inner(0);
        for (unsigned k = 0; k + r <= *n; ++k) {
            Expr d = partial(L, Atom::jet(r + k));
            if (k > 0) {
                d = total_derivative(d, k);
            }
            inner += (k % 2 == 0) ? d : -d;
        }
        j += q(r) * inner;
    }
    return j;
}

/// A smooth test curve q(t) = sum c_i exp(l_i t) with closed-form derivatives.
struct Curve {
    std::vector<double> c{0.7, -0.3, 0.2};
    std::vector<double> l{1.1, -0.6, 0.35};

    double derivative(unsigned k, double at) const {
        double s = 0.0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            s += c[i] * std::pow(l[i], k) * std::exp(l[i] * at);
        }
        return s;
    }

    /// Jet point of the curve at time `at`, up to order `n`, plus params.
    JetPoint point(double at, unsigned n, const std::map<std::string, double>& params = {}) const {
        JetPoint pt;
        pt.values[Atom::time()] = at;
        for (unsigned k = 0; k <= n; ++k) {
            pt.values[Atom::jet(k)] = derivative(k, at);
        }
        for (const auto& [name, v] : params) {
            pt.values[Atom::param(name)] = v;
        }
        return pt;
    }
};

/// d/dt of e along the curve by a fourth-order central difference.
inline double curve_time_derivative(const Expr& e, const Curve& c, double at, unsigned n,
                                    const std::map<std::string, double>& params = {}) {
    const double h = 1e-3;
    auto f = [&](double s) { return eval(e, c.point(s, n, params)); };
    return (-f(at + 2 * h) + 8 * f(at + h) - 8 * f(at - h) + f(at - 2 * h)) / (12 * h);
}

/// Coefficient of a monomial in an expression with constant denominator.
inline Rational coefficient_of(const Expr& poly, const Expr& monomial) {
    const Monomial& m = monomial.num().leading().monomial;
    Rational den = poly.den().leading().coeff;
    for (const auto& term : poly.num().terms()) {
        if (term.monomial == m) {
            return term.coeff / den;
        }
    }
    return Rational(0);
}

inline bool close(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace nullag::testing
