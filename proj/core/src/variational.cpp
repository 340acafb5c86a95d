#include <nullag/jet.hpp>
#include <nullag/variational.hpp>

#include "poly_bridge.hpp"

#include <vector>

namespace nullag {

namespace {

void check_stop(const std::stop_token& stop) {
    if (stop.stop_requested()) {
        throw Error(Errc::Cancelled, "computation cancelled by caller");
    }
}

/// Generalized momenta p_r = sum_k (-1)^k D^k (dL/dq^(r+k)) for r = 1..n,
/// built with the recurrence p_n = dL/dq^(n), p_r = dL/dq^(r) - D p_{r+1}.
/// Index 0 holds dL/dq - D p_1, which is the Euler-Lagrange expression.
std::vector<Expr> momenta(const Expr& L, unsigned n, const std::stop_token& stop) {
    std::vector<Expr> p(n + 1);
    p[n] = partial(L, Atom::jet(n));
    for (unsigned r = n; r-- > 0;) {
        check_stop(stop);
        p[r] = partial(L, Atom::jet(r)) - total_derivative(p[r + 1]);
    }
    return p;
}

bool is_constant_atom(const Atom& a) {
    if (a.is_param()) {
        return true;
    }
    if (a.is_log()) {
        bool constant = true;
        a.argument().for_each_atom_deep([&](const Atom& b) {
            if (b.is_jet() || b.is_time()) {
                constant = false;
            }
        });
        return constant;
    }
    return false;
}

/// Drops additive terms that are free of t and the jets.
Expr strip_constants(const Expr& p) {
    bool den_constant = true;
    p.den().for_each_atom([&](const Atom& a) {
        if (!is_constant_atom(a)) {
            den_constant = false;
        }
    });
    if (!den_constant) {
        return p;
    }
    std::vector<Polynomial::Term> kept;
    for (const auto& t : p.num().terms()) {
        bool constant = true;
        for (const auto& [a, e] : t.monomial.factors()) {
            if (!is_constant_atom(a)) {
                constant = false;
            }
        }
        if (!constant) {
            kept.push_back(t);
        }
    }
    return Expr::fraction(Polynomial::from_terms(std::move(kept)), p.den());
}

Polynomial primitive_positive(const Polynomial& p) {
    // The gcd of p with itself is its primitive, positively normalized form.
    Polynomial g = detail::poly_gcd(p, p);
    if (g.leading().coeff < 0) {
        g = -g;
    }
    return g;
}

Polynomial content_in(const Polynomial& p, const Atom& x) {
    Polynomial g;
    for (std::uint32_t k = 0, d = p.degree_in(x); k <= d; ++k) {
        Polynomial c = p.coefficient(x, k);
        if (c.is_zero()) {
            continue;
        }
        g = g.is_zero() ? primitive_positive(c) : detail::poly_gcd(g, c);
        if (g.is_constant()) {
            break;
        }
    }
    return g;
}

}  // namespace

Expr euler_lagrange(const Expr& lagrangian, std::stop_token stop) {
    auto n = jet_order(lagrangian);
    if (!n) {
        return Expr();
    }
    if (*n == 0) {
        return partial(lagrangian, Atom::jet(0));
    }
    return momenta(lagrangian, *n, stop)[0];
}

Expr jacobi(const Expr& lagrangian, std::stop_token stop) {
    auto n = jet_order(lagrangian);
    if (!n || *n == 0) {
        return -lagrangian;
    }
    auto p = momenta(lagrangian, *n, stop);
    Expr j = -lagrangian;
    for (unsigned r = 1; r <= *n; ++r) {
        j += Expr(Atom::jet(r)) * p[r];
    }
    return j;
}

bool is_null(const Expr& lagrangian, std::stop_token stop) {
    return euler_lagrange(lagrangian, std::move(stop)).is_zero();
}

// ---------------------------------------------------------------- integrate

Expr integrate(const Expr& f, const Atom& x) {
    if (f.is_zero()) {
        return Expr();
    }
    bool log_in_x = false;
    f.for_each_atom_deep([&](const Atom& a) {
        if (a.is_log() && a.argument().depends_on(x)) {
            log_in_x = true;
        }
    });
    if (log_in_x) {
        throw Error(Errc::IntegrationUnsupported, "integrand has a logarithm of the variable");
    }

    // den = d0 * c * u^k with d0 free of x and u = alpha*x + beta primitive.
    const Polynomial& den = f.den();
    Polynomial d0 = den.contains(x) ? content_in(den, x) : den;
    Polynomial dx = den.contains(x) ? *detail::poly_divide(den, d0) : Polynomial(Rational(1));
    const std::uint32_t k = dx.degree_in(x);
    Polynomial u(x);
    Rational c(1);
    if (k == 0) {
        c = dx.constant_value();
    } else {
        Polynomial lin = dx;
        for (std::uint32_t i = 1; i < k; ++i) {
            lin = lin.formal_derivative(x);
        }
        u = primitive_positive(*detail::poly_divide(lin, content_in(lin, x)));
        auto q = detail::poly_divide(dx, u.pow(k));
        if (!q || !q->is_constant()) {
            throw Error(Errc::IntegrationUnsupported,
                        "denominator is not a power of a single linear factor");
        }
        c = q->constant_value();
    }
    const Expr alpha(u.coefficient(x, 1));
    const Expr beta(u.coefficient(x, 0));

    // Rewrite the numerator as a polynomial in u: x = (u - beta)/alpha.
    const Polynomial& num = f.num();
    std::vector<Expr> g;  // coefficients in u
    const Expr inv_alpha = Expr(1) / alpha;
    const Expr shift = -beta * inv_alpha;
    for (std::uint32_t j = num.degree_in(x) + 1; j-- > 0;) {
        // g <- g * (u/alpha + shift) + N_j
        std::vector<Expr> next(g.size() + 1);
        for (std::size_t i = 0; i < g.size(); ++i) {
            next[i + 1] += g[i] * inv_alpha;
            next[i] += g[i] * shift;
        }
        next[0] += Expr(num.coefficient(x, j));
        g = std::move(next);
    }

    const Expr scale = Expr(1) / (alpha * Expr(d0) * Expr(c));
    const Expr ue(u);
    Expr out;
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (g[j].is_zero()) {
            continue;
        }
        long power = static_cast<long>(j) - static_cast<long>(k) + 1;
        if (power == 0) {
            out += g[j] * Expr(Atom::log(ue));
        } else {
            out += g[j] * ue.pow(power) / Expr(power);
        }
    }
    return out * scale;
}

// --------------------------------------------------------------- gauge

GaugeResult extract_gauge(const Expr& lagrangian, std::stop_token stop) {
    if (!is_null(lagrangian, stop)) {
        throw Error(Errc::NotNull, "Euler-Lagrange expression does not vanish");
    }
    Expr rest = lagrangian;
    Expr gauge;
    while (!rest.is_zero()) {
        check_stop(stop);
        auto n = jet_order(rest);
        if (!n) {
            gauge += integrate(rest, Atom::time());
            break;
        }
        if (*n == 0) {
            throw Error(Errc::NonexactTop, "remainder depends on q but on none of its derivatives");
        }
        const Atom top = Atom::jet(*n);
        Expr a = partial(rest, top);
        if (a.depends_on(top)) {
            throw Error(Errc::NonexactTop, "Lagrangian is not affine in its top derivative");
        }
        Expr piece = integrate(a, Atom::jet(*n - 1));
        gauge += piece;
        rest -= total_derivative(piece);
        auto m = jet_order(rest);
        if (m && *m >= *n) {
            throw Error(Errc::NonexactTop, "peeling did not lower the jet order");
        }
    }
    gauge = strip_constants(gauge);
    if (total_derivative(gauge) != lagrangian) {
        throw Error(Errc::IntegrationUnsupported, "reconstructed gauge fails D_t P = L");
    }
    return {gauge, Rational(0)};
}

// ------------------------------------------------------------ isolate_top

TopIsolation isolate_top(const Expr& e) {
    auto m = jet_order(e);
    if (!m) {
        throw Error(Errc::NoJet, "expression contains no jet variable");
    }
    const Atom top = Atom::jet(*m);
    bool nonlinear = false;
    e.for_each_atom([&](const Atom& a) {
        if (a.is_log() && a.argument().depends_on(top)) {
            nonlinear = true;
        }
    });
    if (nonlinear || e.den().contains(top) || e.num().degree_in(top) != 1) {
        throw Error(Errc::NonlinearTop, "expression is not affine in its top jet variable");
    }
    return {*m, Expr::fraction(e.num().coefficient(top, 1), e.den()),
            Expr::fraction(e.num().coefficient(top, 0), e.den())};
}

}  // namespace nullag
