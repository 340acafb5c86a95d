#include <nullag/jet.hpp>

namespace nullag {

namespace {

Expr dt_atom(const Atom& a) {
    switch (a.kind()) {
        case Atom::Kind::Time: return Expr(1);
        case Atom::Kind::Jet: return Expr(Atom::jet(a.order() + 1));
        default: return Expr(0);
    }
}

}  // namespace

Expr total_derivative(const Expr& e, unsigned k) {
    Expr out = e;
    for (unsigned i = 0; i < k && !out.is_zero(); ++i) {
        out = derive(out, dt_atom);
    }
    return out;
}

std::optional<unsigned> jet_order(const Expr& e) {
    std::optional<unsigned> top;
    e.for_each_atom_deep([&](const Atom& a) {
        if (a.is_jet() && (!top || a.order() > *top)) {
            top = a.order();
        }
    });
    return top;
}

bool is_autonomous(const Expr& e) { return !e.depends_on(Atom::time()); }

Expr prolong(const Characteristic& v, const Expr& e) {
    auto top = jet_order(e);
    if (!top) {
        return Expr();
    }
    Expr out;
    Expr coeff = v.phi;
    for (unsigned k = 0; k <= *top; ++k) {
        if (k > 0) {
            coeff = total_derivative(coeff);
        }
        Expr de = partial(e, Atom::jet(k));
        if (!de.is_zero()) {
            out += coeff * de;
        }
    }
    return out;
}

}  // namespace nullag
