#include <nullag/jet.hpp>
#include <nullag/sl2.hpp>

#include <map>

namespace nullag {

InvarianceReport sl2_residues(const Expr& e) {
    const Expr q(Atom::jet(0));
    InvarianceReport r{prolong({Expr(1)}, e), prolong({q}, e), prolong({q.pow(2)}, e), false};
    r.invariant = r.residue_translation.is_zero() && r.residue_scaling.is_zero() &&
                  r.residue_special.is_zero();
    return r;
}

namespace {

void require_constant(const Expr& x, const char* name) {
    x.for_each_atom_deep([&](const Atom& a) {
        if (a.is_jet() || a.is_time()) {
            throw Error(Errc::DomainError,
                        std::string("Mobius coefficient ") + name + " must be free of t and q");
        }
    });
}

}  // namespace

Expr mobius_substitute(const Expr& e, const Expr& a, const Expr& b, const Expr& c, const Expr& d) {
    require_constant(a, "a");
    require_constant(b, "b");
    require_constant(c, "c");
    require_constant(d, "d");
    if ((a * d - b * c).is_zero()) {
        throw Error(Errc::DomainError, "Mobius map has zero determinant");
    }
    auto top = jet_order(e);
    if (!top) {
        return e;
    }
    const Expr q(Atom::jet(0));
    std::map<Atom, Expr> images;
    Expr w = (a * q + b) / (c * q + d);
    for (unsigned k = 0; k <= *top; ++k) {
        if (k > 0) {
            w = total_derivative(w);
        }
        images.emplace(Atom::jet(k), w);
    }
    return substitute(e, images);
}

bool sl2_finite_check(const Expr& e) {
    e.for_each_atom_deep([](const Atom& x) {
        if (x.is_param() && (x.name() == "a" || x.name() == "b" || x.name() == "c" ||
                             x.name() == "d")) {
            throw Error(Errc::DomainError, "parameters a, b, c, d are reserved for the group action");
        }
    });
    const Expr a(Atom::param("a"));
    const Expr b(Atom::param("b"));
    const Expr c(Atom::param("c"));
    const Expr d = (Expr(1) + b * c) / a;
    return (mobius_substitute(e, a, b, c, d) - e).is_zero();
}

}  // namespace nullag
