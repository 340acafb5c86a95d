#include <nullag/hierarchy.hpp>
#include <nullag/jet.hpp>

#include <string>

namespace nullag {

namespace {

Expr q(unsigned k) { return Expr(Atom::jet(k)); }

}  // namespace

Expr pre_schwarzian() { return q(2) / q(1); }

Expr lagrangian_l2() { return Expr(Rational(1, 2)) * pre_schwarzian().pow(2); }

Expr schwarzian() {
    return q(3) / q(1) - Expr(Rational(3, 2)) * pre_schwarzian().pow(2);
}

Expr schippers(int n) {
    if (n < 3) {
        throw Error(Errc::UnsupportedOrder,
                    "Schippers Schwarzians start at order 3, got " + std::to_string(n));
    }
    Expr s = schwarzian();
    const Expr pre = pre_schwarzian();
    for (int m = 3; m < n; ++m) {
        s = total_derivative(s) - Expr(m - 1) * pre * s;
    }
    return s;
}

Expr krivonos(int n) {
    if (n < 3 || n > 6) {
        throw Error(Errc::UnsupportedOrder,
                    "invariant higher Schwarzians are available for 3 <= n <= 6, got " +
                        std::to_string(n));
    }
    const Expr s3 = schwarzian();
    if (n == 3) {
        return s3;
    }
    const Expr s4 = total_derivative(s3);
    if (n == 4) {
        return s4;
    }
    const Expr s5 = total_derivative(s4) - s3.pow(2);
    if (n == 5) {
        return s5;
    }
    return total_derivative(s5);
}

Expr builtin(const HierarchyId& id) {
    switch (id.family) {
        case Family::PreSchwarzian: return pre_schwarzian();
        case Family::L2: return lagrangian_l2();
        case Family::Schippers: return schippers(id.order);
        case Family::Krivonos: return krivonos(id.order);
    }
    throw Error(Errc::UnsupportedOrder, "unknown family");
}

std::optional<Family> family_from_name(std::string_view name) {
    if (name == "presch") {
        return Family::PreSchwarzian;
    }
    if (name == "L2") {
        return Family::L2;
    }
    if (name == "schippers") {
        return Family::Schippers;
    }
    if (name == "sigma" || name == "krivonos") {
        return Family::Krivonos;
    }
    return std::nullopt;
}

}  // namespace nullag
