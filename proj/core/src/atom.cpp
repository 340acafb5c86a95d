#include <nullag/atom.hpp>
#include <nullag/error.hpp>
#include <nullag/expr.hpp>

namespace nullag {

Atom Atom::time() { return Atom(Kind::Time, 0, {}, nullptr); }

Atom Atom::jet(unsigned order) { return Atom(Kind::Jet, order, {}, nullptr); }

Atom Atom::param(std::string name) {
    if (name.empty()) {
        throw Error(Errc::DomainError, "parameter name must be non-empty");
    }
    return Atom(Kind::Param, 0, std::move(name), nullptr);
}

Atom Atom::log(const Expr& argument) {
    if (argument.is_constant()) {
        throw Error(Errc::DomainError, "log of a rational constant is not an atom");
    }
    return Atom(Kind::Log, 0, {}, std::make_shared<const Expr>(argument));
}

const Expr& Atom::argument() const {
    if (!arg_) {
        throw Error(Errc::DomainError, "atom has no log argument");
    }
    return *arg_;
}

std::strong_ordering operator<=>(const Atom& a, const Atom& b) {
    if (a.kind_ != b.kind_) {
        return a.kind_ <=> b.kind_;
    }
    switch (a.kind_) {
        case Atom::Kind::Time:
            return std::strong_ordering::equal;
        case Atom::Kind::Jet:
            return a.order_ <=> b.order_;
        case Atom::Kind::Param:
            return a.name_.compare(b.name_) <=> 0;
        case Atom::Kind::Log:
            if (a.arg_ == b.arg_) {
                return std::strong_ordering::equal;
            }
            return *a.arg_ <=> *b.arg_;
    }
    return std::strong_ordering::equal;
}

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::UnsupportedAtom: return "UnsupportedAtom";
        case Errc::DomainError: return "DomainError";
        case Errc::NotNull: return "NotNull";
        case Errc::NonexactTop: return "NonexactTop";
        case Errc::IntegrationUnsupported: return "IntegrationUnsupported";
        case Errc::NonlinearTop: return "NonlinearTop";
        case Errc::NoJet: return "NoJet";
        case Errc::UnsupportedOrder: return "UnsupportedOrder";
        case Errc::MissingAtom: return "MissingAtom";
        case Errc::NumericSingularity: return "NumericSingularity";
        case Errc::NullODE: return "NullODE";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::UnsupportedExponent: return "UnsupportedExponent";
        case Errc::Cancelled: return "Cancelled";
    }
    return "Unknown";
}

}  // namespace nullag
