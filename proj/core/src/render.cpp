#include <nullag/text.hpp>

#include <cctype>
#include <string>

namespace nullag {

namespace {

// ------------------------------------------------------------ canonical text

std::string text_factor(const Atom& a, std::uint32_t e) {
    std::string s = render_atom(a);
    if (e > 1) {
        s += "^" + std::to_string(e);
    }
    return s;
}

std::string text_monomial(const Monomial& m) {
    std::string s;
    for (const auto& [a, e] : m.factors()) {
        if (!s.empty()) {
            s += "*";
        }
        s += text_factor(a, e);
    }
    return s;
}

/// Term body without sign.
std::string text_term(const Polynomial::Term& t) {
    Rational c = abs(t.coeff);
    std::string mono = text_monomial(t.monomial);
    if (mono.empty()) {
        return to_string(c);
    }
    if (c == 1) {
        return mono;
    }
    return to_string(c) + "*" + mono;
}

std::string text_poly(const Polynomial& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string s;
    bool first = true;
    for (const auto& t : p.terms()) {
        bool neg = t.coeff < 0;
        if (first) {
            s += neg ? "-" : "";
        } else {
            s += neg ? " - " : " + ";
        }
        s += text_term(t);
        first = false;
    }
    return s;
}

std::string text_expr(const Expr& e) {
    if (e.den() == Polynomial(Rational(1))) {
        return text_poly(e.num());
    }
    std::string num = text_poly(e.num());
    if (e.num().size() > 1) {
        num = "(" + num + ")";
    }
    const auto& d = e.den();
    bool bare = d.is_constant() ||
                (d.size() == 1 && d.leading().coeff == 1 && d.leading().monomial.factors().size() == 1);
    std::string den = text_poly(d);
    if (!bare) {
        den = "(" + den + ")";
    }
    return num + "/" + den;
}

// -------------------------------------------------------------------- LaTeX

std::string latex_expr(const Expr& e);

std::string latex_atom(const Atom& a) {
    switch (a.kind()) {
        case Atom::Kind::Time: return "t";
        case Atom::Kind::Jet:
            switch (a.order()) {
                case 0: return "q";
                case 1: return "\\dot{q}";
                case 2: return "\\ddot{q}";
                case 3: return "\\dddot{q}";
                default: return "q^{(" + std::to_string(a.order()) + ")}";
            }
        case Atom::Kind::Param: {
            const std::string& n = a.name();
            std::size_t split = n.size();
            while (split > 0 && std::isdigit(static_cast<unsigned char>(n[split - 1])) != 0) {
                --split;
            }
            if (split > 0 && split < n.size()) {
                return n.substr(0, split) + "_{" + n.substr(split) + "}";
            }
            return n;
        }
        case Atom::Kind::Log: return "\\log\\left(" + latex_expr(a.argument()) + "\\right)";
    }
    return {};
}

std::string latex_monomial(const Monomial& m) {
    std::string s;
    for (const auto& [a, e] : m.factors()) {
        if (!s.empty()) {
            s += " ";
        }
        std::string base = latex_atom(a);
        if (e > 1) {
            if (a.is_log()) {
                base = "\\left(" + base + "\\right)";
            } else if (a.is_jet() && a.order() >= 4) {
                base = "{" + base + "}";
            }
            base += "^{" + std::to_string(e) + "}";
        }
        s += base;
    }
    return s;
}

std::string latex_rational(const Rational& c) {
    if (is_integer(c)) {
        return c.get_num().get_str();
    }
    return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}

std::string latex_poly(const Polynomial& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string s;
    bool first = true;
    for (const auto& t : p.terms()) {
        bool neg = t.coeff < 0;
        if (first) {
            s += neg ? "-" : "";
        } else {
            s += neg ? " - " : " + ";
        }
        Rational c = abs(t.coeff);
        std::string mono = latex_monomial(t.monomial);
        if (mono.empty()) {
            s += latex_rational(c);
        } else if (c == 1) {
            s += mono;
        } else {
            s += latex_rational(c) + " " + mono;
        }
        first = false;
    }
    return s;
}

std::string latex_expr(const Expr& e) {
    if (e.den() == Polynomial(Rational(1))) {
        return latex_poly(e.num());
    }
    return "\\frac{" + latex_poly(e.num()) + "}{" + latex_poly(e.den()) + "}";
}

// --------------------------------------------------------------------- JSON

std::string json_expr(const Expr& e);

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out + "\"";
}

std::string json_atom(const Atom& a, std::uint32_t e) {
    std::string s = "{\"kind\": ";
    switch (a.kind()) {
        case Atom::Kind::Time: s += "\"time\""; break;
        case Atom::Kind::Jet: s += "\"jet\", \"order\": " + std::to_string(a.order()); break;
        case Atom::Kind::Param: s += "\"param\", \"name\": " + json_string(a.name()); break;
        case Atom::Kind::Log: s += "\"log\", \"arg\": " + json_expr(a.argument()); break;
    }
    return s + ", \"exp\": " + std::to_string(e) + "}";
}

std::string json_poly(const Polynomial& p) {
    std::string s = "[";
    bool first_term = true;
    for (const auto& t : p.terms()) {
        if (!first_term) {
            s += ", ";
        }
        first_term = false;
        s += "{\"coeff\": {\"n\": " + json_string(t.coeff.get_num().get_str()) +
             ", \"d\": " + json_string(t.coeff.get_den().get_str()) + "}, \"atoms\": [";
        bool first_atom = true;
        for (const auto& [a, e] : t.monomial.factors()) {
            if (!first_atom) {
                s += ", ";
            }
            first_atom = false;
            s += json_atom(a, e);
        }
        s += "]}";
    }
    return s + "]";
}

std::string json_expr(const Expr& e) {
    return "{\"num\": " + json_poly(e.num()) + ", \"den\": " + json_poly(e.den()) + "}";
}

}  // namespace

std::string render_atom(const Atom& a) {
    switch (a.kind()) {
        case Atom::Kind::Time: return "t";
        case Atom::Kind::Jet:
            if (a.order() <= 3) {
                return "q" + std::string(a.order(), '\'');
            }
            return "q^(" + std::to_string(a.order()) + ")";
        case Atom::Kind::Param: return a.name();
        case Atom::Kind::Log: return "log(" + text_expr(a.argument()) + ")";
    }
    return {};
}

std::string render(const Expr& e, RenderMode mode) {
    switch (mode) {
        case RenderMode::Canonical: return text_expr(e);
        case RenderMode::Latex: return latex_expr(e);
        case RenderMode::Json: return json_expr(e);
    }
    return {};
}

}  // namespace nullag
