#include <nullag/expr.hpp>

#include "poly_bridge.hpp"

#include <algorithm>
#include <cassert>

namespace nullag {

using detail::poly_divide;
using detail::poly_gcd;

namespace {

Polynomial divide_known(const Polynomial& a, const Polynomial& b) {
    auto q = poly_divide(a, b);
    assert(q && "exact division expected");
    return *q;
}

void visit_atoms(const Polynomial& p, std::vector<Atom>& seen,
                 const std::function<void(const Atom&)>& f) {
    p.for_each_atom([&](const Atom& a) {
        if (std::find(seen.begin(), seen.end(), a) == seen.end()) {
            seen.push_back(a);
            f(a);
        }
    });
}

}  // namespace

// -------------------------------------------------------------- construction

Expr::Expr(const Rational& c) : Expr(from_coprime(Polynomial(c), Polynomial(Rational(1)))) {}

Expr::Expr(const Atom& atom) : num_(atom), den_(Rational(1)) {}

Expr::Expr(const Polynomial& p) : Expr(from_coprime(p, Polynomial(Rational(1)))) {}

Expr::Expr(Polynomial num, Polynomial den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

Expr Expr::from_coprime(Polynomial num, Polynomial den) {
    if (den.is_zero()) {
        throw Error(Errc::DivisionByZero, "denominator is zero");
    }
    if (num.is_zero()) {
        return Expr();
    }
    // Scale so that all coefficients are integers with joint content 1 and
    // the leading coefficient of den is positive.
    Integer l = 1;
    Integer g = 0;
    for (const auto* p : {&num, &den}) {
        for (const auto& t : p->terms()) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
        }
    }
    for (const auto* p : {&num, &den}) {
        for (const auto& t : p->terms()) {
            Integer c = t.coeff.get_num() * (l / t.coeff.get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        }
    }
    Rational scale = make_rational(l, g);
    if (den.leading().coeff < 0) {
        scale = -scale;
    }
    if (scale != 1) {
        num = num * scale;
        den = den * scale;
    }
    return Expr(std::move(num), std::move(den), Reduced{});
}

Expr Expr::fraction(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) {
        throw Error(Errc::DivisionByZero, "denominator is zero");
    }
    if (num.is_zero()) {
        return Expr();
    }
    Polynomial g = poly_gcd(num, den);
    if (g.is_constant()) {
        return from_coprime(num, den);
    }
    return from_coprime(divide_known(num, g), divide_known(den, g));
}

Rational Expr::constant_value() const {
    if (!is_constant()) {
        throw Error(Errc::DomainError, "expression is not a rational constant");
    }
    return num_.constant_value() / den_.constant_value();
}

bool Expr::contains(const Atom& atom) const { return num_.contains(atom) || den_.contains(atom); }

bool Expr::depends_on(const Atom& atom) const {
    bool found = false;
    for_each_atom_deep([&](const Atom& a) {
        if (a == atom) {
            found = true;
        }
    });
    return found;
}

void Expr::for_each_atom(const std::function<void(const Atom&)>& f) const {
    std::vector<Atom> seen;
    visit_atoms(num_, seen, f);
    visit_atoms(den_, seen, f);
}

void Expr::for_each_atom_deep(const std::function<void(const Atom&)>& f) const {
    for_each_atom([&](const Atom& a) {
        f(a);
        if (a.is_log()) {
            a.argument().for_each_atom_deep(f);
        }
    });
}

// ---------------------------------------------------------------- arithmetic

Expr Expr::operator-() const { return Expr(-num_, den_, Reduced{}); }

Expr Expr::operator+(const Expr& o) const {
    if (is_zero()) {
        return o;
    }
    if (o.is_zero()) {
        return *this;
    }
    if (den_ == o.den_) {
        return fraction(num_ + o.num_, den_);
    }
    if (den_.is_constant() || o.den_.is_constant()) {
        // Constant denominators keep the sum reduced.
        return from_coprime(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Polynomial g = poly_gcd(den_, o.den_);
    if (g.is_constant()) {
        return from_coprime(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Polynomial b1 = divide_known(den_, g);
    Polynomial d1 = divide_known(o.den_, g);
    Polynomial n = num_ * d1 + o.num_ * b1;
    if (n.is_zero()) {
        return Expr();
    }
    Polynomial h = poly_gcd(n, g);
    if (!h.is_constant()) {
        n = divide_known(n, h);
        g = divide_known(g, h);
    }
    return from_coprime(std::move(n), b1 * d1 * g);
}

Expr Expr::operator-(const Expr& o) const { return *this + (-o); }

Expr Expr::operator*(const Expr& o) const {
    if (is_zero() || o.is_zero()) {
        return Expr();
    }
    if (is_constant() && o.is_constant()) {
        return Expr(constant_value() * o.constant_value());
    }
    Polynomial a = num_;
    Polynomial b = den_;
    Polynomial c = o.num_;
    Polynomial d = o.den_;
    if (!d.is_constant()) {
        Polynomial g1 = poly_gcd(a, d);
        if (!g1.is_constant()) {
            a = divide_known(a, g1);
            d = divide_known(d, g1);
        }
    }
    if (!b.is_constant()) {
        Polynomial g2 = poly_gcd(c, b);
        if (!g2.is_constant()) {
            c = divide_known(c, g2);
            b = divide_known(b, g2);
        }
    }
    return from_coprime(a * c, b * d);
}

Expr Expr::operator/(const Expr& o) const {
    if (o.is_zero()) {
        throw Error(Errc::DivisionByZero, "division by zero expression");
    }
    return *this * from_coprime(o.den_, o.num_);
}

Expr Expr::pow(long exponent) const {
    if (exponent == 0) {
        return Expr(1);
    }
    if (exponent < 0) {
        if (is_zero()) {
            throw Error(Errc::DivisionByZero, "zero raised to a negative power");
        }
        auto k = static_cast<unsigned>(-exponent);
        return from_coprime(den_.pow(k), num_.pow(k));
    }
    auto k = static_cast<unsigned>(exponent);
    return from_coprime(num_.pow(k), den_.pow(k));
}

std::strong_ordering operator<=>(const Expr& a, const Expr& b) {
    if (auto c = a.num_ <=> b.num_; c != 0) {
        return c;
    }
    return a.den_ <=> b.den_;
}

Expr arith(ArithOp op, const Expr& a, const Expr& b) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div: return a / b;
    }
    return a;
}

Expr ipow(const Expr& base, long exponent) { return base.pow(exponent); }

Expr log(const Expr& argument) {
    if (argument.is_constant()) {
        if (argument.is_zero()) {
            throw Error(Errc::DomainError, "log(0)");
        }
        if (argument.constant_value() == 1) {
            return Expr(0);
        }
        throw Error(Errc::DomainError, "log of a rational constant other than 1");
    }
    return Expr(Atom::log(argument));
}

// ------------------------------------------------------------- derivatives

namespace {

Expr derive_poly(const Polynomial& p, const std::function<Expr(const Atom&)>& on_atom) {
    Expr out;
    p.for_each_atom([&](const Atom& a) {
        Expr da = a.is_log() ? derive(a.argument(), on_atom) / a.argument() : on_atom(a);
        if (!da.is_zero()) {
            out += Expr(p.formal_derivative(a)) * da;
        }
    });
    return out;
}

}  // namespace

Expr derive(const Expr& e, const std::function<Expr(const Atom&)>& on_atom) {
    Expr dn = derive_poly(e.num(), on_atom);
    if (e.den().is_constant()) {
        return dn * Expr(1 / e.den().constant_value());
    }
    Expr dd = derive_poly(e.den(), on_atom);
    if (dd.is_zero()) {
        return dn / Expr(e.den());
    }
    Expr den(e.den());
    Expr top = dn * den - Expr(e.num()) * dd;
    return top / den.pow(2);
}

Expr partial(const Expr& e, const Atom& atom) {
    if (atom.is_log()) {
        throw Error(Errc::UnsupportedAtom, "cannot differentiate with respect to a log atom");
    }
    if (!e.depends_on(atom)) {
        return Expr();
    }
    return derive(e, [&](const Atom& a) { return a == atom ? Expr(1) : Expr(0); });
}

// ------------------------------------------------------------ substitution

namespace {

class Substituter {
public:
    explicit Substituter(const std::map<Atom, Expr>& r) : repl_(r) {}

    Expr expr(const Expr& e) {
        if (!touches(e)) {
            return e;
        }
        Expr n = poly(e.num());
        Expr d = poly(e.den());
        if (d.is_zero()) {
            throw Error(Errc::DivisionByZero, "substitution makes a denominator vanish");
        }
        return n / d;
    }

private:
    bool touches(const Expr& e) const {
        bool hit = false;
        e.for_each_atom_deep([&](const Atom& a) {
            if (repl_.count(a) != 0) {
                hit = true;
            }
        });
        return hit;
    }

    const Expr& image(const Atom& a) {
        auto it = cache_.find(a);
        if (it != cache_.end()) {
            return it->second;
        }
        Expr v;
        if (auto r = repl_.find(a); r != repl_.end()) {
            v = r->second;
        } else if (a.is_log() && touches(a.argument())) {
            v = log(expr(a.argument()));
        } else {
            v = Expr(a);
        }
        return cache_.emplace(a, std::move(v)).first->second;
    }

    Expr poly(const Polynomial& p) {
        // Split into the untouched polynomial part and the rest.
        std::vector<Polynomial::Term> plain;
        Expr out;
        for (const auto& t : p.terms()) {
            std::vector<Monomial::Factor> keep;
            Expr factor(t.coeff);
            bool changed = false;
            for (const auto& [a, k] : t.monomial.factors()) {
                const Expr& img = image(a);
                if (img.is_polynomial() && img.num().size() == 1 && img == Expr(a)) {
                    keep.emplace_back(a, k);
                } else {
                    changed = true;
                    factor *= img.pow(static_cast<long>(k));
                }
            }
            Monomial rest = Monomial::from_factors(std::move(keep));
            if (!changed) {
                plain.push_back({rest, t.coeff});
            } else {
                out += factor * Expr(Polynomial(rest, Rational(1)));
            }
        }
        return out + Expr(Polynomial::from_terms(std::move(plain)));
    }

    const std::map<Atom, Expr>& repl_;
    std::map<Atom, Expr> cache_;
};

}  // namespace

Expr substitute(const Expr& e, const std::map<Atom, Expr>& replacements) {
    Substituter s(replacements);
    return s.expr(e);
}

Expr substitute(const Expr& e, const Atom& atom, const Expr& replacement) {
    return substitute(e, std::map<Atom, Expr>{{atom, replacement}});
}

// ----------------------------------------------------------------------- Tree

struct Tree::Node {
    Op op;
    Expr value;
    std::vector<Tree> children;
    long exponent = 0;
};

Tree Tree::leaf(Expr value) {
    return Tree(std::make_shared<const Node>(Node{Op::Leaf, std::move(value), {}, 0}));
}

Tree Tree::binary(Op op, Tree lhs, Tree rhs) {
    return Tree(std::make_shared<const Node>(Node{op, Expr(), {std::move(lhs), std::move(rhs)}, 0}));
}

Tree Tree::neg(Tree operand) {
    return Tree(std::make_shared<const Node>(Node{Op::Neg, Expr(), {std::move(operand)}, 0}));
}

Tree Tree::pow(Tree base, long exponent) {
    return Tree(std::make_shared<const Node>(Node{Op::Pow, Expr(), {std::move(base)}, exponent}));
}

Tree Tree::log(Tree argument) {
    return Tree(std::make_shared<const Node>(Node{Op::Log, Expr(), {std::move(argument)}, 0}));
}

Tree::Op Tree::op() const noexcept { return node_->op; }
const Expr& Tree::value() const { return node_->value; }
const std::vector<Tree>& Tree::children() const { return node_->children; }
long Tree::exponent() const { return node_->exponent; }

Expr normalize(const Tree& tree) {
    const auto& kids = tree.children();
    switch (tree.op()) {
        case Tree::Op::Leaf: return tree.value();
        case Tree::Op::Add: return normalize(kids[0]) + normalize(kids[1]);
        case Tree::Op::Sub: return normalize(kids[0]) - normalize(kids[1]);
        case Tree::Op::Mul: return normalize(kids[0]) * normalize(kids[1]);
        case Tree::Op::Div: return normalize(kids[0]) / normalize(kids[1]);
        case Tree::Op::Neg: return -normalize(kids[0]);
        case Tree::Op::Pow: return normalize(kids[0]).pow(tree.exponent());
        case Tree::Op::Log: return log(normalize(kids[0]));
    }
    return Expr();
}

}  // namespace nullag
