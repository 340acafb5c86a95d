#pragma once

#include <nullag/atom.hpp>
#include <nullag/error.hpp>
#include <nullag/polynomial.hpp>
#include <nullag/rational.hpp>

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <vector>

namespace nullag {

/// Canonical exact rational function in atoms.
///
/// An Expr is num/den with the two polynomials coprime, integer coefficients
/// whose joint content is 1, and a positive leading coefficient in den. Zero
/// is 0/1. The representation is unique, so operator== decides semantic
/// equality (Log atoms count as algebraically independent transcendentals).
///
/// Values are immutable; every operation returns a new canonical Expr.
class Expr {
public:
    Expr() : num_(), den_(Rational(1)) {}
    Expr(const Rational& c);  // NOLINT(google-explicit-constructor)
    Expr(long c) : Expr(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    explicit Expr(const Atom& atom);
    explicit Expr(const Polynomial& p);

    /// Reduces num/den to canonical form. Throws DivisionByZero when den is 0.
    static Expr fraction(const Polynomial& num, const Polynomial& den);

    const Polynomial& num() const noexcept { return num_; }
    const Polynomial& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.is_constant(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    /// Value of a rational constant; throws DomainError otherwise.
    Rational constant_value() const;

    /// True if the atom occurs at top level (Log arguments are not searched).
    bool contains(const Atom& atom) const;
    /// True if the atom occurs anywhere, including inside Log arguments.
    bool depends_on(const Atom& atom) const;
    /// Visits each distinct top-level atom of num and den.
    void for_each_atom(const std::function<void(const Atom&)>& f) const;
    /// Visits atoms recursively through Log arguments (the Log atom itself
    /// is reported as well).
    void for_each_atom_deep(const std::function<void(const Atom&)>& f) const;

    Expr operator-() const;
    Expr operator+(const Expr& o) const;
    Expr operator-(const Expr& o) const;
    Expr operator*(const Expr& o) const;
    /// Throws DivisionByZero for a zero divisor.
    Expr operator/(const Expr& o) const;
    Expr& operator+=(const Expr& o) { return *this = *this + o; }
    Expr& operator-=(const Expr& o) { return *this = *this - o; }
    Expr& operator*=(const Expr& o) { return *this = *this * o; }
    Expr& operator/=(const Expr& o) { return *this = *this / o; }
    /// Integer power; negative exponents invert (DivisionByZero on 0^-k).
    Expr pow(long exponent) const;

    friend std::strong_ordering operator<=>(const Expr& a, const Expr& b);
    friend bool operator==(const Expr& a, const Expr& b) { return (a <=> b) == 0; }

private:
    struct Reduced {};
    Expr(Polynomial num, Polynomial den, Reduced);
    static Expr from_coprime(Polynomial num, Polynomial den);

    Polynomial num_;
    Polynomial den_;
};

enum class ArithOp { Add, Sub, Mul, Div };

Expr arith(ArithOp op, const Expr& a, const Expr& b);
Expr ipow(const Expr& base, long exponent);

/// log of a canonical expression as an Expr. log(1) is 0; the logarithm of
/// any other rational constant is rejected with DomainError.
Expr log(const Expr& argument);

/// Exact partial derivative with respect to a Time, Jet or Param atom, with the
/// chain rule through Log atoms. A Log atom as variable raises UnsupportedAtom.
Expr partial(const Expr& e, const Atom& atom);

/// Applies the derivation determined by its values on non-Log atoms;
/// Log atoms follow d(log R) = d(R)/R.
Expr derive(const Expr& e, const std::function<Expr(const Atom&)>& on_atom);

/// Replaces every occurrence of the atom, inside Log arguments too.
Expr substitute(const Expr& e, const Atom& atom, const Expr& replacement);
/// Simultaneous substitution of several atoms.
Expr substitute(const Expr& e, const std::map<Atom, Expr>& replacements);

/// Arithmetic expression tree over atoms, rationals, + - * /, integer powers
/// and log. Leaves may also embed an already canonical Expr.
class Tree {
public:
    enum class Op { Leaf, Add, Sub, Mul, Div, Neg, Pow, Log };

    static Tree leaf(Expr value);
    static Tree atom(const Atom& a) { return leaf(Expr(a)); }
    static Tree number(const Rational& r) { return leaf(Expr(r)); }
    static Tree binary(Op op, Tree lhs, Tree rhs);
    static Tree neg(Tree operand);
    static Tree pow(Tree base, long exponent);
    static Tree log(Tree argument);

    Op op() const noexcept;
    /// Leaf value; only valid for Op::Leaf.
    const Expr& value() const;
    /// Operands in order (empty for leaves).
    const std::vector<Tree>& children() const;
    /// Exponent of a Pow node.
    long exponent() const;

private:
    struct Node;
    explicit Tree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Evaluates the tree into canonical form. Throws DivisionByZero when a
/// divisor normalizes to zero.
Expr normalize(const Tree& tree);

}  // namespace nullag
