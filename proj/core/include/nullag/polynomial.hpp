#pragma once

#include <nullag/atom.hpp>
#include <nullag/rational.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace nullag {

/// Power product of atoms. Factors are kept sorted by atom order with
/// strictly positive exponents; the empty product is the unit monomial.
class Monomial {
public:
    using Factor = std::pair<Atom, std::uint32_t>;

    Monomial() = default;
    explicit Monomial(const Atom& atom, std::uint32_t exponent = 1);
    /// Factors may arrive unsorted and with repeats; zero exponents are dropped.
    static Monomial from_factors(std::vector<Factor> factors);

    std::span<const Factor> factors() const noexcept { return factors_; }
    std::uint32_t degree() const noexcept { return degree_; }
    bool is_unit() const noexcept { return factors_.empty(); }
    std::uint32_t exponent(const Atom& atom) const;

    Monomial operator*(const Monomial& other) const;
    /// The monomial with every power of the atom removed.
    Monomial without(const Atom& atom) const;
    Monomial with_exponent(const Atom& atom, std::uint32_t exponent) const;

    /// Degree-lexicographic order over the atom order.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) { return (a <=> b) == 0; }

private:
    std::vector<Factor> factors_;
    std::uint32_t degree_ = 0;
};

/// Sparse multivariate polynomial over the rationals. Terms are sorted by
/// decreasing monomial order and no stored coefficient is zero.
class Polynomial {
public:
    struct Term {
        Monomial monomial;
        Rational coeff;
    };

    Polynomial() = default;
    Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
    Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
    explicit Polynomial(const Atom& atom);
    Polynomial(const Monomial& monomial, const Rational& coeff);
    /// Combines like terms and drops zeros.
    static Polynomial from_terms(std::vector<Term> terms);

    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// Value of the constant polynomial; zero for the zero polynomial.
    Rational constant_value() const;
    const Term& leading() const { return terms_.front(); }

    bool contains(const Atom& atom) const;
    /// Calls f once per distinct atom, in no particular order.
    void for_each_atom(const std::function<void(const Atom&)>& f) const;
    std::uint32_t degree_in(const Atom& atom) const;
    /// Coefficient of atom^k, as a polynomial free of the atom.
    Polynomial coefficient(const Atom& atom, std::uint32_t k) const;
    /// Formal partial derivative treating every atom, Log atoms included, as
    /// an independent indeterminate.
    Polynomial formal_derivative(const Atom& atom) const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial pow(unsigned k) const;

    friend std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return (a <=> b) == 0; }

private:
    explicit Polynomial(std::vector<Term> sorted) : terms_(std::move(sorted)) {}
    std::vector<Term> terms_;
};

}  // namespace nullag
