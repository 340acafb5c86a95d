#pragma once

// Integer polynomials over a fixed, dense variable index. This is the
// workhorse behind Expr canonicalization: callers map the atoms of a problem
// to indices 0..n-1 (in atom order), do gcd/division here, and map back.

#include <nullag/rational.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace nullag::detail {

using Exps = std::vector<std::int32_t>;

struct FlatTerm {
    Exps e;
    Integer c;
};

/// Terms sorted by decreasing lexicographic exponent order, no zero
/// coefficients, every exponent vector of length nvars.
class FlatPoly {
public:
    FlatPoly() = default;
    explicit FlatPoly(int nvars) : nvars_(nvars) {}
    static FlatPoly constant(int nvars, const Integer& c);
    static FlatPoly monomial(const Exps& e, const Integer& c);
    /// Sorts and combines like terms.
    static FlatPoly from_terms(int nvars, std::vector<FlatTerm> terms);

    int nvars() const noexcept { return nvars_; }
    const std::vector<FlatTerm>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    const FlatTerm& leading() const { return terms_.front(); }

    int degree(int v) const;
    /// Bit v set when variable v occurs.
    std::vector<bool> used() const;
    Integer content() const;
    Exps min_exps() const;

    FlatPoly operator-() const;
    FlatPoly operator+(const FlatPoly& o) const;
    FlatPoly operator-(const FlatPoly& o) const;
    FlatPoly operator*(const FlatPoly& o) const;
    FlatPoly scaled(const Integer& c) const;
    FlatPoly shifted(const Exps& e) const;
    /// Divides every coefficient by c (must be exact) and every exponent by e.
    FlatPoly divided_by_term(const Exps& e, const Integer& c) const;

    /// Coefficients in variable v, keyed by degree, with v's exponent zeroed.
    std::map<int, FlatPoly> coefficients(int v) const;
    /// Substitutes an integer for variable v.
    FlatPoly evaluate(int v, const Integer& value) const;

    friend bool operator==(const FlatPoly& a, const FlatPoly& b);

private:
    int nvars_ = 0;
    std::vector<FlatTerm> terms_;
};

/// Exact division over the integers; nullopt when b does not divide a.
std::optional<FlatPoly> divide_exact(const FlatPoly& a, const FlatPoly& b);

/// Greatest common divisor, primitive over Z with positive leading
/// coefficient, times the integer gcd of the contents.
FlatPoly gcd(const FlatPoly& a, const FlatPoly& b);

}  // namespace nullag::detail
