#pragma once

// Conversions between atom-keyed Polynomials and index-keyed FlatPolys, plus
// the gcd/division primitives Expr is built on.

#include "flat_poly.hpp"

#include <nullag/polynomial.hpp>

#include <optional>
#include <vector>

namespace nullag::detail {

/// Sorted, duplicate-free list of the atoms of a problem.
class AtomIndex {
public:
    void add(const Polynomial& p);
    /// Call once after all add() calls.
    void seal();
    int size() const noexcept { return static_cast<int>(atoms_.size()); }
    int index_of(const Atom& a) const;
    const Atom& atom(int i) const { return atoms_[static_cast<std::size_t>(i)]; }

    /// p scaled by the lcm of its coefficient denominators.
    FlatPoly to_flat(const Polynomial& p, Integer* scale = nullptr) const;
    Polynomial from_flat(const FlatPoly& p) const;

private:
    std::vector<Atom> atoms_;
};

/// Primitive gcd (over Q the gcd is defined up to a unit; this returns the
/// representative with integer coprime coefficients and positive lex-leading
/// coefficient).
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

/// a / b over Q; nullopt if b does not divide a.
std::optional<Polynomial> poly_divide(const Polynomial& a, const Polynomial& b);

}  // namespace nullag::detail
