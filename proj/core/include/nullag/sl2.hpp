#pragma once

#include <nullag/expr.hpp>

namespace nullag {

/// Infinitesimal SL(2,R) test: prolongations of the characteristics 1, q, q^2.
struct InvarianceReport {
    Expr residue_translation;
    Expr residue_scaling;
    Expr residue_special;
    bool invariant;
};

InvarianceReport sl2_residues(const Expr& e);

/// Substitutes the prolonged Mobius map w = (a q + b)/(c q + d), i.e.
/// q^(k) -> D_t^k w, into e. The coefficients must be jet- and time-free with
/// a d - b c != 0 (DomainError otherwise).
Expr mobius_substitute(const Expr& e, const Expr& a, const Expr& b, const Expr& c, const Expr& d);

/// Finite SL(2,R) test with symbolic parameters a, b, c and d = (1 + b c)/a.
/// The parameter names a, b, c, d are reserved (DomainError if e uses them).
bool sl2_finite_check(const Expr& e);

}  // namespace nullag
