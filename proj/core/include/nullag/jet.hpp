#pragma once

#include <nullag/expr.hpp>

#include <optional>

namespace nullag {

/// k-fold total time derivative D_t = d/dt + sum_j q^(j+1) d/dq^(j).
Expr total_derivative(const Expr& e, unsigned k = 1);

/// Largest k with q^(k) occurring in e (Log arguments included).
std::optional<unsigned> jet_order(const Expr& e);

/// True if the time atom occurs anywhere in e.
bool is_autonomous(const Expr& e);

/// Evolutionary vector field sum_k D_t^k(phi) d/dq^(k).
struct Characteristic {
    Expr phi;
};

/// pr v(e), truncated at the highest jet order present in e.
Expr prolong(const Characteristic& v, const Expr& e);

}  // namespace nullag
