#pragma once

#include <nullag/expr.hpp>

#include <optional>
#include <string_view>

namespace nullag {

enum class Family { PreSchwarzian, L2, Schippers, Krivonos };

/// Identifies a built-in Lagrangian family member. The order is ignored for
/// PreSchwarzian and L2.
struct HierarchyId {
    Family family;
    int order = 0;
};

/// Built-in expression; UnsupportedOrder when the order is out of range
/// (Schippers needs n >= 3, Krivonos 3 <= n <= 6).
Expr builtin(const HierarchyId& id);

/// q''/q'
Expr pre_schwarzian();
/// (q''/q')^2 / 2
Expr lagrangian_l2();
/// {q, t} = q'''/q' - 3/2 (q''/q')^2
Expr schwarzian();

/// Higher Schwarzians from S_{n+1} = D_t S_n - (n-1)(q''/q') S_n, S_3 = {q, t}.
Expr schippers(int n);

/// SL(2,R)-invariant higher Schwarzians:
///   sigma_3 = {q, t}, sigma_4 = D_t sigma_3,
///   sigma_5 = D_t sigma_4 - sigma_3^2, sigma_6 = D_t sigma_5.
/// Orders above 6 are not pinned down and are rejected.
Expr krivonos(int n);

/// Looks up a family by its CLI name: presch, L2, schippers, sigma (alias
/// krivonos).
std::optional<Family> family_from_name(std::string_view name);

}  // namespace nullag
