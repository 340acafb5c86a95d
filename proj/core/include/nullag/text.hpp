#pragma once

#include <nullag/expr.hpp>

#include <string>
#include <string_view>

namespace nullag {

/// Parses the expression grammar:
///
///   atoms      t, q, q', q'', q''', q^(k), identifiers (parameters)
///   literals   integers; p/q is ordinary division
///   operators  ^ (integer exponent) > unary - > * / > + -, left-assoc
///   calls      log(e), sigma(n), schippers(n), presch(), L2()
///
/// There is no implicit multiplication. Errors carry 1-based line/column:
/// SyntaxError, or UnsupportedExponent for a non-integer exponent.
Tree parse(std::string_view source);

/// parse followed by normalize.
Expr parse_expr(std::string_view source);

enum class RenderMode { Canonical, Latex, Json };

/// canonical: re-parseable text in the input grammar;
/// latex: dot notation up to third order, q^{(k)} beyond;
/// json: {"num": [...], "den": [...]} term lists with exact integer strings.
std::string render(const Expr& e, RenderMode mode = RenderMode::Canonical);

/// Renders a single atom in the input grammar (q'', q^(4), t, name, log(...)).
std::string render_atom(const Atom& a);

}  // namespace nullag
