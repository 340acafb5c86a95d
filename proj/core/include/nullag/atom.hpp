#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>

namespace nullag {

class Expr;

/// A symbol occurring in expressions: the time t, a jet coordinate q^(k), a
/// named constant parameter, or the logarithm of a canonical expression.
///
/// Atoms are totally ordered: Time < Jet(0) < Jet(1) < ... < Param (by name)
/// < Log (by the canonical form of the argument). Log atoms are compared
/// structurally, so no interning table is needed.
class Atom {
public:
    enum class Kind : std::uint8_t { Time = 0, Jet = 1, Param = 2, Log = 3 };

    static Atom time();
    static Atom jet(unsigned order);
    static Atom param(std::string name);
    /// The argument must already be canonical. Rejects rational constants
    /// (their logarithm is not an atom of the field).
    static Atom log(const Expr& argument);

    Kind kind() const noexcept { return kind_; }
    bool is_time() const noexcept { return kind_ == Kind::Time; }
    bool is_jet() const noexcept { return kind_ == Kind::Jet; }
    bool is_param() const noexcept { return kind_ == Kind::Param; }
    bool is_log() const noexcept { return kind_ == Kind::Log; }

    /// Jet order; meaningful only for Jet atoms.
    unsigned order() const noexcept { return order_; }
    /// Parameter name; empty for other kinds.
    const std::string& name() const noexcept { return name_; }
    /// Log argument; only valid for Log atoms.
    const Expr& argument() const;

    friend std::strong_ordering operator<=>(const Atom& a, const Atom& b);
    friend bool operator==(const Atom& a, const Atom& b) { return (a <=> b) == 0; }

private:
    Atom(Kind kind, unsigned order, std::string name, std::shared_ptr<const Expr> arg)
        : kind_(kind), order_(order), name_(std::move(name)), arg_(std::move(arg)) {}

    Kind kind_;
    unsigned order_;
    std::string name_;
    std::shared_ptr<const Expr> arg_;
};

}  // namespace nullag
