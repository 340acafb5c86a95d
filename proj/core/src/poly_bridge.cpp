#include "poly_bridge.hpp"

#include <algorithm>

namespace nullag::detail {

void AtomIndex::add(const Polynomial& p) {
    for (const auto& t : p.terms()) {
        for (const auto& [a, e] : t.monomial.factors()) {
            atoms_.push_back(a);
        }
    }
}

void AtomIndex::seal() {
    std::sort(atoms_.begin(), atoms_.end());
    atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
}

int AtomIndex::index_of(const Atom& a) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), a);
    return static_cast<int>(it - atoms_.begin());
}

FlatPoly AtomIndex::to_flat(const Polynomial& p, Integer* scale) const {
    Integer l = 1;
    for (const auto& t : p.terms()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
    std::vector<FlatTerm> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        Exps e(atoms_.size(), 0);
        for (const auto& [a, k] : t.monomial.factors()) {
            e[static_cast<std::size_t>(index_of(a))] = static_cast<std::int32_t>(k);
        }
        Integer c = t.coeff.get_num() * (l / t.coeff.get_den());
        out.push_back({std::move(e), std::move(c)});
    }
    if (scale != nullptr) {
        *scale = l;
    }
    return FlatPoly::from_terms(size(), std::move(out));
}

Polynomial AtomIndex::from_flat(const FlatPoly& p) const {
    std::vector<Polynomial::Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
        std::vector<Monomial::Factor> f;
        for (std::size_t v = 0; v < t.e.size(); ++v) {
            if (t.e[v] != 0) {
                f.emplace_back(atoms_[v], static_cast<std::uint32_t>(t.e[v]));
            }
        }
        out.push_back({Monomial::from_factors(std::move(f)), Rational(t.c)});
    }
    return Polynomial::from_terms(std::move(out));
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) {
        return {};
    }
    if ((a.is_constant() && !a.is_zero()) || (b.is_constant() && !b.is_zero())) {
        return Polynomial(Rational(1));
    }
    AtomIndex idx;
    idx.add(a);
    idx.add(b);
    idx.seal();
    FlatPoly g = gcd(idx.to_flat(a), idx.to_flat(b));
    Integer c = g.content();
    if (g.leading().c < 0) {
        c = -c;
    }
    return idx.from_flat(g.divided_by_term(Exps(static_cast<std::size_t>(idx.size()), 0), c));
}

std::optional<Polynomial> poly_divide(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) {
        return std::nullopt;
    }
    if (b.is_constant()) {
        return a * (1 / b.constant_value());
    }
    if (a.is_zero()) {
        return Polynomial();
    }
    AtomIndex idx;
    idx.add(a);
    idx.add(b);
    idx.seal();
    Integer la;
    Integer lb;
    FlatPoly fa = idx.to_flat(a, &la);
    FlatPoly fb = idx.to_flat(b, &lb);
    Integer cb = fb.content();
    FlatPoly pb = fb.divided_by_term(Exps(static_cast<std::size_t>(idx.size()), 0), cb);
    auto q = divide_exact(fa, pb);
    if (!q) {
        return std::nullopt;
    }
    // a/b = (fa/la) / (cb*pb/lb) = q * lb / (la * cb)
    return idx.from_flat(*q) * make_rational(lb, la * cb);
}

}  // namespace nullag::detail
