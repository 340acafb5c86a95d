#include <nullag/polynomial.hpp>

#include <algorithm>

namespace nullag {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(const Atom& atom, std::uint32_t exponent) {
    if (exponent > 0) {
        factors_.emplace_back(atom, exponent);
        degree_ = exponent;
    }
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    Monomial m;
    for (auto& [atom, e] : factors) {
        if (e == 0) {
            continue;
        }
        if (!m.factors_.empty() && m.factors_.back().first == atom) {
            m.factors_.back().second += e;
        } else {
            m.factors_.emplace_back(std::move(atom), e);
        }
        m.degree_ += e;
    }
    return m;
}

std::uint32_t Monomial::exponent(const Atom& atom) const {
    for (const auto& [a, e] : factors_) {
        if (a == atom) {
            return e;
        }
    }
    return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto i = factors_.begin();
    auto j = other.factors_.begin();
    while (i != factors_.end() && j != other.factors_.end()) {
        auto c = i->first <=> j->first;
        if (c < 0) {
            out.factors_.push_back(*i++);
        } else if (c > 0) {
            out.factors_.push_back(*j++);
        } else {
            out.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    out.factors_.insert(out.factors_.end(), i, factors_.end());
    out.factors_.insert(out.factors_.end(), j, other.factors_.end());
    out.degree_ = degree_ + other.degree_;
    return out;
}

Monomial Monomial::without(const Atom& atom) const {
    return with_exponent(atom, 0);
}

Monomial Monomial::with_exponent(const Atom& atom, std::uint32_t exponent) const {
    Monomial out;
    bool placed = false;
    for (const auto& f : factors_) {
        auto c = f.first <=> atom;
        if (c == 0) {
            placed = true;
            if (exponent > 0) {
                out.factors_.emplace_back(atom, exponent);
            }
            continue;
        }
        if (c > 0 && !placed) {
            placed = true;
            if (exponent > 0) {
                out.factors_.emplace_back(atom, exponent);
            }
        }
        out.factors_.push_back(f);
    }
    if (!placed && exponent > 0) {
        out.factors_.emplace_back(atom, exponent);
    }
    for (const auto& f : out.factors_) {
        out.degree_ += f.second;
    }
    return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) {
        return a.degree_ <=> b.degree_;
    }
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    for (; i != a.factors_.end() && j != b.factors_.end(); ++i, ++j) {
        auto c = i->first <=> j->first;
        if (c != 0) {
            // The side holding the earlier atom has the larger exponent there.
            return c < 0 ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        if (i->second != j->second) {
            return i->second <=> j->second;
        }
    }
    if (i != a.factors_.end()) {
        return std::strong_ordering::greater;
    }
    if (j != b.factors_.end()) {
        return std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

// -------------------------------------------------------------- Polynomial

namespace {

bool term_before(const Polynomial::Term& a, const Polynomial::Term& b) {
    return a.monomial > b.monomial;
}

std::vector<Polynomial::Term> combine_sorted(std::vector<Polynomial::Term> terms) {
    std::vector<Polynomial::Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().monomial == t.monomial) {
            out.back().coeff += t.coeff;
        } else {
            if (!out.empty() && out.back().coeff == 0) {
                out.pop_back();
            }
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coeff == 0) {
        out.pop_back();
    }
    return out;
}

}  // namespace

Polynomial::Polynomial(const Rational& constant) {
    if (constant != 0) {
        terms_.push_back({Monomial(), constant});
    }
}

Polynomial::Polynomial(const Atom& atom) { terms_.push_back({Monomial(atom), Rational(1)}); }

Polynomial::Polynomial(const Monomial& monomial, const Rational& coeff) {
    if (coeff != 0) {
        terms_.push_back({monomial, coeff});
    }
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), term_before);
    return Polynomial(combine_sorted(std::move(terms)));
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_unit());
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) {
        return Rational(0);
    }
    return terms_.back().monomial.is_unit() ? terms_.back().coeff : Rational(0);
}

bool Polynomial::contains(const Atom& atom) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return t.monomial.exponent(atom) > 0; });
}

void Polynomial::for_each_atom(const std::function<void(const Atom&)>& f) const {
    std::vector<const Atom*> seen;
    for (const auto& t : terms_) {
        for (const auto& [a, e] : t.monomial.factors()) {
            bool dup = std::any_of(seen.begin(), seen.end(), [&](const Atom* s) { return *s == a; });
            if (!dup) {
                seen.push_back(&a);
                f(a);
            }
        }
    }
}

std::uint32_t Polynomial::degree_in(const Atom& atom) const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) {
        d = std::max(d, t.monomial.exponent(atom));
    }
    return d;
}

Polynomial Polynomial::coefficient(const Atom& atom, std::uint32_t k) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        if (t.monomial.exponent(atom) == k) {
            out.push_back({t.monomial.without(atom), t.coeff});
        }
    }
    return from_terms(std::move(out));
}

Polynomial Polynomial::formal_derivative(const Atom& atom) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        auto e = t.monomial.exponent(atom);
        if (e == 0) {
            continue;
        }
        out.push_back({t.monomial.with_exponent(atom, e - 1), t.coeff * e});
    }
    return from_terms(std::move(out));
}

Polynomial Polynomial::operator-() const {
    auto out = terms_;
    for (auto& t : out) {
        t.coeff = -t.coeff;
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() && j != o.terms_.end()) {
        auto c = i->monomial <=> j->monomial;
        if (c > 0) {
            out.push_back(*i++);
        } else if (c < 0) {
            out.push_back(*j++);
        } else {
            Rational s = i->coeff + j->coeff;
            if (s != 0) {
                out.push_back({i->monomial, std::move(s)});
            }
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), i, terms_.end());
    out.insert(out.end(), j, o.terms_.end());
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) {
        return {};
    }
    if (o.is_constant()) {
        return *this * o.terms_[0].coeff;
    }
    if (is_constant()) {
        return o * terms_[0].coeff;
    }
    std::vector<Term> out;
    out.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            out.push_back({a.monomial * b.monomial, a.coeff * b.coeff});
        }
    }
    return from_terms(std::move(out));
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c == 0) {
        return {};
    }
    auto out = terms_;
    for (auto& t : out) {
        t.coeff *= c;
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial result(Rational(1));
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1U) {
            result = result * base;
        }
        k >>= 1U;
        if (k > 0) {
            base = base * base;
        }
    }
    return result;
}

std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) {
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    for (; i != a.terms_.end() && j != b.terms_.end(); ++i, ++j) {
        if (auto c = i->monomial <=> j->monomial; c != 0) {
            return c;
        }
        if (i->coeff != j->coeff) {
            return i->coeff < j->coeff ? std::strong_ordering::less : std::strong_ordering::greater;
        }
    }
    return a.terms_.size() <=> b.terms_.size();
}

}  // namespace nullag
