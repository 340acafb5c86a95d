#include "flat_poly.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <random>

namespace nullag::detail {

// ---------------------------------------------------------------- FlatPoly

namespace {

bool lex_greater(const FlatTerm& a, const FlatTerm& b) { return a.e > b.e; }

std::vector<FlatTerm> combine(std::vector<FlatTerm> terms) {
    std::vector<FlatTerm> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().e == t.e) {
            out.back().c += t.c;
        } else {
            if (!out.empty() && out.back().c == 0) {
                out.pop_back();
            }
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().c == 0) {
        out.pop_back();
    }
    return out;
}

}  // namespace

FlatPoly FlatPoly::constant(int nvars, const Integer& c) {
    FlatPoly p(nvars);
    if (c != 0) {
        p.terms_.push_back({Exps(nvars, 0), c});
    }
    return p;
}

FlatPoly FlatPoly::monomial(const Exps& e, const Integer& c) {
    FlatPoly p(static_cast<int>(e.size()));
    if (c != 0) {
        p.terms_.push_back({e, c});
    }
    return p;
}

FlatPoly FlatPoly::from_terms(int nvars, std::vector<FlatTerm> terms) {
    std::sort(terms.begin(), terms.end(), lex_greater);
    FlatPoly p(nvars);
    p.terms_ = combine(std::move(terms));
    return p;
}

bool FlatPoly::is_constant() const noexcept {
    if (terms_.empty()) {
        return true;
    }
    if (terms_.size() != 1) {
        return false;
    }
    return std::all_of(terms_[0].e.begin(), terms_[0].e.end(), [](int x) { return x == 0; });
}

int FlatPoly::degree(int v) const {
    int d = 0;
    for (const auto& t : terms_) {
        d = std::max(d, t.e[v]);
    }
    return d;
}

std::vector<bool> FlatPoly::used() const {
    std::vector<bool> u(nvars_, false);
    for (const auto& t : terms_) {
        for (int v = 0; v < nvars_; ++v) {
            if (t.e[v] != 0) {
                u[v] = true;
            }
        }
    }
    return u;
}

Integer FlatPoly::content() const {
    Integer g = 0;
    for (const auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) {
            break;
        }
    }
    return g;
}

Exps FlatPoly::min_exps() const {
    if (terms_.empty()) {
        return Exps(nvars_, 0);
    }
    Exps m = terms_[0].e;
    for (const auto& t : terms_) {
        for (int v = 0; v < nvars_; ++v) {
            m[v] = std::min(m[v], t.e[v]);
        }
    }
    return m;
}

FlatPoly FlatPoly::operator-() const {
    FlatPoly p = *this;
    for (auto& t : p.terms_) {
        t.c = -t.c;
    }
    return p;
}

FlatPoly FlatPoly::operator+(const FlatPoly& o) const {
    FlatPoly p(std::max(nvars_, o.nvars_));
    p.terms_.reserve(terms_.size() + o.terms_.size());
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    while (i != terms_.end() && j != o.terms_.end()) {
        if (i->e > j->e) {
            p.terms_.push_back(*i++);
        } else if (i->e < j->e) {
            p.terms_.push_back(*j++);
        } else {
            Integer s = i->c + j->c;
            if (s != 0) {
                p.terms_.push_back({i->e, std::move(s)});
            }
            ++i;
            ++j;
        }
    }
    p.terms_.insert(p.terms_.end(), i, terms_.end());
    p.terms_.insert(p.terms_.end(), j, o.terms_.end());
    return p;
}

FlatPoly FlatPoly::operator-(const FlatPoly& o) const { return *this + (-o); }

FlatPoly FlatPoly::operator*(const FlatPoly& o) const {
    if (is_zero() || o.is_zero()) {
        return FlatPoly(nvars_);
    }
    std::vector<FlatTerm> out;
    out.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Exps e(nvars_);
            for (int v = 0; v < nvars_; ++v) {
                e[v] = a.e[v] + b.e[v];
            }
            out.push_back({std::move(e), a.c * b.c});
        }
    }
    return from_terms(nvars_, std::move(out));
}

FlatPoly FlatPoly::scaled(const Integer& c) const {
    if (c == 0) {
        return FlatPoly(nvars_);
    }
    FlatPoly p = *this;
    for (auto& t : p.terms_) {
        t.c *= c;
    }
    return p;
}

FlatPoly FlatPoly::shifted(const Exps& e) const {
    FlatPoly p = *this;
    for (auto& t : p.terms_) {
        for (int v = 0; v < nvars_; ++v) {
            t.e[v] += e[v];
        }
    }
    return p;
}

FlatPoly FlatPoly::divided_by_term(const Exps& e, const Integer& c) const {
    FlatPoly p = *this;
    for (auto& t : p.terms_) {
        for (int v = 0; v < nvars_; ++v) {
            t.e[v] -= e[v];
        }
        mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
    }
    return p;
}

std::map<int, FlatPoly> FlatPoly::coefficients(int v) const {
    std::map<int, std::vector<FlatTerm>> buckets;
    for (const auto& t : terms_) {
        FlatTerm s = t;
        s.e[v] = 0;
        buckets[t.e[v]].push_back(std::move(s));
    }
    std::map<int, FlatPoly> out;
    for (auto& [d, ts] : buckets) {
        // Zeroing one coordinate keeps the relative lex order of the rest.
        FlatPoly p(nvars_);
        p.terms_ = std::move(ts);
        out.emplace(d, std::move(p));
    }
    return out;
}

FlatPoly FlatPoly::evaluate(int v, const Integer& value) const {
    std::vector<FlatTerm> out;
    out.reserve(terms_.size());
    Integer pw;
    for (const auto& t : terms_) {
        FlatTerm s = t;
        if (t.e[v] != 0) {
            mpz_pow_ui(pw.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(t.e[v]));
            s.c *= pw;
            s.e[v] = 0;
        }
        out.push_back(std::move(s));
    }
    return from_terms(nvars_, std::move(out));
}

bool operator==(const FlatPoly& a, const FlatPoly& b) {
    if (a.terms_.size() != b.terms_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].e != b.terms_[i].e || a.terms_[i].c != b.terms_[i].c) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- division

std::optional<FlatPoly> divide_exact(const FlatPoly& a, const FlatPoly& b) {
    const int n = std::max(a.nvars(), b.nvars());
    if (b.is_zero()) {
        return std::nullopt;
    }
    if (a.is_zero()) {
        return FlatPoly(n);
    }
    const auto& lt = b.leading();
    if (b.size() == 1) {
        for (const auto& t : a.terms()) {
            for (int v = 0; v < n; ++v) {
                if (t.e[v] < lt.e[v]) {
                    return std::nullopt;
                }
            }
            if (!mpz_divisible_p(t.c.get_mpz_t(), lt.c.get_mpz_t())) {
                return std::nullopt;
            }
        }
        return a.divided_by_term(lt.e, lt.c);
    }
    // Cheap necessary conditions: per-variable degrees and the trailing terms.
    for (int v = 0; v < n; ++v) {
        if (b.degree(v) > a.degree(v)) {
            return std::nullopt;
        }
    }
    {
        const auto& ta = a.terms().back();
        const auto& tb = b.terms().back();
        for (int v = 0; v < n; ++v) {
            if (ta.e[v] < tb.e[v]) {
                return std::nullopt;
            }
        }
        if (!mpz_divisible_p(ta.c.get_mpz_t(), tb.c.get_mpz_t())) {
            return std::nullopt;
        }
    }

    std::map<Exps, Integer, std::greater<>> rem;
    for (const auto& t : a.terms()) {
        rem.emplace(t.e, t.c);
    }
    std::vector<FlatTerm> q;
    Exps key(n);
    Integer prod;
    while (!rem.empty()) {
        auto it = rem.begin();
        Exps qe(n);
        for (int v = 0; v < n; ++v) {
            qe[v] = it->first[v] - lt.e[v];
            if (qe[v] < 0) {
                return std::nullopt;
            }
        }
        if (!mpz_divisible_p(it->second.get_mpz_t(), lt.c.get_mpz_t())) {
            return std::nullopt;
        }
        Integer qc;
        mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), lt.c.get_mpz_t());
        for (const auto& t : b.terms()) {
            for (int v = 0; v < n; ++v) {
                key[v] = t.e[v] + qe[v];
            }
            prod = qc * t.c;
            auto [pos, inserted] = rem.try_emplace(key, 0);
            pos->second -= prod;
            if (pos->second == 0) {
                rem.erase(pos);
            }
        }
        q.push_back({std::move(qe), std::move(qc)});
    }
    // Quotient terms were produced in decreasing order.
    FlatPoly out = FlatPoly::from_terms(n, std::move(q));
    return out;
}

// ---------------------------------------------------------------- gcd

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    __extension__ using u128 = unsigned __int128;
    u128 p = static_cast<u128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
    std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
    std::uint64_t s = lo + hi;
    return s >= kPrime ? s - kPrime : s;
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    return s >= kPrime ? s - kPrime : s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e > 0) {
        if (e & 1U) {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1U;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kPrime - 2); }

std::uint64_t reduce(const Integer& c) {
    return mpz_fdiv_ui(c.get_mpz_t(), kPrime);
}

using UPoly = std::vector<std::uint64_t>;

void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

/// Image of p as a univariate polynomial in v after substituting the point
/// for every other variable.
UPoly image(const FlatPoly& p, int v, const std::vector<std::uint64_t>& point) {
    UPoly out(static_cast<std::size_t>(p.degree(v)) + 1, 0);
    for (const auto& t : p.terms()) {
        std::uint64_t c = reduce(t.c);
        for (int w = 0; w < p.nvars(); ++w) {
            if (w != v && t.e[w] != 0) {
                c = mulmod(c, powmod(point[w], static_cast<std::uint64_t>(t.e[w])));
            }
        }
        out[t.e[v]] = addmod(out[t.e[v]], c);
    }
    return out;
}

int univariate_gcd_degree(UPoly a, UPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a <- a mod b
        std::uint64_t inv = invmod(b.back());
        while (a.size() >= b.size()) {
            std::uint64_t f = mulmod(a.back(), inv);
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                a[i + shift] = submod(a[i + shift], mulmod(f, b[i]));
            }
            trim(a);
            if (a.empty()) {
                break;
            }
        }
        std::swap(a, b);
    }
    return a.empty() ? 0 : static_cast<int>(a.size()) - 1;
}

/// Makes the polynomial primitive over Z with a positive leading coefficient.
FlatPoly primitive(const FlatPoly& p) {
    if (p.is_zero()) {
        return p;
    }
    Integer c = p.content();
    if (p.leading().c < 0) {
        c = -c;
    }
    if (c == 1) {
        return p;
    }
    return p.divided_by_term(Exps(p.nvars(), 0), c);
}

class GcdEngine {
public:
    FlatPoly run(const FlatPoly& a, const FlatPoly& b) {
        const int n = std::max(a.nvars(), b.nvars());
        if (a.is_zero()) {
            return primitive_full(b, n);
        }
        if (b.is_zero()) {
            return primitive_full(a, n);
        }
        Integer ca = a.content();
        Integer cb = b.content();
        Integer ic;
        mpz_gcd(ic.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        Exps ma = a.min_exps();
        Exps mb = b.min_exps();
        Exps m(n);
        for (int v = 0; v < n; ++v) {
            m[v] = std::min(ma[v], mb[v]);
        }
        FlatPoly pa = primitive(a.divided_by_term(ma, ca));
        FlatPoly pb = primitive(b.divided_by_term(mb, cb));
        FlatPoly g = prim(pa, pb);
        return g.shifted(m).scaled(ic);
    }

private:
    static FlatPoly primitive_full(const FlatPoly& p, int n) {
        if (p.is_zero()) {
            return FlatPoly(n);
        }
        FlatPoly q = p;
        if (q.leading().c < 0) {
            q = -q;
        }
        return q;
    }

    /// Strips the monomial content; returns it in `m`.
    static FlatPoly strip_monomial(const FlatPoly& p, Exps& m) {
        m = p.min_exps();
        if (std::all_of(m.begin(), m.end(), [](int x) { return x == 0; })) {
            return p;
        }
        return p.divided_by_term(m, Integer(1));
    }

    /// Full gcd of arbitrary inputs, normalized primitive (contents ignored).
    FlatPoly any(const FlatPoly& a, const FlatPoly& b) {
        if (a.is_zero()) {
            return primitive(b);
        }
        if (b.is_zero()) {
            return primitive(a);
        }
        Exps ma;
        Exps mb;
        FlatPoly pa = primitive(strip_monomial(a, ma));
        FlatPoly pb = primitive(strip_monomial(b, mb));
        Exps m(ma.size());
        for (std::size_t v = 0; v < m.size(); ++v) {
            m[v] = std::min(ma[v], mb[v]);
        }
        return prim(pa, pb).shifted(m);
    }

    /// gcd with respect to v of the coefficients of p, primitive.
    FlatPoly content_in(const FlatPoly& p, int v) {
        auto coeffs = p.coefficients(v);
        std::vector<const FlatPoly*> list;
        for (const auto& [d, c] : coeffs) {
            list.push_back(&c);
        }
        std::sort(list.begin(), list.end(),
                  [](const FlatPoly* x, const FlatPoly* y) { return x->size() < y->size(); });
        FlatPoly g = primitive(*list.front());
        for (std::size_t i = 1; i < list.size() && !g.is_constant(); ++i) {
            g = any(g, *list[i]);
        }
        if (g.is_constant()) {
            return FlatPoly::constant(p.nvars(), 1);
        }
        return g;
    }

    /// gcd of primitive polynomials without monomial content.
    FlatPoly prim(FlatPoly a, FlatPoly b) {
        const int n = a.nvars();
        if (a.is_constant() || b.is_constant()) {
            return FlatPoly::constant(n, 1);
        }
        if (a == b) {
            return a;
        }
        if (a.size() < b.size()) {
            std::swap(a, b);
        }
        if (divide_exact(a, b)) {
            return b;
        }
        if (a.size() == b.size() && divide_exact(b, a)) {
            return a;
        }

        auto ua = a.used();
        auto ub = b.used();
        for (int v = 0; v < n; ++v) {
            if (ua[v] != ub[v]) {
                // The gcd cannot involve a variable missing from one side.
                return eliminate(a, b, v);
            }
        }

        std::vector<int> bound(n, -1);
        bool all_zero = true;
        for (int v = 0; v < n; ++v) {
            if (!ua[v]) {
                continue;
            }
            bound[v] = degree_bound(a, b, v);
            if (bound[v] != 0) {
                all_zero = false;
            }
        }
        if (all_zero) {
            return FlatPoly::constant(n, 1);
        }
        for (int v = 0; v < n; ++v) {
            if (bound[v] == 0) {
                return eliminate(a, b, v);
            }
        }
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (bound[v] > 0 &&
                (best < 0 || std::min(a.degree(v), b.degree(v)) <
                                 std::min(a.degree(best), b.degree(best)))) {
                best = v;
            }
        }
        return prs(a, b, best);
    }

    /// gcd(a, b) knowing it is free of v.
    FlatPoly eliminate(const FlatPoly& a, const FlatPoly& b, int v) {
        std::uniform_int_distribution<int> pick(2, 97);
        for (int attempt = 0; attempt < 3; ++attempt) {
            Integer r = pick(rng_);
            FlatPoly ar = a.degree(v) > 0 ? a.evaluate(v, r) : a;
            FlatPoly br = b.degree(v) > 0 ? b.evaluate(v, r) : b;
            if (ar.is_zero() || br.is_zero()) {
                continue;
            }
            FlatPoly h = any(ar, br);
            if (h.is_constant()) {
                return FlatPoly::constant(a.nvars(), 1);
            }
            if (divide_exact(a, h) && divide_exact(b, h)) {
                return h;
            }
        }
        FlatPoly ca = a.degree(v) > 0 ? content_in(a, v) : a;
        FlatPoly cb = b.degree(v) > 0 ? content_in(b, v) : b;
        return any(ca, cb);
    }

    /// Upper bound on deg_v gcd(a, b) from a modular image; -1 if undecided.
    int degree_bound(const FlatPoly& a, const FlatPoly& b, int v) {
        const int n = a.nvars();
        std::uniform_int_distribution<std::uint64_t> pick(1, kPrime - 1);
        const int da = a.degree(v);
        const int db = b.degree(v);
        for (int attempt = 0; attempt < 3; ++attempt) {
            std::vector<std::uint64_t> point(n);
            for (auto& x : point) {
                x = pick(rng_);
            }
            UPoly ia = image(a, v, point);
            UPoly ib = image(b, v, point);
            if (ia[da] == 0 || ib[db] == 0) {
                continue;
            }
            return univariate_gcd_degree(std::move(ia), std::move(ib));
        }
        return std::min(da, db);
    }

    FlatPoly prem(const FlatPoly& a, const FlatPoly& b, int v) {
        const int db = b.degree(v);
        auto bc = b.coefficients(v);
        const FlatPoly& lcb = bc.rbegin()->second;
        FlatPoly r = a;
        while (!r.is_zero()) {
            int dr = r.degree(v);
            if (dr < db) {
                break;
            }
            auto rc = r.coefficients(v);
            const FlatPoly& lcr = rc.rbegin()->second;
            Exps shift(r.nvars(), 0);
            shift[v] = dr - db;
            r = r * lcb - (b * lcr).shifted(shift);
            if (!r.is_zero()) {
                Integer c = r.content();
                if (c != 1) {
                    r = r.divided_by_term(Exps(r.nvars(), 0), c);
                }
            }
        }
        return r;
    }

    FlatPoly prs(FlatPoly a, FlatPoly b, int v) {
        const int n = a.nvars();
        FlatPoly ca = content_in(a, v);
        FlatPoly cb = content_in(b, v);
        FlatPoly gc = any(ca, cb);
        if (!ca.is_constant()) {
            a = *divide_exact(a, ca);
        }
        if (!cb.is_constant()) {
            b = *divide_exact(b, cb);
        }
        if (a.degree(v) < b.degree(v)) {
            std::swap(a, b);
        }
        while (true) {
            FlatPoly r = prem(a, b, v);
            if (r.is_zero()) {
                break;
            }
            if (r.degree(v) == 0) {
                b = FlatPoly::constant(n, 1);
                break;
            }
            a = std::move(b);
            FlatPoly cr = content_in(r, v);
            b = primitive(cr.is_constant() ? r : *divide_exact(r, cr));
        }
        return primitive(gc * b);
    }

    std::mt19937_64 rng_{0x5eed5eedULL};
};

}  // namespace

FlatPoly gcd(const FlatPoly& a, const FlatPoly& b) {
    GcdEngine engine;
    return engine.run(a, b);
}

}  // namespace nullag::detail
