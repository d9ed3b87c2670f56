#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "essalg/common.hpp"
#include "essalg/monomial.hpp"
#include "essalg/order.hpp"
#include "essalg/scalar.hpp"

namespace essalg {

/// Sparse multivariate polynomial. Terms are kept strictly descending under
/// the order the polynomial was normalized with, never with zero coefficients.
struct Polynomial {
    std::size_t nv = 0;
    std::vector<std::pair<Monomial, Scalar>> terms;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nv(nvars) {}

    static Polynomial zero(std::size_t nvars) { return Polynomial(nvars); }

    static Polynomial constant(std::size_t nvars, const Scalar& c) {
        Polynomial p(nvars);
        if (!c.is_zero()) p.terms.emplace_back(Monomial::one(nvars), c);
        return p;
    }

    static Polynomial variable(std::size_t nvars, std::size_t i, const Field& f) {
        Polynomial p(nvars);
        p.terms.emplace_back(Monomial::var(nvars, i), Scalar::one(f));
        return p;
    }

    static Polynomial monomial_term(Monomial m, Scalar c) {
        Polynomial p(m.nvars());
        if (!c.is_zero()) p.terms.emplace_back(std::move(m), std::move(c));
        return p;
    }

    /// Collapse an arbitrary term list into canonical form under `ord`.
    static Polynomial normalized(std::size_t nvars,
                                 std::vector<std::pair<Monomial, Scalar>> raw,
                                 const MonomialOrder& ord) {
        std::sort(raw.begin(), raw.end(),
                  [&](const auto& a, const auto& b) { return ord.greater(a.first, b.first); });
        Polynomial p(nvars);
        for (auto& t : raw) {
            if (!p.terms.empty() && p.terms.back().first == t.first) {
                p.terms.back().second = p.terms.back().second + t.second;
                if (p.terms.back().second.is_zero()) p.terms.pop_back();
            } else if (!t.second.is_zero()) {
                p.terms.push_back(std::move(t));
            }
        }
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    const Monomial& leading_monomial() const {
        if (terms.empty()) throw MathError("leading term of zero polynomial");
        return terms.front().first;
    }

    const Scalar& leading_coeff() const {
        if (terms.empty()) throw MathError("leading term of zero polynomial");
        return terms.front().second;
    }

    /// Total degree: max over terms (0 for the zero polynomial).
    std::uint32_t degree() const {
        std::uint32_t d = 0;
        for (const auto& t : terms) d = std::max(d, t.first.deg);
        return d;
    }

    bool is_constant() const {
        return terms.empty() || (terms.size() == 1 && terms[0].first.is_one());
    }

    bool operator==(const Polynomial& o) const { return nv == o.nv && terms == o.terms; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str(const std::vector<std::string>& vars) const {
        if (terms.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms) {
            std::string cs = c.str();
            bool neg = !cs.empty() && cs[0] == '-';
            if (s.empty()) {
                if (neg) s += "-", cs = cs.substr(1);
            } else {
                s += neg ? " - " : " + ";
                if (neg) cs = cs.substr(1);
            }
            if (m.is_one()) {
                s += cs;
            } else {
                if (cs != "1") s += cs.find('/') == std::string::npos ? cs + "*" : "(" + cs + ")*";
                s += m.str(vars);
            }
        }
        return s;
    }
};

inline Polynomial resort(const Polynomial& p, const MonomialOrder& ord) {
    return Polynomial::normalized(p.nv, p.terms, ord);
}

inline Polynomial neg(const Polynomial& p) {
    Polynomial r = p;
    for (auto& t : r.terms) t.second = -t.second;
    return r;
}

/// Merge two term lists sorted under the same order.
inline Polynomial add(const Polynomial& a, const Polynomial& b, const MonomialOrder& ord) {
    Polynomial r(a.nv ? a.nv : b.nv);
    r.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        int c = ord.cmp(a.terms[i].first, b.terms[j].first);
        if (c > 0) {
            r.terms.push_back(a.terms[i++]);
        } else if (c < 0) {
            r.terms.push_back(b.terms[j++]);
        } else {
            Scalar s = a.terms[i].second + b.terms[j].second;
            if (!s.is_zero()) r.terms.emplace_back(a.terms[i].first, std::move(s));
            ++i, ++j;
        }
    }
    for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
    return r;
}

inline Polynomial sub(const Polynomial& a, const Polynomial& b, const MonomialOrder& ord) {
    return add(a, neg(b), ord);
}

inline Polynomial scale(const Polynomial& p, const Scalar& c) {
    if (c.is_zero()) return Polynomial::zero(p.nv);
    Polynomial r = p;
    for (auto& t : r.terms) t.second = t.second * c;
    return r;
}

/// (c * m) * p. Multiplying by a monomial preserves the term ordering.
inline Polynomial mul_term(const Monomial& m, const Scalar& c, const Polynomial& p) {
    if (c.is_zero()) return Polynomial::zero(p.nv);
    Polynomial r(p.nv);
    r.terms.reserve(p.terms.size());
    for (const auto& t : p.terms) r.terms.emplace_back(t.first * m, t.second * c);
    return r;
}

inline Polynomial mul(const Polynomial& a, const Polynomial& b, const MonomialOrder& ord) {
    std::vector<std::pair<Monomial, Scalar>> raw;
    raw.reserve(a.terms.size() * b.terms.size());
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms) raw.emplace_back(ta.first * tb.first, ta.second * tb.second);
    return Polynomial::normalized(a.nv ? a.nv : b.nv, std::move(raw), ord);
}

inline Polynomial pow(const Polynomial& p, std::uint32_t k, const MonomialOrder& ord, const Field& f) {
    Polynomial r = Polynomial::constant(p.nv, Scalar::one(f));
    for (std::uint32_t i = 0; i < k; ++i) r = mul(r, p, ord);
    return r;
}

inline Polynomial monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return scale(p, p.leading_coeff().inverse());
}

inline Polynomial derivative(const Polynomial& p, std::size_t var, const Field& f) {
    Polynomial r(p.nv);
    for (const auto& [m, c] : p.terms) {
        if (m.e[var] == 0) continue;
        Monomial d = m;
        Scalar k = Scalar::from_int(f, static_cast<long>(d.e[var]));
        d.e[var] -= 1;
        d.deg -= 1;
        Scalar nc = c * k;
        if (!nc.is_zero()) r.terms.emplace_back(std::move(d), std::move(nc));
    }
    // dividing surviving terms by the same variable preserves the sort order
    return r;
}

/// Substitute variable `var` by the constant `value`, keeping the ambient ring.
inline Polynomial substitute_const(const Polynomial& p, std::size_t var, const Scalar& value,
                                   const MonomialOrder& ord, const Field& f) {
    std::vector<std::pair<Monomial, Scalar>> raw;
    raw.reserve(p.terms.size());
    for (const auto& [m, c] : p.terms) {
        Scalar factor = Scalar::one(f);
        for (std::uint32_t k = 0; k < m.e[var]; ++k) factor = factor * value;
        Monomial q = m;
        q.deg -= q.e[var];
        q.e[var] = 0;
        Scalar nc = c * factor;
        if (!nc.is_zero()) raw.emplace_back(std::move(q), std::move(nc));
    }
    return Polynomial::normalized(p.nv, std::move(raw), ord);
}

/// Substitute a polynomial for every variable: images[i] replaces variable i,
/// all images living in a common target ring with `new_nvars` variables.
inline Polynomial compose(const Polynomial& p, const std::vector<Polynomial>& images,
                          std::size_t new_nvars, const MonomialOrder& ord, const Field& f) {
    if (images.size() != p.nv) throw MathError("compose: one image per variable required");
    Polynomial acc = Polynomial::zero(new_nvars);
    for (const auto& [m, c] : p.terms) {
        Polynomial t = Polynomial::constant(new_nvars, c);
        for (std::size_t i = 0; i < m.e.size() && !t.is_zero(); ++i)
            if (m.e[i] > 0) t = mul(t, pow(images[i], m.e[i], ord, f), ord);
        acc = add(acc, t, ord);
    }
    return acc;
}

/// Reindex variables: new_index[i] is the slot of old variable i, or npos to
/// require that i does not occur. Resulting polynomial lives in `new_nvars`.
inline Polynomial map_variables(const Polynomial& p, const std::vector<std::size_t>& new_index,
                                std::size_t new_nvars, const MonomialOrder& ord) {
    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::pair<Monomial, Scalar>> raw;
    raw.reserve(p.terms.size());
    for (const auto& [m, c] : p.terms) {
        Monomial q = Monomial::one(new_nvars);
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (new_index[i] == npos)
                throw MathError("map_variables: dropped variable occurs in polynomial");
            q.e[new_index[i]] += m.e[i];
        }
        q.recompute_degree();
        raw.emplace_back(std::move(q), c);
    }
    return Polynomial::normalized(new_nvars, std::move(raw), ord);
}

}  // namespace essalg
