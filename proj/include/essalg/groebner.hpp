#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "essalg/common.hpp"
#include "essalg/polynomial.hpp"

namespace essalg {

struct DivisionResult {
    Polynomial remainder;
    std::vector<Polynomial> quotients;  // one per divisor, p = sum q_i*d_i + r
};

/// Full multivariate division: remainder has no term divisible by any divisor's
/// leading monomial. Divisors are tried first-to-last at every step.
inline DivisionResult divide(const Polynomial& p, const std::vector<Polynomial>& divisors,
                             const MonomialOrder& ord, const Budget& budget,
                             BudgetUsage* usage = nullptr) {
    DivisionResult res;
    res.remainder = Polynomial::zero(p.nv);
    res.quotients.assign(divisors.size(), Polynomial::zero(p.nv));
    Polynomial h = p;
    while (!h.is_zero()) {
        if (usage) usage->see_degree(h.degree());
        if (h.degree() > budget.max_degree)
            throw ResourceError("degree", "degree budget " + std::to_string(budget.max_degree) +
                                              " exceeded during division");
        const Monomial& lm = h.leading_monomial();
        bool reduced = false;
        for (std::size_t k = 0; k < divisors.size(); ++k) {
            const Polynomial& g = divisors[k];
            if (g.is_zero() || !g.leading_monomial().divides(lm)) continue;
            Monomial t = g.leading_monomial().quotient_of(lm);
            Scalar c = h.leading_coeff() / g.leading_coeff();
            h = sub(h, mul_term(t, c, g), ord);
            res.quotients[k] =
                add(res.quotients[k], Polynomial::monomial_term(std::move(t), std::move(c)), ord);
            reduced = true;
            break;
        }
        if (!reduced) {
            res.remainder = add(res.remainder,
                                Polynomial::monomial_term(h.terms.front().first, h.terms.front().second),
                                ord);
            h.terms.erase(h.terms.begin());
        }
    }
    return res;
}

/// Reduced Groebner basis together with exact cofactor rows over the original
/// generator list: basis[i] == sum_j cofactors[i][j] * generators[j].
struct GroebnerBasis {
    std::vector<Polynomial> basis;  // monic, pairwise non-divisible leading monomials,
                                    // tails fully reduced, sorted ascending by leading monomial
    std::vector<std::vector<Polynomial>> cofactors;
    BudgetUsage usage;
};

namespace detail {

struct GbEntry {
    Polynomial g;
    std::vector<Polynomial> cof;
};

struct CritPair {
    std::size_t i, j;
    Monomial lcm;
    std::uint64_t seq;
};

/// Gebauer-Moeller pair update: prune new pairs by the divisibility and
/// product criteria, prune old pairs by the chain criterion.
inline void update_pairs(const std::vector<GbEntry>& G, std::vector<CritPair>& P, std::size_t t,
                         std::uint64_t& seq_counter) {
    const Monomial& lt = G[t].g.leading_monomial();
    struct Cand {
        std::size_t i;
        Monomial lcm;
        bool coprime;
        bool keep = true;
    };
    std::vector<Cand> C;
    C.reserve(t);
    for (std::size_t i = 0; i < t; ++i) {
        const Monomial& li = G[i].g.leading_monomial();
        C.push_back({i, li.lcm(lt), li.coprime_with(lt), true});
    }
    for (std::size_t a = 0; a < C.size(); ++a) {
        if (!C[a].keep || C[a].coprime) continue;
        for (std::size_t b = 0; b < C.size(); ++b) {
            if (a == b || !C[b].keep) continue;
            if (C[b].lcm != C[a].lcm && C[b].lcm.divides(C[a].lcm)) {
                C[a].keep = false;
                break;
            }
            if (C[b].lcm == C[a].lcm && b < a && !C[b].coprime) {
                C[a].keep = false;
                break;
            }
        }
    }
    std::vector<CritPair> surviving;
    surviving.reserve(P.size());
    for (auto& pr : P) {
        const Monomial& lij = pr.lcm;
        bool drop = lt.divides(lij) &&
                    G[pr.i].g.leading_monomial().lcm(lt) != lij &&
                    G[pr.j].g.leading_monomial().lcm(lt) != lij;
        if (!drop) surviving.push_back(std::move(pr));
    }
    P = std::move(surviving);
    for (auto& c : C)
        if (c.keep && !c.coprime) P.push_back({c.i, t, c.lcm, seq_counter++});
}

}  // namespace detail

/// Buchberger with normal selection (smallest lcm, then first-created) and
/// exact cofactor tracking. Deterministic: identical inputs give identical
/// output bytes.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& raw_generators,
                                const MonomialOrder& ord, const Budget& budget = {}) {
    GroebnerBasis out;
    for (const auto& g : raw_generators)
        if (g.is_zero()) throw InputError("ideal generators must be nonzero");
    if (raw_generators.empty()) return out;
    std::vector<Polynomial> generators;
    generators.reserve(raw_generators.size());
    for (const auto& g : raw_generators) generators.push_back(resort(g, ord));

    const std::size_t n_in = generators.size();
    std::vector<detail::GbEntry> G;
    std::vector<detail::CritPair> P;
    std::uint64_t seq_counter = 0;

    auto unit_row = [&](std::size_t j, const Scalar& scale_by) {
        std::vector<Polynomial> row(n_in, Polynomial::zero(generators[0].nv));
        row[j] = Polynomial::constant(generators[0].nv, scale_by);
        return row;
    };

    for (std::size_t j = 0; j < n_in; ++j) {
        out.usage.see_degree(generators[j].degree());
        Scalar inv = generators[j].leading_coeff().inverse();
        G.push_back({scale(generators[j], inv), unit_row(j, inv)});
        detail::update_pairs(G, P, G.size() - 1, seq_counter);
    }

    auto reduce_tracked = [&](Polynomial h, std::vector<Polynomial> cof) {
        std::vector<Polynomial> reducers;
        reducers.reserve(G.size());
        for (const auto& e : G) reducers.push_back(e.g);
        DivisionResult d = divide(h, reducers, ord, budget, &out.usage);
        for (std::size_t k = 0; k < G.size(); ++k) {
            if (d.quotients[k].is_zero()) continue;
            for (std::size_t j = 0; j < n_in; ++j)
                cof[j] = sub(cof[j], mul(d.quotients[k], G[k].cof[j], ord), ord);
        }
        return std::make_pair(std::move(d.remainder), std::move(cof));
    };

    while (!P.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < P.size(); ++k) {
            int c = ord.cmp(P[k].lcm, P[best].lcm);
            if (c < 0 || (c == 0 && P[k].seq < P[best].seq)) best = k;
        }
        detail::CritPair pr = P[best];
        P.erase(P.begin() + static_cast<std::ptrdiff_t>(best));

        if (++out.usage.pairs_processed > budget.max_pairs)
            throw ResourceError("pairs", "pair budget " + std::to_string(budget.max_pairs) +
                                             " exceeded in Buchberger loop");

        const Polynomial& gi = G[pr.i].g;
        const Polynomial& gj = G[pr.j].g;
        Monomial ui = gi.leading_monomial().quotient_of(pr.lcm);
        Monomial uj = gj.leading_monomial().quotient_of(pr.lcm);
        Scalar one = Scalar::one(gi.leading_coeff().field());
        Polynomial s = sub(mul_term(ui, one, gi), mul_term(uj, one, gj), ord);
        std::vector<Polynomial> cof(n_in, Polynomial::zero(gi.nv));
        for (std::size_t j = 0; j < n_in; ++j)
            cof[j] = sub(mul_term(ui, one, G[pr.i].cof[j]), mul_term(uj, one, G[pr.j].cof[j]), ord);

        auto [r, rcof] = reduce_tracked(std::move(s), std::move(cof));
        if (r.is_zero()) continue;
        Scalar inv = r.leading_coeff().inverse();
        r = scale(r, inv);
        for (auto& c : rcof) c = scale(c, inv);
        G.push_back({std::move(r), std::move(rcof)});
        detail::update_pairs(G, P, G.size() - 1, seq_counter);
    }

    // minimal basis: keep entries whose leading monomial no kept entry divides
    std::vector<std::size_t> order_by_lt(G.size());
    for (std::size_t k = 0; k < G.size(); ++k) order_by_lt[k] = k;
    std::sort(order_by_lt.begin(), order_by_lt.end(), [&](std::size_t a, std::size_t b) {
        return ord.less(G[a].g.leading_monomial(), G[b].g.leading_monomial());
    });
    std::vector<std::size_t> kept;
    for (std::size_t k : order_by_lt) {
        bool redundant = false;
        for (std::size_t h : kept)
            if (G[h].g.leading_monomial().divides(G[k].g.leading_monomial())) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(k);
    }

    // tail reduction against the other kept elements
    for (std::size_t a = 0; a < kept.size(); ++a) {
        std::vector<Polynomial> others;
        others.reserve(kept.size() - 1);
        for (std::size_t b = 0; b < kept.size(); ++b)
            if (b != a) others.push_back(G[kept[b]].g);
        DivisionResult d = divide(G[kept[a]].g, others, ord, budget, &out.usage);
        std::vector<Polynomial> cof = G[kept[a]].cof;
        std::size_t oi = 0;
        for (std::size_t b = 0; b < kept.size(); ++b) {
            if (b == a) continue;
            if (!d.quotients[oi].is_zero())
                for (std::size_t j = 0; j < n_in; ++j)
                    cof[j] = sub(cof[j], mul(d.quotients[oi], G[kept[b]].cof[j], ord), ord);
            ++oi;
        }
        out.basis.push_back(std::move(d.remainder));
        out.cofactors.push_back(std::move(cof));
    }

    for (std::size_t a = 0; a < out.basis.size(); ++a) {
        Polynomial expanded = Polynomial::zero(generators[0].nv);
        for (std::size_t j = 0; j < n_in; ++j)
            expanded = add(expanded, mul(out.cofactors[a][j], generators[j], ord), ord);
        if (expanded != out.basis[a]) throw MathError("cofactor identity violated");
    }
    return out;
}

/// An ideal in a fixed polynomial ring: generators plus its cached reduced
/// Groebner basis. Construction is the only place the basis is computed.
struct Ideal {
    Field field;
    MonomialOrder order;
    std::size_t nvars = 0;
    std::vector<Polynomial> generators;
    GroebnerBasis gb;
    Budget budget;

    static Ideal make(Field f, MonomialOrder ord, std::size_t nvars,
                      std::vector<Polynomial> gens, Budget budget = {}) {
        Ideal I;
        I.field = f;
        I.order = std::move(ord);
        I.nvars = nvars;
        for (auto& g : gens) {
            if (g.nv != nvars) throw MathError("generator in wrong ring");
            g = resort(g, I.order);
        }
        I.generators = std::move(gens);
        I.gb = buchberger(I.generators, I.order, budget);
        I.budget = budget;
        return I;
    }

    bool is_zero_ideal() const { return gb.basis.empty(); }

    /// The whole ring, i.e. the quotient is the zero ring.
    bool is_unit_ideal() const {
        return gb.basis.size() == 1 && gb.basis[0].is_constant() && !gb.basis[0].is_zero();
    }
};

inline Polynomial normal_form(const Polynomial& p, const Ideal& I, BudgetUsage* usage = nullptr) {
    return divide(p, I.gb.basis, I.order, I.budget, usage).remainder;
}

/// Exact coefficients c with p == sum c_j * generators[j], when p lies in the
/// ideal. The expansion is re-verified literally before returning.
inline std::optional<std::vector<Polynomial>> membership_witness(const Polynomial& p,
                                                                 const Ideal& I) {
    DivisionResult d = divide(p, I.gb.basis, I.order, I.budget, nullptr);
    if (!d.remainder.is_zero()) return std::nullopt;
    std::vector<Polynomial> coeffs(I.generators.size(), Polynomial::zero(p.nv));
    for (std::size_t k = 0; k < I.gb.basis.size(); ++k) {
        if (d.quotients[k].is_zero()) continue;
        for (std::size_t j = 0; j < I.generators.size(); ++j)
            coeffs[j] = add(coeffs[j], mul(d.quotients[k], I.gb.cofactors[k][j], I.order), I.order);
    }
    Polynomial expanded = Polynomial::zero(p.nv);
    for (std::size_t j = 0; j < I.generators.size(); ++j)
        expanded = add(expanded, mul(coeffs[j], I.generators[j], I.order), I.order);
    if (expanded != p) throw MathError("membership witness failed exact replay");
    return coeffs;
}

inline bool ideal_contains(const Polynomial& p, const Ideal& I) {
    return normal_form(p, I).is_zero();
}

/// Equality of ideals presented over the same ring and order, decided by
/// uniqueness of the reduced Groebner basis.
inline bool same_ideal(const Ideal& a, const Ideal& b) {
    if (!(a.order == b.order)) {
        // recompute one side under the other's order
        Ideal b2 = Ideal::make(b.field, a.order, b.nvars, b.generators, b.budget);
        return a.gb.basis == b2.gb.basis;
    }
    return a.gb.basis == b.gb.basis;
}

}  // namespace essalg
