#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "essalg/common.hpp"
#include "essalg/expr.hpp"
#include "essalg/groebner.hpp"

namespace essalg {

/// Finitely presented commutative algebra k[vars]/ideal.
struct CommPresentation {
    Field field;
    std::vector<std::string> vars;
    Ideal ideal;

    static CommPresentation make(Field f, std::vector<std::string> vars,
                                 std::vector<Polynomial> relations,
                                 MonomialOrder ord = MonomialOrder::grevlex(), Budget budget = {}) {
        CommPresentation A;
        A.field = f;
        check_names(vars);
        A.vars = std::move(vars);
        for (std::size_t i = 0; i < relations.size(); ++i)
            if (relations[i].is_zero())
                throw InputError("relation " + std::to_string(i + 1) + " is the zero polynomial");
        A.ideal = Ideal::make(f, std::move(ord), A.vars.size(), std::move(relations), budget);
        return A;
    }

    static CommPresentation parse(Field f, std::vector<std::string> vars,
                                  const std::vector<std::string>& relation_exprs,
                                  MonomialOrder ord = MonomialOrder::grevlex(), Budget budget = {}) {
        std::vector<Polynomial> rels;
        rels.reserve(relation_exprs.size());
        for (const auto& s : relation_exprs) rels.push_back(parse_comm_polynomial(s, vars, f, ord));
        return make(f, std::move(vars), std::move(rels), std::move(ord), budget);
    }

    std::size_t nvars() const { return vars.size(); }
    bool is_zero_ring() const { return ideal.is_unit_ideal(); }

    Polynomial parse_poly(const std::string& s) const {
        return parse_comm_polynomial(s, vars, field, ideal.order);
    }

    static void check_names(const std::vector<std::string>& vars) {
        std::set<std::string> seen;
        for (const auto& v : vars) {
            if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
                throw InputError("invalid variable name \"" + v + "\"");
            for (char c : v)
                if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                    throw InputError("invalid variable name \"" + v + "\"");
            if (!seen.insert(v).second) throw InputError("duplicate variable name \"" + v + "\"");
        }
    }
};

struct KrullResult {
    bool zero_ring = false;
    long dim = -1;  // -1 only for the zero ring
};

/// Krull dimension via the largest variable set independent modulo the
/// leading-term ideal of the reduced basis.
inline KrullResult krull_dimension(const CommPresentation& A) {
    if (A.is_zero_ring()) return {true, -1};
    const std::size_t n = A.nvars();
    if (A.ideal.gb.basis.empty()) return {false, static_cast<long>(n)};
    if (n > 24)
        throw ResourceError("variables", "dimension search supports at most 24 variables");

    std::vector<std::uint32_t> supports;
    supports.reserve(A.ideal.gb.basis.size());
    for (const auto& g : A.ideal.gb.basis) {
        std::uint32_t s = 0;
        const Monomial& m = g.leading_monomial();
        for (std::size_t i = 0; i < n; ++i)
            if (m.e[i] > 0) s |= (1u << i);
        supports.push_back(s);
    }

    long best = 0;
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    for (std::uint32_t S = 0; S <= full; ++S) {
        int size = std::popcount(S);
        if (size <= best) continue;
        bool independent = true;
        for (std::uint32_t s : supports)
            if ((s & ~S) == 0) {  // support contained in S
                independent = false;
                break;
            }
        if (independent) best = size;
    }
    return {false, best};
}

/// Generators of the elimination ideal: elements of I supported on the kept
/// variables. Returned in the ambient ring.
inline std::vector<Polynomial> eliminate(const Ideal& I, const std::vector<std::uint8_t>& keep) {
    if (keep.size() != I.nvars) throw MathError("keep mask length mismatch");
    std::vector<std::uint8_t> elim(keep.size());
    bool any_elim = false;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        elim[i] = keep[i] ? 0 : 1;
        any_elim = any_elim || !keep[i];
    }
    if (I.generators.empty()) return {};
    if (!any_elim) return I.gb.basis;
    GroebnerBasis gb = buchberger(I.generators, MonomialOrder::block(elim), I.budget);
    std::vector<Polynomial> result;
    for (const auto& g : gb.basis)
        if (std::all_of(g.terms.begin(), g.terms.end(),
                        [&](const auto& t) { return t.first.supported_on(keep); }))
            result.push_back(g);
    return result;
}

/// Colon ideal (I : f) computed through the tag-variable intersection
/// I cap (f), then exact division by f.
inline Ideal colon_ideal(const Ideal& I, const Polynomial& f) {
    if (f.is_zero()) throw InputError("colon ideal requires a nonzero divisor");
    const std::size_t n = I.nvars;
    const std::size_t t = n;  // tag variable slot
    std::vector<std::size_t> up(n);
    for (std::size_t i = 0; i < n; ++i) up[i] = i;
    MonomialOrder ext_ord = MonomialOrder::grevlex();

    Polynomial tvar = Polynomial::variable(n + 1, t, I.field);
    Polynomial one = Polynomial::constant(n + 1, Scalar::one(I.field));
    std::vector<Polynomial> J;
    for (const auto& g : I.generators)
        J.push_back(mul(tvar, map_variables(g, up, n + 1, ext_ord), ext_ord));
    J.push_back(mul(sub(one, tvar, ext_ord), map_variables(f, up, n + 1, ext_ord), ext_ord));

    std::vector<std::uint8_t> elim(n + 1, 0);
    elim[t] = 1;
    GroebnerBasis gb = buchberger(J, MonomialOrder::block(elim), I.budget);

    std::vector<Polynomial> quotients;
    std::vector<std::size_t> down(n + 1, static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < n; ++i) down[i] = i;
    for (const auto& g : gb.basis) {
        bool keep_g = std::all_of(g.terms.begin(), g.terms.end(),
                                  [&](const auto& term) { return term.first.e[t] == 0; });
        if (!keep_g) continue;
        Polynomial gd = map_variables(g, down, n, I.order);
        DivisionResult d = divide(gd, {f}, I.order, I.budget);
        if (!d.remainder.is_zero()) throw MathError("intersection element not divisible by f");
        if (!d.quotients[0].is_zero()) quotients.push_back(d.quotients[0]);
    }
    return Ideal::make(I.field, I.order, n, std::move(quotients), I.budget);
}

/// Rabinowitsch model of the localization A[1/f]: adjoin t with t*f = 1.
struct LocalizationModel {
    CommPresentation ring;
    std::size_t t_index = 0;
    Polynomial f;  // in the original ring
};

inline std::string fresh_name(const std::vector<std::string>& taken, const std::string& hint) {
    std::set<std::string> used(taken.begin(), taken.end());
    if (!used.count(hint)) return hint;
    for (int k = 1;; ++k) {
        std::string cand = hint + "_" + std::to_string(k);
        if (!used.count(cand)) return cand;
    }
}

inline LocalizationModel localization_model(const CommPresentation& A, const Polynomial& f,
                                            const std::string& hint = "t") {
    if (normal_form(f, A.ideal).is_zero())
        throw InputError("cannot localize at an element that is zero in the algebra");
    const std::size_t n = A.nvars();
    MonomialOrder ord = MonomialOrder::grevlex();
    std::vector<std::size_t> up(n);
    for (std::size_t i = 0; i < n; ++i) up[i] = i;

    std::vector<std::string> vars = A.vars;
    vars.push_back(fresh_name(A.vars, hint));

    std::vector<Polynomial> rels;
    for (const auto& g : A.ideal.generators) rels.push_back(map_variables(g, up, n + 1, ord));
    Polynomial tf = mul(Polynomial::variable(n + 1, n, A.field),
                        map_variables(f, up, n + 1, ord), ord);
    rels.push_back(sub(tf, Polynomial::constant(n + 1, Scalar::one(A.field)), ord));

    LocalizationModel m{CommPresentation::make(A.field, std::move(vars), std::move(rels), ord,
                                               A.ideal.budget),
                        n, f};
    return m;
}

/// Same presented ring plus extra relations, under the same order.
inline CommPresentation add_relations(const CommPresentation& A, std::vector<Polynomial> extra) {
    std::vector<Polynomial> rels = A.ideal.generators;
    for (auto& e : extra) {
        if (e.is_zero()) continue;
        rels.push_back(std::move(e));
    }
    return CommPresentation::make(A.field, A.vars, std::move(rels), A.ideal.order, A.ideal.budget);
}

}  // namespace essalg
