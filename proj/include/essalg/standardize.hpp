#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "essalg/comm.hpp"
#include "essalg/nc.hpp"

namespace essalg {

namespace detail {

/// Replace every constant term c (the empty word) by c * e, where e is the
/// letter at index `e_idx`, and reinterpret words over `new_ngens` letters.
inline NCPolynomial constants_to_idempotent(const NCPolynomial& p, std::size_t new_ngens,
                                            std::uint32_t e_idx) {
    std::vector<std::pair<Word, Scalar>> raw;
    raw.reserve(p.terms.size());
    for (const auto& [w, c] : p.terms) {
        if (w.empty())
            raw.emplace_back(Word{e_idx}, c);
        else
            raw.emplace_back(w, c);
    }
    return NCPolynomial::normalized(new_ngens, std::move(raw));
}

}  // namespace detail

struct UnitizeResult {
    NCPresentation algebra;
    /// Index of the adjoined idempotent generator; set only when the input was
    /// already unital and the result is the product-with-scalars model.
    std::optional<std::size_t> idempotent;
};

/// Unitization A_1 = A (+) k. For a nonunital presentation the same relations
/// simply gain an ambient unit. For a unital one, A_1 is A x k, presented by
/// adjoining an idempotent e that acts as the unit of the A factor; constant
/// terms of the original relations become multiples of e because the embedding
/// of A sends its unit to e.
inline UnitizeResult unitize_tracked(const NCPresentation& A) {
    if (!A.unital) {
        NCPresentation out = NCPresentation::make(A.field, A.gens, A.relations, true);
        return {std::move(out), std::nullopt};
    }
    const std::size_t n = A.gens.size();
    std::vector<std::string> gens = A.gens;
    gens.push_back(fresh_name(A.gens, "e"));
    const auto e = static_cast<std::uint32_t>(n);
    const Field& f = A.field;
    const Scalar one = Scalar::one(f);

    std::vector<NCPolynomial> rels;
    rels.push_back(NCPolynomial::normalized(n + 1, {{Word{e, e}, one}, {Word{e}, -one}}));
    for (std::uint32_t i = 0; i < n; ++i) {
        rels.push_back(NCPolynomial::normalized(n + 1, {{Word{e, i}, one}, {Word{i}, -one}}));
        rels.push_back(NCPolynomial::normalized(n + 1, {{Word{i, e}, one}, {Word{i}, -one}}));
    }
    for (const auto& r : A.relations)
        rels.push_back(detail::constants_to_idempotent(r, n + 1, e));
    NCPresentation out = NCPresentation::make(f, std::move(gens), std::move(rels), true);
    return {std::move(out), n};
}

inline NCPresentation unitize(const NCPresentation& A) { return unitize_tracked(A).algebra; }

inline Polynomial nc_to_comm(const NCPolynomial& p, std::size_t nvars,
                             const MonomialOrder& ord) {
    std::vector<std::pair<Monomial, Scalar>> raw;
    raw.reserve(p.terms.size());
    for (const auto& [w, c] : p.terms) {
        Monomial m = Monomial::one(nvars);
        for (auto i : w) m.e[i] += 1;
        m.recompute_degree();
        raw.emplace_back(std::move(m), c);
    }
    return Polynomial::normalized(nvars, std::move(raw), ord);
}

/// Abelianization of a unital presentation: same generators, relations read
/// commutatively. Nonunital input must be unitized first.
inline CommPresentation abelianize(const NCPresentation& A,
                                   MonomialOrder ord = MonomialOrder::grevlex(),
                                   Budget budget = {}) {
    if (!A.unital)
        throw InputError("abelianize requires a unital presentation; apply unitize first");
    std::vector<Polynomial> rels;
    for (const auto& r : A.relations) {
        Polynomial p = nc_to_comm(r, A.gens.size(), ord);
        if (!p.is_zero()) rels.push_back(std::move(p));
    }
    return CommPresentation::make(A.field, A.gens, std::move(rels), std::move(ord), budget);
}

/// Standardization: abelianized unitization, with the factor decomposition
/// tracked when the input was unital (then the result is A^ab x k, split by
/// the adjoined idempotent).
struct StandardizedAlgebra {
    CommPresentation full;
    std::optional<std::size_t> idempotent;  // index of e in full.vars
    /// Factor at e = 1: the abelianization of a unital input, or `full` itself
    /// for nonunital input. This factor carries the geometry; the complementary
    /// factor at e = 0 is always the scalar field.
    CommPresentation principal;
    bool collapsed = false;  // principal factor is the zero ring
};

inline StandardizedAlgebra standardize(const NCPresentation& A, Budget budget = {}) {
    UnitizeResult u = unitize_tracked(A);
    StandardizedAlgebra S{abelianize(u.algebra, MonomialOrder::grevlex(), budget), u.idempotent,
                          CommPresentation{}, false};
    if (!u.idempotent) {
        S.principal = S.full;
    } else {
        const std::size_t e = *u.idempotent;
        const MonomialOrder ord = MonomialOrder::grevlex();
        std::vector<std::size_t> down(S.full.nvars(), static_cast<std::size_t>(-1));
        for (std::size_t i = 0, j = 0; i < S.full.nvars(); ++i)
            if (i != e) down[i] = j++;
        std::vector<Polynomial> rels;
        for (const auto& g : S.full.ideal.generators) {
            Polynomial h = substitute_const(g, e, Scalar::one(A.field), ord, A.field);
            if (h.is_zero()) continue;
            rels.push_back(map_variables(h, down, S.full.nvars() - 1, ord));
        }
        S.principal = CommPresentation::make(A.field, A.gens, std::move(rels), ord, budget);
    }
    S.collapsed = S.principal.is_zero_ring();
    return S;
}

/// Morphism between noncommutative presentations, given on generators.
struct AlgebraMorphism {
    NCPresentation source;
    NCPresentation target;
    std::vector<NCPolynomial> images;  // one per source generator, in the target algebra

    static AlgebraMorphism make(NCPresentation source, NCPresentation target,
                                std::vector<NCPolynomial> images) {
        if (images.size() != source.gens.size())
            throw InputError("morphism needs exactly one image per source generator");
        if (source.unital && !target.unital)
            throw InputError("a unital source requires a unital target");
        if (!target.unital)
            for (const auto& im : images)
                if (im.has_constant_term())
                    throw InputError("generator image has a constant term but the target is nonunital");
        return {std::move(source), std::move(target), std::move(images)};
    }

    NCPolynomial apply(const NCPolynomial& p) const {
        NCPolynomial out = NCPolynomial::zero(target.gens.size());
        for (const auto& [w, c] : p.terms) {
            NCPolynomial prod = NCPolynomial::constant(target.gens.size(), Scalar::one(source.field));
            for (auto i : w) prod = nc_mul(prod, images[i]);
            out = nc_add(out, nc_scale(prod, c));
        }
        return out;
    }
};

enum class MorphismStatus : std::uint8_t {
    Verified,            // relations provably map to zero
    VerifiedUpToDegree,  // relations reduce to zero under the bounded completion
    Rejected,            // some relation image is provably nonzero in the target
    Unverified,          // the bounded completion could not decide
};

struct MorphismCheck {
    MorphismStatus status;
    std::uint32_t degree_bound = 0;
    std::size_t failing_relation = 0;  // 1-based, set when status == Rejected/Unverified
    std::string detail;
};

inline std::string morphism_status_str(MorphismStatus s, std::uint32_t bound) {
    switch (s) {
        case MorphismStatus::Verified: return "verified";
        case MorphismStatus::VerifiedUpToDegree:
            return "verified-up-to-degree(" + std::to_string(bound) + ")";
        case MorphismStatus::Rejected: return "rejected";
        case MorphismStatus::Unverified: return "unverified";
    }
    return "?";
}

/// Check that every source relation maps into the target ideal, by bounded
/// rewriting in the target. Reduction to zero is always a proof of membership;
/// proving a nonzero image needs confluence covering the image's degree.
inline MorphismCheck verify_morphism(const AlgebraMorphism& m, std::uint32_t bound,
                                     const Budget& budget = {}) {
    RewriteSystem R = complete_bounded(m.target, bound, budget);
    for (std::size_t k = 0; k < m.source.relations.size(); ++k) {
        NCPolynomial image = m.apply(m.source.relations[k]);
        NCPolynomial residual = nc_reduce(image, R);
        if (residual.is_zero()) continue;
        bool provable = R.fully_confluent || (R.confluent_up_to_bound && image.degree() <= bound);
        MorphismCheck c;
        c.status = provable ? MorphismStatus::Rejected : MorphismStatus::Unverified;
        c.degree_bound = bound;
        c.failing_relation = k + 1;
        c.detail = "relation image has normal form " + residual.str(m.target.gens);
        return c;
    }
    MorphismCheck c;
    c.status = R.fully_confluent || R.trivial ? MorphismStatus::Verified
                                              : MorphismStatus::VerifiedUpToDegree;
    c.degree_bound = bound;
    return c;
}

/// Morphism from a noncommutative presentation to a commutative one. Groebner
/// normal forms decide membership outright here.
struct CommTargetMorphism {
    NCPresentation source;
    CommPresentation target;
    std::vector<Polynomial> images;

    static CommTargetMorphism make(NCPresentation source, CommPresentation target,
                                   std::vector<Polynomial> images) {
        if (images.size() != source.gens.size())
            throw InputError("morphism needs exactly one image per source generator");
        return {std::move(source), std::move(target), std::move(images)};
    }

    Polynomial apply(const NCPolynomial& p) const {
        const MonomialOrder& ord = target.ideal.order;
        Polynomial out = Polynomial::zero(target.nvars());
        for (const auto& [w, c] : p.terms) {
            Polynomial prod = Polynomial::constant(target.nvars(), c);
            for (auto i : w) prod = mul(prod, images[i], ord);
            out = add(out, prod, ord);
        }
        return out;
    }
};

inline MorphismCheck verify_morphism_comm(const CommTargetMorphism& m) {
    for (std::size_t k = 0; k < m.source.relations.size(); ++k) {
        Polynomial residual = normal_form(m.apply(m.source.relations[k]), m.target.ideal);
        if (!residual.is_zero()) {
            MorphismCheck c;
            c.status = MorphismStatus::Rejected;
            c.failing_relation = k + 1;
            c.detail = "relation image has normal form " + residual.str(m.target.vars);
            return c;
        }
    }
    return {MorphismStatus::Verified, 0, 0, ""};
}

}  // namespace essalg
