#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "essalg/comm.hpp"
#include "essalg/standardize.hpp"

namespace essalg {

/// Isomorphism witness between a claimed localization target and the
/// canonical model: generator images in both directions, with the model's
/// inverse variable last.
struct LocalizationWitness {
    std::vector<Polynomial> to_model;   // per target-standardization variable
    std::vector<Polynomial> to_target;  // per model variable (base variables, then t)
};

struct LocalizationVerdict {
    bool certified = false;
    std::string detail;
    MorphismCheck morphism;
    CommPresentation source_factor;  // standardization factor of the source
    CommPresentation target_factor;  // standardization factor of the target
    LocalizationModel model;         // canonical model of the source factor at f
};

/// Certify a morphism as the localization arrow at f: the target's
/// standardization must be isomorphic to the canonical model over the
/// source's, via the supplied witness. Without a witness nothing is decided.
inline LocalizationVerdict verify_essential_localization(
    const AlgebraMorphism& nu, const Polynomial& f,
    const std::optional<LocalizationWitness>& witness, std::uint32_t degree_bound = 8,
    const Budget& budget = {}) {
    LocalizationVerdict v;
    v.morphism = verify_morphism(nu, degree_bound, budget);
    if (v.morphism.status == MorphismStatus::Rejected) {
        v.detail = "the morphism itself fails verification: " + v.morphism.detail;
        return v;
    }
    if (v.morphism.status == MorphismStatus::Unverified) {
        v.detail = "cannot certify: the morphism could not be verified up to degree " +
                   std::to_string(degree_bound);
        return v;
    }

    StandardizedAlgebra src = standardize(nu.source, budget);
    StandardizedAlgebra tgt = standardize(nu.target, budget);
    v.source_factor = src.principal;
    v.target_factor = tgt.principal;
    const CommPresentation& P = v.source_factor;
    const CommPresentation& T = v.target_factor;
    if (f.nv != P.nvars()) throw InputError("the element lives in the wrong ring");
    v.model = localization_model(P, f);
    const CommPresentation& M = v.model.ring;

    // Invertibility in the model: t*f reduces to 1.
    {
        std::vector<std::size_t> up(P.nvars());
        for (std::size_t i = 0; i < P.nvars(); ++i) up[i] = i;
        Polynomial tf = mul(Polynomial::variable(M.nvars(), v.model.t_index, M.field),
                            map_variables(f, up, M.nvars(), M.ideal.order), M.ideal.order);
        Polynomial res = normal_form(
            sub(tf, Polynomial::constant(M.nvars(), Scalar::one(M.field)), M.ideal.order),
            M.ideal);
        if (!res.is_zero()) throw MathError("the model fails to invert the element");
    }

    if (!witness) {
        v.detail = "cannot certify: no isomorphism witness supplied";
        return v;
    }
    if (witness->to_model.size() != T.nvars() || witness->to_target.size() != M.nvars())
        throw InputError("witness image counts do not match the presentations");
    for (const auto& p : witness->to_model)
        if (p.nv != M.nvars()) throw InputError("witness image lives in the wrong ring");
    for (const auto& p : witness->to_target)
        if (p.nv != T.nvars()) throw InputError("witness image lives in the wrong ring");

    const Field& k = P.field;
    auto fwd = [&](const Polynomial& p) {  // T-ring polynomial -> model ring
        return compose(p, witness->to_model, M.nvars(), M.ideal.order, k);
    };
    auto bwd = [&](const Polynomial& p) {  // model-ring polynomial -> T-ring
        return compose(p, witness->to_target, T.nvars(), T.ideal.order, k);
    };

    for (std::size_t i = 0; i < T.ideal.generators.size(); ++i)
        if (!normal_form(fwd(T.ideal.generators[i]), M.ideal).is_zero()) {
            v.detail = "the forward witness does not respect target relation " +
                       std::to_string(i + 1);
            return v;
        }
    for (std::size_t i = 0; i < M.ideal.generators.size(); ++i)
        if (!normal_form(bwd(M.ideal.generators[i]), T.ideal).is_zero()) {
            v.detail = "the backward witness does not respect model relation " +
                       std::to_string(i + 1);
            return v;
        }
    for (std::size_t j = 0; j < T.nvars(); ++j) {
        Polynomial round = sub(bwd(witness->to_model[j]), Polynomial::variable(T.nvars(), j, k),
                               T.ideal.order);
        if (!normal_form(round, T.ideal).is_zero()) {
            v.detail = "the composite through the model is not the identity on " + T.vars[j];
            return v;
        }
    }
    for (std::size_t j = 0; j < M.nvars(); ++j) {
        Polynomial round = sub(fwd(witness->to_target[j]), Polynomial::variable(M.nvars(), j, k),
                               M.ideal.order);
        if (!normal_form(round, M.ideal).is_zero()) {
            v.detail = "the composite through the target is not the identity on " + M.vars[j];
            return v;
        }
    }
    for (std::size_t i = 0; i < P.nvars(); ++i) {
        Polynomial img = nc_to_comm(nu.images[i], T.nvars(), T.ideal.order);
        Polynomial tri = sub(fwd(img), Polynomial::variable(M.nvars(), i, k), M.ideal.order);
        if (!normal_form(tri, M.ideal).is_zero()) {
            v.detail = "the triangle over the base fails on " + P.vars[i];
            return v;
        }
    }
    v.certified = true;
    v.detail = "certified: the witness is an isomorphism onto the canonical model over the base";
    return v;
}

/// One chart of a cover candidate: the element, and optionally an explicit
/// arrow with its isomorphism witness. Charts without an arrow use the
/// canonical model and certify by construction.
struct CoverChart {
    Polynomial element;
    std::optional<AlgebraMorphism> arrow;
    std::optional<LocalizationWitness> witness;
};

struct ChartVerdict {
    bool certified = false;
    std::string detail;
};

struct CoverReport {
    bool verified = false;
    std::vector<ChartVerdict> charts;
    std::vector<Polynomial> unity;          // y_i with sum y_i f_i = 1 modulo the base ideal
    std::vector<Polynomial> failure_basis;  // reduced basis of (elements) + ideal on failure
    std::string detail;
};

inline CoverReport cover_check(const NCPresentation& base, const std::vector<CoverChart>& charts,
                               std::uint32_t degree_bound = 8, const Budget& budget = {}) {
    if (charts.empty()) throw InputError("a cover needs at least one chart");
    StandardizedAlgebra std_base = standardize(base, budget);
    if (std_base.collapsed)
        throw InputError("the base standardization is the zero ring; it has no covers");
    const CommPresentation& P = std_base.principal;
    const std::size_t n = P.nvars();

    CoverReport rep;
    bool all_charts = true;
    for (const auto& ch : charts) {
        if (ch.element.nv != n) throw InputError("chart element lives in the wrong ring");
        ChartVerdict cv;
        if (!ch.arrow) {
            LocalizationModel m = localization_model(P, ch.element);
            (void)m;
            cv.certified = true;
            cv.detail = "canonical chart: the target is the localization model itself";
        } else {
            LocalizationVerdict lv =
                verify_essential_localization(*ch.arrow, ch.element, ch.witness, degree_bound,
                                              budget);
            cv.certified = lv.certified;
            cv.detail = lv.detail;
        }
        all_charts = all_charts && cv.certified;
        rep.charts.push_back(std::move(cv));
    }

    std::vector<Polynomial> gens;
    gens.reserve(charts.size() + P.ideal.generators.size());
    for (const auto& ch : charts) gens.push_back(ch.element);
    for (const auto& g : P.ideal.generators) gens.push_back(g);
    Ideal J = Ideal::make(P.field, P.ideal.order, n, gens, P.ideal.budget);
    Polynomial one = Polynomial::constant(n, Scalar::one(P.field));
    auto w = membership_witness(one, J);
    if (!w) {
        rep.failure_basis = J.gb.basis;
        rep.detail = "partition of unity fails: 1 is not in the ideal of the chart elements";
        return rep;
    }
    rep.unity.assign(w->begin(), w->begin() + static_cast<std::ptrdiff_t>(charts.size()));

    // Exact replay: the chart-element part of the combination is 1 modulo the
    // base ideal.
    Polynomial acc = neg(one);
    for (std::size_t i = 0; i < charts.size(); ++i)
        acc = add(acc, mul(rep.unity[i], charts[i].element, P.ideal.order), P.ideal.order);
    if (!normal_form(acc, P.ideal).is_zero())
        throw MathError("partition-of-unity witness failed exact replay");

    rep.verified = all_charts;
    rep.detail = all_charts ? "verified: all charts certified and the unity witness replays"
                            : "partition of unity holds but some chart failed certification";
    return rep;
}

}  // namespace essalg
