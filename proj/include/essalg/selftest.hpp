#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "essalg/comm.hpp"
#include "essalg/findim.hpp"
#include "essalg/hochschild.hpp"
#include "essalg/koszul.hpp"
#include "essalg/lie.hpp"

namespace essalg {

struct SuiteResult {
    std::string name;
    std::size_t checks = 0;
    std::vector<std::string> failures;
};

struct SelfTestReport {
    std::vector<SuiteResult> suites;
    std::size_t total_checks = 0;
    std::size_t total_failures = 0;
    bool ok = true;

    void add(SuiteResult s) {
        total_checks += s.checks;
        total_failures += s.failures.size();
        ok = ok && s.failures.empty();
        suites.push_back(std::move(s));
    }
};

namespace detail {

inline Polynomial random_poly(std::mt19937& rng, std::size_t nvars, const MonomialOrder& ord,
                              const Field& f, std::uint32_t max_exp = 3,
                              std::size_t max_terms = 4) {
    std::uniform_int_distribution<std::size_t> nterms(1, max_terms);
    std::uniform_int_distribution<std::uint32_t> exp(0, max_exp);
    std::uniform_int_distribution<long> coeff(-3, 3);
    std::vector<std::pair<Monomial, Scalar>> raw;
    const std::size_t t = nterms(rng);
    for (std::size_t k = 0; k < t; ++k) {
        std::vector<std::uint32_t> e(nvars);
        for (auto& x : e) x = exp(rng);
        long c = coeff(rng);
        if (c == 0) c = 1;
        raw.emplace_back(Monomial(std::move(e)), Scalar::from_int(f, c));
    }
    return Polynomial::normalized(nvars, std::move(raw), ord);
}

inline std::vector<Polynomial> random_generators(std::mt19937& rng, std::size_t nvars,
                                                 const MonomialOrder& ord, const Field& f) {
    std::uniform_int_distribution<std::size_t> count(1, 3);
    std::vector<Polynomial> gens;
    const std::size_t n = count(rng);
    for (std::size_t k = 0; k < n; ++k) {
        Polynomial p = random_poly(rng, nvars, ord, f);
        if (!p.is_zero()) gens.push_back(p);
    }
    if (gens.empty()) gens.push_back(Polynomial::variable(nvars, 0, f));
    return gens;
}

}  // namespace detail

/// Every complex the library builds must compose to zero.
inline SuiteResult selftest_differentials() {
    SuiteResult s{"differential-composition", 0, {}};
    Field Q = Field::rationals();
    auto try_one = [&](const std::string& label, auto&& build) {
        ++s.checks;
        try {
            build();
        } catch (const std::exception& e) {
            s.failures.push_back(label + ": " + e.what());
        }
    };
    try_one("bar(k)", [&] { bar_complex(FinDimAlgebra::ground_field(Q),
                                        Bimodule::regular(FinDimAlgebra::ground_field(Q)), 3)
                                .check_composition(); });
    try_one("bar(k x k)", [&] {
        FinDimAlgebra A = FinDimAlgebra::product_of_fields(Q);
        bar_complex(A, Bimodule::regular(A), 3).check_composition();
    });
    try_one("bar(dual numbers)", [&] {
        FinDimAlgebra A = FinDimAlgebra::dual_numbers(Q);
        bar_complex(A, Bimodule::regular(A), 3).check_composition();
    });
    try_one("bar(dual numbers, normalized)", [&] {
        FinDimAlgebra A = FinDimAlgebra::dual_numbers(Q);
        bar_complex(A, Bimodule::dual(A), 3, true).check_composition();
    });
    try_one("bar(2x2 matrices)", [&] {
        FinDimAlgebra A = FinDimAlgebra::matrix2(Q);
        bar_complex(A, Bimodule::regular(A), 2).check_composition();
    });
    try_one("chevalley-eilenberg(sl2)", [&] {
        LieAlgebra g = LieAlgebra::sl2(Q);
        chevalley_eilenberg(g, LieModule::trivial(g), 3).check_composition();
    });
    try_one("chevalley-eilenberg(sl2, adjoint)", [&] {
        LieAlgebra g = LieAlgebra::sl2(Q);
        chevalley_eilenberg(g, LieModule::adjoint(g), 3).check_composition();
    });
    try_one("chevalley-eilenberg(abelian 4)", [&] {
        LieAlgebra g = LieAlgebra::abelian(Q, 4);
        chevalley_eilenberg(g, LieModule::trivial(g), 4).check_composition();
    });
    try_one("koszul(x,y,z)", [&] {
        CommPresentation A = CommPresentation::parse(Q, {"x", "y", "z"}, {});
        koszul_complex(A, {A.parse_poly("x"), A.parse_poly("y"), A.parse_poly("z")});
    });
    try_one("koszul on the 4-sphere ring", [&] {
        CommPresentation A = CommPresentation::parse(
            Q, {"x1", "x2", "x3", "x4"}, {"x1^2 + x2^2 + x3^2 + x4^2 - 1"});
        koszul_complex(A, {A.parse_poly("x1"), A.parse_poly("x2")});
    });
    return s;
}

inline SuiteResult selftest_normal_form_idempotence(std::mt19937& rng) {
    SuiteResult s{"normal-form-idempotence", 0, {}};
    Field Q = Field::rationals();
    MonomialOrder ord = MonomialOrder::grevlex();
    for (std::size_t batch = 0; batch < 10; ++batch) {
        std::uniform_int_distribution<std::size_t> nv(2, 3);
        const std::size_t nvars = nv(rng);
        Ideal I = Ideal::make(Q, ord, nvars, detail::random_generators(rng, nvars, ord, Q));
        for (std::size_t k = 0; k < 20; ++k) {
            ++s.checks;
            Polynomial p = detail::random_poly(rng, nvars, ord, Q);
            Polynomial r1 = normal_form(p, I);
            Polynomial r2 = normal_form(r1, I);
            if (!(r1 == r2))
                s.failures.push_back("batch " + std::to_string(batch) + " poly " +
                                     std::to_string(k) + ": reduction is not idempotent");
        }
    }
    return s;
}

inline SuiteResult selftest_membership_replay(std::mt19937& rng) {
    SuiteResult s{"membership-witness-replay", 0, {}};
    Field Q = Field::rationals();
    MonomialOrder ord = MonomialOrder::grevlex();
    for (std::size_t k = 0; k < 20; ++k) {
        ++s.checks;
        std::uniform_int_distribution<std::size_t> nv(2, 3);
        const std::size_t nvars = nv(rng);
        std::vector<Polynomial> gens = detail::random_generators(rng, nvars, ord, Q);
        Ideal I = Ideal::make(Q, ord, nvars, gens);
        Polynomial p = Polynomial::zero(nvars);
        for (const auto& g : gens)
            p = add(p, mul(detail::random_poly(rng, nvars, ord, Q, 2, 2), g, ord), ord);
        auto w = membership_witness(p, I);
        if (!w) {
            s.failures.push_back("case " + std::to_string(k) +
                                 ": combination not recognized as a member");
            continue;
        }
        Polynomial expanded = Polynomial::zero(nvars);
        for (std::size_t j = 0; j < gens.size(); ++j)
            expanded = add(expanded, mul((*w)[j], gens[j], ord), ord);
        if (!(expanded == p))
            s.failures.push_back("case " + std::to_string(k) + ": witness does not expand back");
    }
    return s;
}

inline SuiteResult selftest_krull_order_invariance(std::mt19937& rng) {
    SuiteResult s{"krull-order-invariance", 0, {}};
    Field Q = Field::rationals();
    std::vector<std::string> names{"x", "y", "z"};
    for (std::size_t k = 0; k < 20; ++k) {
        ++s.checks;
        std::uniform_int_distribution<std::size_t> nv(2, 3);
        const std::size_t nvars = nv(rng);
        std::vector<std::string> vars(names.begin(),
                                      names.begin() + static_cast<std::ptrdiff_t>(nvars));
        std::vector<Polynomial> gens =
            detail::random_generators(rng, nvars, MonomialOrder::grevlex(), Q);
        CommPresentation Ag = CommPresentation::make(Q, vars, gens, MonomialOrder::grevlex());
        std::vector<Polynomial> gens_lex;
        for (const auto& g : gens) gens_lex.push_back(resort(g, MonomialOrder::lex()));
        CommPresentation Al = CommPresentation::make(Q, vars, gens_lex, MonomialOrder::lex());
        KrullResult a = krull_dimension(Ag);
        KrullResult b = krull_dimension(Al);
        if (a.zero_ring != b.zero_ring || a.dim != b.dim)
            s.failures.push_back("case " + std::to_string(k) +
                                 ": dimensions differ between grevlex and lex");
    }
    return s;
}

inline SuiteResult selftest_pbw_agreement(const Budget& budget) {
    SuiteResult s{"pbw-rewriting-agreement", 0, {}};
    Field Q = Field::rationals();
    LieAlgebra g = LieAlgebra::sl2(Q);
    NCPresentation U = universal_envelope(g);
    RewriteSystem R = complete_bounded(U, 6, budget);
    const std::size_t d = g.dim();
    std::vector<Word> words;
    for (std::uint32_t a = 0; a < d; ++a) {
        words.push_back({a});
        for (std::uint32_t b = 0; b < d; ++b) {
            words.push_back({a, b});
            for (std::uint32_t c = 0; c < d; ++c) words.push_back({a, b, c});
        }
    }
    for (const auto& w : words) {
        ++s.checks;
        NCPolynomial p = NCPolynomial::normalized(
            d, {{w, Scalar::one(Q)}});
        NCPolynomial via_rewriting = nc_reduce(p, R);
        NCPolynomial via_straightening = pbw_normal_form(p, g);
        if (!(via_rewriting == via_straightening))
            s.failures.push_back("word " + p.str(U.gens) +
                                 ": straightening and rewriting disagree");
    }
    return s;
}

inline SuiteResult selftest_buchberger_determinism(std::mt19937& rng) {
    SuiteResult s{"buchberger-determinism", 0, {}};
    Field Q = Field::rationals();
    MonomialOrder ord = MonomialOrder::grevlex();
    for (std::size_t k = 0; k < 10; ++k) {
        ++s.checks;
        std::uniform_int_distribution<std::size_t> nv(2, 3);
        const std::size_t nvars = nv(rng);
        std::vector<Polynomial> gens = detail::random_generators(rng, nvars, ord, Q);
        Ideal a = Ideal::make(Q, ord, nvars, gens);
        Ideal b = Ideal::make(Q, ord, nvars, gens);
        std::vector<std::string> vars;
        for (std::size_t i = 0; i < nvars; ++i) vars.push_back("v" + std::to_string(i));
        std::string sa, sb;
        for (const auto& p : a.gb.basis) sa += p.str(vars) + ";";
        for (const auto& p : b.gb.basis) sb += p.str(vars) + ";";
        if (sa != sb)
            s.failures.push_back("case " + std::to_string(k) + ": bases differ between runs");
    }
    return s;
}

inline SelfTestReport run_selftest(std::uint64_t seed = 20260818,
                                   const Budget& budget = {}) {
    SelfTestReport rep;
    std::mt19937 rng(static_cast<std::uint32_t>(seed));
    rep.add(selftest_differentials());
    rep.add(selftest_normal_form_idempotence(rng));
    rep.add(selftest_membership_replay(rng));
    rep.add(selftest_krull_order_invariance(rng));
    rep.add(selftest_pbw_agreement(budget));
    rep.add(selftest_buchberger_determinism(rng));
    return rep;
}

}  // namespace essalg
