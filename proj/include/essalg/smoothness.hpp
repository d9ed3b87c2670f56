#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "essalg/comm.hpp"
#include "essalg/koszul.hpp"
#include "essalg/standardize.hpp"

namespace essalg {

/// Presentation of the differentials module: for A = k[x_1..x_n]/(f_1..f_m)
/// the module is the cokernel of the transposed Jacobian, so the m x n matrix
/// of reduced partial derivatives determines it.
struct KahlerPresentation {
    std::size_t nvars = 0;
    std::size_t nrels = 0;
    std::vector<std::vector<Polynomial>> jacobian;  // nrels rows, nvars columns
};

inline KahlerPresentation kahler_presentation(const CommPresentation& A) {
    if (A.ideal.is_unit_ideal())
        throw InputError("the zero ring has no differentials presentation");
    KahlerPresentation K;
    K.nvars = A.nvars();
    K.nrels = A.ideal.generators.size();
    for (const auto& g : A.ideal.generators) {
        std::vector<Polynomial> row;
        row.reserve(K.nvars);
        for (std::size_t c = 0; c < K.nvars; ++c)
            row.push_back(normal_form(derivative(g, c, A.field), A.ideal));
        K.jacobian.push_back(std::move(row));
    }
    return K;
}

namespace detail {

inline Polynomial poly_det(const std::vector<std::vector<Polynomial>>& J,
                           const std::vector<std::size_t>& rows,
                           const std::vector<std::size_t>& cols, std::size_t nvars,
                           const MonomialOrder& ord) {
    const std::size_t k = rows.size();
    if (k == 1) return J[rows[0]][cols[0]];
    Polynomial acc = Polynomial::zero(nvars);
    std::vector<std::size_t> sub_cols(cols.begin() + 1, cols.end());
    for (std::size_t i = 0; i < k; ++i) {
        const Polynomial& pivot = J[rows[i]][cols[0]];
        if (pivot.is_zero()) continue;
        std::vector<std::size_t> sub_rows;
        sub_rows.reserve(k - 1);
        for (std::size_t t = 0; t < k; ++t)
            if (t != i) sub_rows.push_back(rows[t]);
        Polynomial cof = mul(pivot, poly_det(J, sub_rows, sub_cols, nvars, ord), ord);
        acc = (i % 2 == 0) ? add(acc, cof, ord) : sub(acc, cof, ord);
    }
    return acc;
}

/// All k x k minors of J in row-subset-major, column-subset-minor lex order.
inline std::vector<Polynomial> jacobian_minors(const KahlerPresentation& K, std::size_t k,
                                               const MonomialOrder& ord) {
    std::vector<Polynomial> out;
    if (k == 0 || k > K.nrels || k > K.nvars) return out;
    auto row_sets = subsets_lex(K.nrels, k);
    auto col_sets = subsets_lex(K.nvars, k);
    for (const auto& rs : row_sets)
        for (const auto& cs : col_sets) {
            Polynomial d = poly_det(K.jacobian, rs, cs, K.nvars, ord);
            if (!d.is_zero()) out.push_back(std::move(d));
        }
    return out;
}

}  // namespace detail

/// Jacobian criterion at codimension c = nvars - dim: smooth exactly when the
/// defining ideal together with the c x c minors of the Jacobian is the unit
/// ideal. Over the rationals this certifies geometric regularity.
struct SmoothResult {
    bool smooth = false;
    std::size_t dim = 0;
    std::size_t minor_size = 0;
    std::vector<Polynomial> witness;  // reduced basis of ideal + minors
    std::string note;
};

inline SmoothResult jacobian_smooth(const CommPresentation& A) {
    if (A.ideal.is_unit_ideal()) throw InputError("the zero ring has no smoothness verdict");
    SmoothResult out;
    KrullResult kr = krull_dimension(A);
    out.dim = static_cast<std::size_t>(kr.dim);
    const std::size_t n = A.nvars();
    const std::size_t c = n - out.dim;
    out.minor_size = c;

    std::vector<Polynomial> gens = A.ideal.generators;
    if (c == 0) {
        gens.push_back(Polynomial::constant(n, Scalar::one(A.field)));
    } else {
        KahlerPresentation K = kahler_presentation(A);
        for (auto& m : detail::jacobian_minors(K, c, A.ideal.order)) gens.push_back(std::move(m));
    }
    Ideal W = Ideal::make(A.field, A.ideal.order, n, std::move(gens), A.ideal.budget);
    out.smooth = W.is_unit_ideal();
    out.witness = W.gb.basis;
    if (A.field.is_rationals())
        out.note = "jacobian criterion over the rationals: the verdict is geometric regularity";
    return out;
}

/// Unramifiedness as vanishing of the differentials module: the zeroth
/// Fitting ideal (full-size n x n minors) together with the defining ideal
/// must be the unit ideal.
struct UnramifiedResult {
    bool unramified = false;
    std::size_t minor_size = 0;
    std::vector<Polynomial> witness;
};

inline UnramifiedResult unramified_check(const CommPresentation& A) {
    if (A.ideal.is_unit_ideal()) throw InputError("the zero ring has no unramifiedness verdict");
    UnramifiedResult out;
    const std::size_t n = A.nvars();
    out.minor_size = n;
    std::vector<Polynomial> gens = A.ideal.generators;
    if (n == 0) {
        gens.push_back(Polynomial::constant(0, Scalar::one(A.field)));
    } else {
        KahlerPresentation K = kahler_presentation(A);
        for (auto& m : detail::jacobian_minors(K, n, A.ideal.order)) gens.push_back(std::move(m));
    }
    Ideal W = Ideal::make(A.field, A.ideal.order, n, std::move(gens), A.ideal.budget);
    out.unramified = W.is_unit_ideal();
    out.witness = W.gb.basis;
    return out;
}

enum class EssMode { Smooth, Unramified, Etale };

inline std::string ess_mode_str(EssMode m) {
    switch (m) {
        case EssMode::Smooth: return "smooth";
        case EssMode::Unramified: return "unramified";
        default: return "etale";
    }
}

/// Verdict of the standardize-then-test pipeline on an associative
/// presentation. For unital inputs the standardization is a product with a
/// ground-field factor, which passes every mode; the commutative factor
/// carries the actual test. A collapsed factor makes the verdict vacuous.
struct EssentialVerdict {
    EssMode mode = EssMode::Smooth;
    StandardizedAlgebra standardization;
    bool collapsed = false;
    bool passed = false;
    std::optional<SmoothResult> smooth;
    std::optional<UnramifiedResult> unramified;
    std::vector<std::string> notes;
};

inline EssentialVerdict essential_check(const NCPresentation& A, EssMode mode,
                                        const Budget& budget = {}) {
    EssentialVerdict v;
    v.mode = mode;
    v.standardization = standardize(A, budget);
    if (A.unital)
        v.notes.push_back(
            "the ground-field factor of the product model is smooth, unramified, and etale");
    if (v.standardization.collapsed) {
        v.collapsed = true;
        v.passed = true;
        v.notes.push_back(
            "collapsed standardization: the commutative factor is the zero ring, the verdict "
            "is vacuous");
        return v;
    }
    const CommPresentation& P = v.standardization.principal;
    if (mode != EssMode::Unramified) v.smooth = jacobian_smooth(P);
    if (mode != EssMode::Smooth) v.unramified = unramified_check(P);
    switch (mode) {
        case EssMode::Smooth: v.passed = v.smooth->smooth; break;
        case EssMode::Unramified: v.passed = v.unramified->unramified; break;
        default: v.passed = v.smooth->smooth && v.unramified->unramified; break;
    }
    return v;
}

/// Relative verdict for an explicit surjection: same generators, the target
/// repeating the source's relations and adding more. The added relations
/// generate the kernel on standardizations; the map is formally smooth (and
/// then etale) exactly when that kernel equals its own square, and is always
/// formally unramified. Anything shaped differently is unsupported.
struct SurjectionVerdict {
    EssMode mode = EssMode::Smooth;
    bool supported = false;
    bool passed = false;
    std::vector<Polynomial> kernel_gens;
    std::size_t failing_index = 0;  // 1-based among the added relations
    Polynomial failing_residue;
    std::vector<std::string> notes;
};

inline SurjectionVerdict essential_surjection_check(const NCPresentation& source,
                                                    const NCPresentation& target, EssMode mode,
                                                    const Budget& budget = {}) {
    SurjectionVerdict v;
    v.mode = mode;
    if (source.gens != target.gens || source.unital != target.unital) {
        v.notes.push_back(
            "unsupported: only surjections presented on the source's own generators are checked");
        return v;
    }
    std::vector<NCPolynomial> added;
    {
        std::vector<bool> used(target.relations.size(), false);
        for (const auto& r : source.relations) {
            bool found = false;
            for (std::size_t j = 0; j < target.relations.size(); ++j)
                if (!used[j] && target.relations[j] == r) {
                    used[j] = true;
                    found = true;
                    break;
                }
            if (!found) {
                v.notes.push_back(
                    "unsupported: the target does not repeat every source relation verbatim");
                return v;
            }
        }
        for (std::size_t j = 0; j < target.relations.size(); ++j)
            if (!used[j]) added.push_back(target.relations[j]);
    }
    v.supported = true;

    StandardizedAlgebra st = standardize(source, budget);
    if (st.collapsed) {
        v.passed = true;
        v.notes.push_back("collapsed standardization: the verdict is vacuous");
        return v;
    }
    const CommPresentation& P = st.principal;
    const MonomialOrder& ord = P.ideal.order;
    for (const auto& r : added) {
        Polynomial img = normal_form(nc_to_comm(r, P.nvars(), ord), P.ideal);
        if (!img.is_zero()) v.kernel_gens.push_back(std::move(img));
    }
    if (mode == EssMode::Unramified) {
        v.passed = true;
        v.notes.push_back("surjections are formally unramified");
        return v;
    }
    if (v.kernel_gens.empty()) {
        v.passed = true;
        v.notes.push_back("the kernel vanishes on standardizations");
        return v;
    }
    std::vector<Polynomial> sq = P.ideal.generators;
    for (std::size_t a = 0; a < v.kernel_gens.size(); ++a)
        for (std::size_t b = a; b < v.kernel_gens.size(); ++b)
            sq.push_back(mul(v.kernel_gens[a], v.kernel_gens[b], ord));
    Ideal K2 = Ideal::make(P.field, ord, P.nvars(), std::move(sq), P.ideal.budget);
    v.passed = true;
    for (std::size_t i = 0; i < v.kernel_gens.size(); ++i) {
        Polynomial res = normal_form(v.kernel_gens[i], K2);
        if (!res.is_zero()) {
            v.passed = false;
            v.failing_index = i + 1;
            v.failing_residue = std::move(res);
            break;
        }
    }
    if (v.passed) v.notes.push_back("the kernel equals its square, so the surjection splits off");
    return v;
}

}  // namespace essalg
