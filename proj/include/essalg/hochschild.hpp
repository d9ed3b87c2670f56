#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "essalg/findim.hpp"
#include "essalg/linalg.hpp"

namespace essalg {

namespace detail {

inline constexpr std::size_t kMaxDifferentialEntries = 25'000'000;

}  // namespace detail

/// Hochschild cochain complex of a finite-dimensional algebra with
/// coefficients in a bimodule, through degree n_max. C^n = Hom(A^(x)n, M) on
/// the full tensor powers, or on tensor powers of A/k.unit when `normalized`
/// is set; both compute the same cohomology. The outgoing differential of
/// degree n_max is included and d.d = 0 is verified on the matrices.
inline CochainComplex bar_complex(const FinDimAlgebra& A, const Bimodule& M, std::size_t n_max,
                                  bool normalized = false) {
    const Field f = A.field;
    const std::size_t a = A.dim();
    const std::size_t m = M.dim;
    if (M.left.size() != a) throw InputError("bimodule does not match the algebra");

    // Letters index the tensor-factor basis; in the normalized complex the
    // basis vector carrying the unit's pivot coordinate is projected away.
    std::vector<std::size_t> letters;
    std::vector<std::vector<Scalar>> proj(a);
    if (normalized) {
        std::size_t pivot = a;
        for (std::size_t i = 0; i < a; ++i)
            if (!A.unit[i].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot == a) throw InputError("unit vector is zero");
        for (std::size_t i = 0; i < a; ++i)
            if (i != pivot) letters.push_back(i);
        const std::size_t L = letters.size();
        Scalar inv = A.unit[pivot].inverse();
        for (std::size_t k = 0; k < a; ++k) {
            proj[k].assign(L, Scalar::zero(f));
            if (k == pivot) {
                for (std::size_t t = 0; t < L; ++t)
                    proj[k][t] = Scalar::zero(f) - inv * A.unit[letters[t]];
            } else {
                for (std::size_t t = 0; t < L; ++t)
                    if (letters[t] == k) proj[k][t] = Scalar::one(f);
            }
        }
    } else {
        for (std::size_t i = 0; i < a; ++i) letters.push_back(i);
        for (std::size_t k = 0; k < a; ++k) {
            proj[k].assign(a, Scalar::zero(f));
            proj[k][k] = Scalar::one(f);
        }
    }
    const std::size_t L = letters.size();

    // merged[i][j][t]: coordinate on letter t of the (projected) product of
    // the letters at positions i and j.
    std::vector<std::vector<std::vector<Scalar>>> merged(
        L, std::vector<std::vector<Scalar>>(L, std::vector<Scalar>(L, Scalar::zero(f))));
    for (std::size_t i = 0; i < L; ++i)
        for (std::size_t j = 0; j < L; ++j)
            for (std::size_t k = 0; k < a; ++k) {
                const Scalar& c = A.mult[letters[i]][letters[j]][k];
                if (c.is_zero()) continue;
                for (std::size_t t = 0; t < L; ++t)
                    if (!proj[k][t].is_zero())
                        merged[i][j][t] = merged[i][j][t] + c * proj[k][t];
            }

    std::vector<std::size_t> pw(n_max + 2);
    pw[0] = 1;
    for (std::size_t n = 1; n <= n_max + 1; ++n) {
        if (L != 0 && pw[n - 1] > detail::kMaxDifferentialEntries / L)
            throw ResourceError("matrix", "cochain matrix would exceed the entry budget");
        pw[n] = pw[n - 1] * L;
    }

    CochainComplex C;
    C.field = f;
    for (std::size_t n = 0; n <= n_max; ++n) C.dims.push_back(m * pw[n]);

    std::vector<std::size_t> tup;
    for (std::size_t n = 0; n <= n_max; ++n) {
        const std::size_t rows = m * pw[n + 1];
        const std::size_t cols = m * pw[n];
        if (cols != 0 && rows > detail::kMaxDifferentialEntries / cols)
            throw ResourceError("matrix", "cochain matrix would exceed the entry budget");
        Matrix D(rows, cols, f);

        tup.assign(n + 1, 0);
        for (std::size_t row_t = 0; row_t < pw[n + 1]; ++row_t) {
            // Decode row_t into the letter tuple, first factor most significant.
            std::size_t rem = row_t;
            for (std::size_t i = 0; i <= n; ++i) {
                tup[n - i] = rem % L;
                rem /= L;
            }
            const std::size_t rbase = row_t * m;

            auto col_index = [&](std::size_t skip_lo, std::size_t skip_hi,
                                 std::size_t insert_pos, std::size_t insert_letter,
                                 bool do_insert) {
                std::size_t idx = 0;
                for (std::size_t p = 0; p <= n; ++p) {
                    if (p >= skip_lo && p <= skip_hi) {
                        if (do_insert && p == insert_pos) idx = idx * L + insert_letter;
                        continue;
                    }
                    idx = idx * L + tup[p];
                }
                return idx;
            };

            // a.f(rest): drop the first letter, act by it on the left.
            {
                std::size_t ct = col_index(0, 0, 0, 0, false);
                const Matrix& act = M.left[letters[tup[0]]];
                for (std::size_t r = 0; r < m; ++r)
                    for (std::size_t c = 0; c < m; ++c)
                        if (!act.at(r, c).is_zero())
                            D.at(rbase + r, ct * m + c) = D.at(rbase + r, ct * m + c) + act.at(r, c);
            }
            // Interior merges with alternating signs.
            for (std::size_t i = 1; i <= n; ++i) {
                const bool neg = (i % 2) == 1;
                const std::vector<Scalar>& prod = merged[tup[i - 1]][tup[i]];
                for (std::size_t t = 0; t < L; ++t) {
                    if (prod[t].is_zero()) continue;
                    std::size_t ct = col_index(i - 1, i, i - 1, t, true);
                    Scalar v = neg ? (Scalar::zero(f) - prod[t]) : prod[t];
                    for (std::size_t r = 0; r < m; ++r)
                        D.at(rbase + r, ct * m + r) = D.at(rbase + r, ct * m + r) + v;
                }
            }
            // f(front).a: drop the last letter, act by it on the right.
            {
                const bool neg = ((n + 1) % 2) == 1;
                std::size_t ct = col_index(n, n, 0, 0, false);
                const Matrix& act = M.right[letters[tup[n]]];
                for (std::size_t r = 0; r < m; ++r)
                    for (std::size_t c = 0; c < m; ++c) {
                        if (act.at(r, c).is_zero()) continue;
                        Scalar v = neg ? (Scalar::zero(f) - act.at(r, c)) : act.at(r, c);
                        D.at(rbase + r, ct * m + c) = D.at(rbase + r, ct * m + c) + v;
                    }
            }
        }
        C.d.push_back(std::move(D));
    }
    C.check_composition();
    return C;
}

inline std::vector<std::size_t> hochschild_dims(const FinDimAlgebra& A, const Bimodule& M,
                                                std::size_t n_max, bool normalized = false,
                                                unsigned jobs = 1) {
    return bar_complex(A, M, n_max, normalized).cohomology_dims(jobs);
}

/// Outcome of scanning Hochschild cohomology in degrees >= 2 for a nonzero
/// group. A hit bounds the bidimension of the algebra from below and rules
/// out quasi-freeness; an empty scan up to n_max decides nothing.
struct QuasiFreeObstruction {
    bool not_quasi_free = false;
    std::size_t witness_degree = 0;
    std::string witness_module;
    std::size_t witness_dim = 0;
    std::vector<std::pair<std::string, std::vector<std::size_t>>> table;
};

inline QuasiFreeObstruction hochschild_lower_bound(
    const FinDimAlgebra& A, std::size_t n_max,
    const std::vector<std::pair<std::string, Bimodule>>& extra_modules = {}, unsigned jobs = 1,
    bool normalized = false) {
    if (n_max < 2) throw InputError("the scan needs degrees up to at least 2");
    QuasiFreeObstruction out;
    std::vector<std::pair<std::string, Bimodule>> family;
    family.emplace_back("regular", Bimodule::regular(A));
    family.emplace_back("dual", Bimodule::dual(A));
    for (const auto& e : extra_modules) family.push_back(e);
    for (const auto& [name, mod] : family)
        out.table.emplace_back(name, hochschild_dims(A, mod, n_max, normalized, jobs));
    for (std::size_t n = 2; n <= n_max && !out.not_quasi_free; ++n)
        for (const auto& [name, dims] : out.table)
            if (dims[n] > 0) {
                out.not_quasi_free = true;
                out.witness_degree = n;
                out.witness_module = name;
                out.witness_dim = dims[n];
                break;
            }
    return out;
}

}  // namespace essalg
