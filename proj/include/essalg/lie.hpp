#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "essalg/linalg.hpp"
#include "essalg/nc.hpp"

namespace essalg {

/// Structure-constant quadruple: [x_i, x_j] has coefficient `value` on x_k.
struct BracketEntry {
    std::size_t i, j, k;
    Scalar value;
};

/// Finite-dimensional Lie algebra given by structure constants over its basis.
/// Antisymmetry and the Jacobi identity are checked at construction.
struct LieAlgebra {
    Field field;
    std::vector<std::string> basis;
    /// bracket[i][j] = coordinates of [x_i, x_j]
    std::vector<std::vector<std::vector<Scalar>>> bracket;

    std::size_t dim() const { return basis.size(); }

    static LieAlgebra make(Field f, std::vector<std::string> basis,
                           const std::vector<BracketEntry>& entries) {
        LieAlgebra g;
        g.field = f;
        CommPresentation::check_names(basis);
        g.basis = std::move(basis);
        const std::size_t d = g.basis.size();
        g.bracket.assign(d, std::vector<std::vector<Scalar>>(
                                d, std::vector<Scalar>(d, Scalar::zero(f))));
        std::vector<std::vector<bool>> given(d, std::vector<bool>(d, false));
        for (const auto& e : entries) {
            if (e.i >= d || e.j >= d || e.k >= d)
                throw InputError("structure constant index out of range");
            if (e.value.field() != f) throw InputError("structure constant in wrong field");
            g.bracket[e.i][e.j][e.k] = g.bracket[e.i][e.j][e.k] + e.value;
            given[e.i][e.j] = true;
        }
        // a pair given in only one direction is completed antisymmetrically
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                if (!given[i][j] || given[j][i]) continue;
                for (std::size_t k = 0; k < d; ++k) g.bracket[j][i][k] = -g.bracket[i][j][k];
                given[j][i] = true;
            }
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j <= i; ++j)
                for (std::size_t k = 0; k < d; ++k) {
                    bool bad = (i == j) ? !g.bracket[i][i][k].is_zero()
                                        : !(g.bracket[i][j][k] + g.bracket[j][i][k]).is_zero();
                    if (bad)
                        throw InputError("antisymmetry fails on ([" + g.basis[i] + "," +
                                         g.basis[j] + "], " + g.basis[k] + ")");
                }
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j)
                for (std::size_t k = j + 1; k < d; ++k) {
                    std::vector<Scalar> acc(d, Scalar::zero(f));
                    g.acc_bracket(acc, g.bracket[i][j], k, false);
                    g.acc_bracket(acc, g.bracket[j][k], i, false);
                    g.acc_bracket(acc, g.bracket[k][i], j, false);
                    for (std::size_t t = 0; t < d; ++t)
                        if (!acc[t].is_zero())
                            throw InputError("Jacobi identity fails on (" + g.basis[i] + ", " +
                                             g.basis[j] + ", " + g.basis[k] + ")");
                }
        return g;
    }

    /// acc += [v, x_k] (or [x_k, v] when flip), for a coordinate vector v.
    void acc_bracket(std::vector<Scalar>& acc, const std::vector<Scalar>& v, std::size_t k,
                     bool flip) const {
        const std::size_t d = dim();
        for (std::size_t a = 0; a < d; ++a) {
            if (v[a].is_zero()) continue;
            const auto& br = flip ? bracket[k][a] : bracket[a][k];
            for (std::size_t t = 0; t < d; ++t)
                if (!br[t].is_zero()) acc[t] = acc[t] + v[a] * br[t];
        }
    }

    static LieAlgebra abelian(Field f, std::size_t d) {
        std::vector<std::string> names;
        names.reserve(d);
        for (std::size_t i = 0; i < d; ++i) names.push_back("x" + std::to_string(i + 1));
        return make(f, std::move(names), {});
    }

    static LieAlgebra sl2(Field f) {
        // basis order f < h < e; [h,e] = 2e, [h,f] = -2f, [e,f] = h
        std::vector<BracketEntry> entries = {
            {1, 2, 2, Scalar::from_int(f, 2)},   // [h,e] = 2e
            {1, 0, 0, Scalar::from_int(f, -2)},  // [h,f] = -2f
            {2, 0, 1, Scalar::from_int(f, 1)},   // [e,f] = h
        };
        return make(f, {"f", "h", "e"}, entries);
    }
};

/// Finite-dimensional representation rho of a Lie algebra; the commutator
/// compatibility rho([x,y]) = [rho(x), rho(y)] is checked at construction.
struct LieModule {
    Field field;
    std::size_t dim = 0;
    std::vector<Matrix> rho;  // one matrix per basis element of g

    static LieModule make(const LieAlgebra& g, std::size_t m, std::vector<Matrix> rho) {
        if (rho.size() != g.dim()) throw InputError("need one action matrix per basis element");
        for (const auto& M : rho)
            if (M.rows != m || M.cols != m) throw InputError("action matrix has wrong shape");
        LieModule mod{g.field, m, std::move(rho)};
        const std::size_t d = g.dim();
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) {
                Matrix lhs(m, m, g.field);
                for (std::size_t a = 0; a < d; ++a) {
                    const Scalar& c = g.bracket[i][j][a];
                    if (c.is_zero()) continue;
                    for (std::size_t t = 0; t < m * m; ++t)
                        lhs.a[t] = lhs.a[t] + c * mod.rho[a].a[t];
                }
                Matrix comm = mul(mod.rho[i], mod.rho[j], g.field);
                Matrix ji = mul(mod.rho[j], mod.rho[i], g.field);
                for (std::size_t t = 0; t < m * m; ++t) comm.a[t] = comm.a[t] - ji.a[t];
                if (!(lhs == comm))
                    throw InputError("module action incompatible with bracket on (" + g.basis[i] +
                                     ", " + g.basis[j] + ")");
            }
        return mod;
    }

    static LieModule trivial(const LieAlgebra& g) {
        std::vector<Matrix> rho(g.dim(), Matrix(1, 1, g.field));
        return make(g, 1, std::move(rho));
    }

    /// The defining action of g on itself, ad(x)y = [x,y].
    static LieModule adjoint(const LieAlgebra& g) {
        const std::size_t d = g.dim();
        std::vector<Matrix> rho(d, Matrix(d, d, g.field));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k) rho[i].at(k, j) = g.bracket[i][j][k];
        return make(g, d, std::move(rho));
    }
};

/// Presentation of the universal enveloping algebra: one generator per basis
/// element in the given order, straightening relations for each pair.
inline NCPresentation universal_envelope(const LieAlgebra& g) {
    const std::size_t d = g.dim();
    const Scalar one = Scalar::one(g.field);
    std::vector<NCPolynomial> rels;
    for (std::uint32_t j = 0; j < d; ++j)
        for (std::uint32_t i = 0; i < j; ++i) {
            // x_j x_i - x_i x_j - [x_j, x_i]
            std::vector<std::pair<Word, Scalar>> raw;
            raw.emplace_back(Word{j, i}, one);
            raw.emplace_back(Word{i, j}, -one);
            for (std::uint32_t k = 0; k < d; ++k) {
                const Scalar& c = g.bracket[j][i][k];
                if (!c.is_zero()) raw.emplace_back(Word{k}, -c);
            }
            rels.push_back(NCPolynomial::normalized(d, std::move(raw)));
        }
    return NCPresentation::make(g.field, g.basis, std::move(rels), true);
}

/// Straightened (Poincare-Birkhoff-Witt) normal form: rewrite descending
/// adjacent pairs x_j x_i (j > i) to x_i x_j + [x_j, x_i] until every word is
/// nondecreasing. Terminates because each step lowers (degree, inversions).
inline NCPolynomial pbw_normal_form(NCPolynomial p, const LieAlgebra& g) {
    const std::size_t d = g.dim();
    if (!p.terms.empty() && p.ngens != d) throw MathError("polynomial not over the envelope");
    while (true) {
        std::size_t ti = static_cast<std::size_t>(-1), pos = 0;
        for (std::size_t t = 0; t < p.terms.size(); ++t) {
            const Word& w = p.terms[t].first;
            for (std::size_t s = 0; s + 1 < w.size(); ++s)
                if (w[s] > w[s + 1]) {
                    ti = t;
                    pos = s;
                    break;
                }
            if (ti != static_cast<std::size_t>(-1)) break;
        }
        if (ti == static_cast<std::size_t>(-1)) return p;
        Word w = p.terms[ti].first;
        Scalar c = p.terms[ti].second;
        const std::uint32_t a = w[pos], b = w[pos + 1];
        Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
        Word v(w.begin() + static_cast<std::ptrdiff_t>(pos) + 2, w.end());
        std::vector<std::pair<Word, Scalar>> raw;
        Word swapped = u;
        swapped.push_back(b);
        swapped.push_back(a);
        swapped.insert(swapped.end(), v.begin(), v.end());
        raw.emplace_back(std::move(swapped), c);
        for (std::uint32_t k = 0; k < d; ++k) {
            const Scalar& ck = g.bracket[a][b][k];
            if (ck.is_zero()) continue;
            Word mid = u;
            mid.push_back(k);
            mid.insert(mid.end(), v.begin(), v.end());
            raw.emplace_back(std::move(mid), c * ck);
        }
        p.terms.erase(p.terms.begin() + static_cast<std::ptrdiff_t>(ti));
        p = nc_add(p, NCPolynomial::normalized(d, std::move(raw)));
    }
}

/// Chevalley-Eilenberg complex of g with coefficients in M, through degree
/// n_max. Composition d.d = 0 is verified on the constructed matrices.
inline CochainComplex chevalley_eilenberg(const LieAlgebra& g, const LieModule& M,
                                          std::size_t n_max) {
    const std::size_t d = g.dim();
    if (n_max > d) throw InputError("cohomology degree exceeds the Lie algebra dimension");
    const std::size_t m = M.dim;
    const Field& f = g.field;

    // increasing tuples in lexicographic order, per exterior degree
    std::vector<std::vector<std::vector<std::size_t>>> tuples(d + 2);
    for (std::size_t n = 0; n <= std::min(d, n_max + 1); ++n) {
        std::vector<std::size_t> t(n);
        for (std::size_t i = 0; i < n; ++i) t[i] = i;
        while (true) {
            tuples[n].push_back(t);
            std::size_t i = n;
            while (i > 0 && t[i - 1] == d - n + i - 1) --i;
            if (i == 0) break;
            ++t[i - 1];
            for (std::size_t j = i; j < n; ++j) t[j] = t[j - 1] + 1;
        }
        if (n == 0) tuples[0] = {{}};
    }

    auto tuple_index = [&](std::size_t n, const std::vector<std::size_t>& t) -> std::size_t {
        auto it = std::lower_bound(tuples[n].begin(), tuples[n].end(), t);
        if (it == tuples[n].end() || *it != t) throw MathError("tuple lookup failed");
        return static_cast<std::size_t>(it - tuples[n].begin());
    };

    // wedge-sort a tuple with one fresh element; repeated element wedges to 0
    std::vector<std::size_t> last_sorted;
    auto insert_sorted = [&](const std::vector<std::size_t>& t, std::size_t a, int& sign) -> bool {
        std::vector<std::size_t> s = t;
        auto it = std::lower_bound(s.begin(), s.end(), a);
        if (it != s.end() && *it == a) return false;
        std::size_t moved = static_cast<std::size_t>(it - s.begin());
        s.insert(it, a);
        sign = (moved % 2 == 0) ? 1 : -1;
        last_sorted = std::move(s);
        return true;
    };

    CochainComplex C;
    C.field = f;
    for (std::size_t n = 0; n <= n_max; ++n)
        C.dims.push_back((n < tuples.size() ? tuples[n].size() : 0) * m);

    for (std::size_t n = 0; n <= n_max; ++n) {
        const auto& rows_t = tuples[n + 1 <= d ? n + 1 : d + 1];
        const std::size_t rows = (n + 1 <= d ? rows_t.size() : 0) * m;
        Matrix D(rows, tuples[n].size() * m, f);
        if (n + 1 <= d) {
            for (std::size_t R = 0; R < rows_t.size(); ++R) {
                const auto& T = rows_t[R];
                // action terms
                for (std::size_t i = 0; i <= n; ++i) {
                    std::vector<std::size_t> S;
                    S.reserve(n);
                    for (std::size_t q = 0; q <= n; ++q)
                        if (q != i) S.push_back(T[q]);
                    std::size_t col0 = tuple_index(n, S) * m;
                    const Matrix& act = M.rho[T[i]];
                    Scalar sgn = (i % 2 == 0) ? Scalar::one(f) : -Scalar::one(f);
                    for (std::size_t r = 0; r < m; ++r)
                        for (std::size_t q = 0; q < m; ++q)
                            D.at(R * m + r, col0 + q) =
                                D.at(R * m + r, col0 + q) + sgn * act.at(r, q);
                }
                // bracket terms
                for (std::size_t i = 0; i <= n; ++i)
                    for (std::size_t j = i + 1; j <= n; ++j) {
                        std::vector<std::size_t> rest;
                        rest.reserve(n - 1);
                        for (std::size_t q = 0; q <= n; ++q)
                            if (q != i && q != j) rest.push_back(T[q]);
                        for (std::size_t a = 0; a < d; ++a) {
                            const Scalar& c = g.bracket[T[i]][T[j]][a];
                            if (c.is_zero()) continue;
                            int sign = 1;
                            if (!insert_sorted(rest, a, sign)) continue;
                            std::size_t col0 = tuple_index(n, last_sorted) * m;
                            Scalar coeff = ((i + j) % 2 == 0 ? c : -c) *
                                           (sign > 0 ? Scalar::one(f) : -Scalar::one(f));
                            for (std::size_t r = 0; r < m; ++r)
                                D.at(R * m + r, col0 + r) = D.at(R * m + r, col0 + r) + coeff;
                        }
                    }
            }
        }
        C.d.push_back(std::move(D));
    }
    C.check_composition();
    return C;
}

inline std::vector<std::size_t> chevalley_eilenberg_dims(const LieAlgebra& g, const LieModule& M,
                                                         std::size_t n_max, unsigned jobs = 1) {
    return chevalley_eilenberg(g, M, n_max).cohomology_dims(jobs);
}

/// One-sided quasi-freeness test for the enveloping algebra: a nonzero Lie
/// cohomology group with trivial coefficients in some degree 2 <= n <= n_max
/// rules quasi-freeness out; an all-zero scan decides nothing.
struct LieVerdict {
    bool not_quasi_free = false;
    std::size_t witness_degree = 0;
    std::size_t witness_dim = 0;
    std::size_t scanned_up_to = 0;
    std::vector<std::size_t> dims;
};

inline LieVerdict lie_quasifree_verdict(const LieAlgebra& g, std::size_t n_max,
                                        unsigned jobs = 1) {
    LieVerdict v;
    if (n_max > g.dim()) n_max = g.dim();
    v.scanned_up_to = n_max;
    v.dims = chevalley_eilenberg_dims(g, LieModule::trivial(g), n_max, jobs);
    for (std::size_t n = 2; n <= n_max; ++n)
        if (v.dims[n] > 0) {
            v.not_quasi_free = true;
            v.witness_degree = n;
            v.witness_dim = v.dims[n];
            break;
        }
    return v;
}

}  // namespace essalg
