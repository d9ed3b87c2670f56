#pragma once

#include <cstdint>
#include <future>
#include <vector>

#include <gmpxx.h>

#include "essalg/common.hpp"
#include "essalg/scalar.hpp"

namespace essalg {

/// Dense matrix over a fixed coefficient field, row-major.
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Scalar> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, const Field& f)
        : rows(r), cols(c), a(r * c, Scalar::zero(f)) {}

    Scalar& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static Matrix identity(std::size_t n, const Field& f) {
        Matrix m(n, n, f);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
        return m;
    }

    bool is_zero() const {
        for (const auto& x : a)
            if (!x.is_zero()) return false;
        return true;
    }

    bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

inline Matrix mul(const Matrix& A, const Matrix& B, const Field& f) {
    if (A.cols != B.rows) throw MathError("matrix product shape mismatch");
    Matrix C(A.rows, B.cols, f);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t k = 0; k < A.cols; ++k) {
            const Scalar& aik = A.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < B.cols; ++j) {
                const Scalar& bkj = B.at(k, j);
                if (!bkj.is_zero()) C.at(i, j) = C.at(i, j) + aik * bkj;
            }
        }
    return C;
}

inline Matrix transpose(const Matrix& A, const Field& f) {
    Matrix T(A.cols, A.rows, f);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

/// Rank by ordinary Gaussian elimination, valid over Q and F_p alike.
inline std::size_t rank_gauss(Matrix M, const Field& f) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < M.cols && r < M.rows; ++c) {
        std::size_t pivot = r;
        while (pivot < M.rows && M.at(pivot, c).is_zero()) ++pivot;
        if (pivot == M.rows) continue;
        for (std::size_t j = 0; j < M.cols; ++j) std::swap(M.at(r, j), M.at(pivot, j));
        Scalar inv = M.at(r, c).inverse();
        for (std::size_t i = r + 1; i < M.rows; ++i) {
            if (M.at(i, c).is_zero()) continue;
            Scalar factor = M.at(i, c) * inv;
            for (std::size_t j = c; j < M.cols; ++j)
                M.at(i, j) = M.at(i, j) - factor * M.at(r, j);
        }
        ++r;
        (void)f;
    }
    return r;
}

/// Rank over Q by fraction-free Bareiss elimination on the denominator-cleared
/// integer matrix.
inline std::size_t rank_bareiss_q(const Matrix& M) {
    std::vector<std::vector<mpz_class>> z(M.rows, std::vector<mpz_class>(M.cols));
    for (std::size_t i = 0; i < M.rows; ++i) {
        mpz_class den = 1;
        for (std::size_t j = 0; j < M.cols; ++j) {
            const mpq_class& q = M.at(i, j).rational_value();
            mpz_class d = q.get_den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
            den = den / g * d;
        }
        for (std::size_t j = 0; j < M.cols; ++j) {
            const mpq_class& q = M.at(i, j).rational_value();
            z[i][j] = q.get_num() * (den / q.get_den());
        }
    }
    std::size_t r = 0;
    mpz_class prev = 1;
    for (std::size_t c = 0; c < M.cols && r < M.rows; ++c) {
        std::size_t pivot = r;
        while (pivot < M.rows && z[pivot][c] == 0) ++pivot;
        if (pivot == M.rows) continue;
        std::swap(z[pivot], z[r]);
        for (std::size_t i = r + 1; i < M.rows; ++i) {
            for (std::size_t j = c + 1; j < M.cols; ++j) {
                mpz_class num = z[r][c] * z[i][j] - z[i][c] * z[r][j];
                mpz_class q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                if (rem != 0) throw MathError("Bareiss exact division failed");
                z[i][j] = std::move(q);
            }
            z[i][c] = 0;
        }
        prev = z[r][c];
        ++r;
    }
    return r;
}

inline std::size_t rank(const Matrix& M, const Field& f) {
    if (M.rows == 0 || M.cols == 0) return 0;
    return f.is_rationals() ? rank_bareiss_q(M) : rank_gauss(M, f);
}

/// Ranks of independent matrices, optionally fanned out over jobs threads.
/// Results are joined in index order, so the output never depends on timing.
inline std::vector<std::size_t> ranks(const std::vector<Matrix>& ms, const Field& f,
                                      unsigned jobs = 1) {
    std::vector<std::size_t> out(ms.size(), 0);
    if (jobs <= 1 || ms.size() <= 1) {
        for (std::size_t i = 0; i < ms.size(); ++i) out[i] = rank(ms[i], f);
        return out;
    }
    std::vector<std::future<std::size_t>> futs;
    futs.reserve(ms.size());
    for (const auto& m : ms)
        futs.push_back(std::async(std::launch::async, [&m, &f] { return rank(m, f); }));
    for (std::size_t i = 0; i < ms.size(); ++i) out[i] = futs[i].get();
    return out;
}

/// Cochain complex 0 -> C^0 -> C^1 -> ... with d[n] : C^n -> C^{n+1} stored as
/// a (dim C^{n+1}) x (dim C^n) matrix. A complex that ends at C^N carries
/// d[0..N-1]; a truncation of a longer complex also carries the outgoing map
/// d[N] so that h^N comes out right. Construction is expected to verify
/// d.d = 0 before any rank is taken.
struct CochainComplex {
    Field field;
    std::vector<std::size_t> dims;  // dims of C^0 .. C^N
    std::vector<Matrix> d;          // d[0] .. d[N-1]

    void check_composition() const {
        for (std::size_t n = 0; n + 1 < d.size(); ++n)
            if (!mul(d[n + 1], d[n], field).is_zero())
                throw MathError("differential composition d.d != 0 at degree " + std::to_string(n));
    }

    /// Cohomology dimensions h^0 .. h^N.
    std::vector<std::size_t> cohomology_dims(unsigned jobs = 1) const {
        std::vector<std::size_t> rk = ranks(d, field, jobs);
        std::vector<std::size_t> h(dims.size());
        for (std::size_t n = 0; n < dims.size(); ++n) {
            std::size_t rn = n < rk.size() ? rk[n] : 0;
            std::size_t rprev = n > 0 ? rk[n - 1] : 0;
            h[n] = dims[n] - rn - rprev;
        }
        return h;
    }
};

}  // namespace essalg
