#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "essalg/comm.hpp"
#include "essalg/linalg.hpp"

namespace essalg {

/// Structure-constant quadruple: b_i * b_j has coefficient `value` on b_k.
struct MultEntry {
    std::size_t i, j, k;
    Scalar value;
};

/// Associative unital algebra of finite dimension, given by a multiplication
/// table on a basis. Associativity and the unit laws are checked on every
/// triple at construction.
struct FinDimAlgebra {
    Field field;
    std::vector<std::string> basis;
    std::vector<std::vector<std::vector<Scalar>>> mult;  // mult[i][j] = coords of b_i b_j
    std::vector<Scalar> unit;

    std::size_t dim() const { return basis.size(); }

    std::vector<Scalar> mult_vec(const std::vector<Scalar>& u, const std::vector<Scalar>& v) const {
        const std::size_t d = dim();
        std::vector<Scalar> out(d, Scalar::zero(field));
        for (std::size_t i = 0; i < d; ++i) {
            if (u[i].is_zero()) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (v[j].is_zero()) continue;
                Scalar c = u[i] * v[j];
                for (std::size_t k = 0; k < d; ++k)
                    if (!mult[i][j][k].is_zero()) out[k] = out[k] + c * mult[i][j][k];
            }
        }
        return out;
    }

    Matrix left_matrix(std::size_t i) const {
        const std::size_t d = dim();
        Matrix L(d, d, field);
        for (std::size_t c = 0; c < d; ++c)
            for (std::size_t r = 0; r < d; ++r) L.at(r, c) = mult[i][c][r];
        return L;
    }

    Matrix right_matrix(std::size_t i) const {
        const std::size_t d = dim();
        Matrix R(d, d, field);
        for (std::size_t c = 0; c < d; ++c)
            for (std::size_t r = 0; r < d; ++r) R.at(r, c) = mult[c][i][r];
        return R;
    }

    static FinDimAlgebra make(Field f, std::vector<std::string> basis,
                              const std::vector<MultEntry>& entries, std::vector<Scalar> unit) {
        FinDimAlgebra A;
        A.field = f;
        CommPresentation::check_names(basis);
        A.basis = std::move(basis);
        const std::size_t d = A.basis.size();
        if (d == 0) throw InputError("algebra needs at least one basis element");
        A.mult.assign(d, std::vector<std::vector<Scalar>>(d, std::vector<Scalar>(d, Scalar::zero(f))));
        for (const auto& e : entries) {
            if (e.i >= d || e.j >= d || e.k >= d)
                throw InputError("structure constant index out of range");
            A.mult[e.i][e.j][e.k] = A.mult[e.i][e.j][e.k] + e.value;
        }
        if (unit.size() != d) throw InputError("unit vector has wrong length");
        A.unit = std::move(unit);

        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k) {
                    std::vector<Scalar> lhs(d, Scalar::zero(f)), rhs(d, Scalar::zero(f));
                    for (std::size_t t = 0; t < d; ++t) {
                        const Scalar& cij = A.mult[i][j][t];
                        if (!cij.is_zero())
                            for (std::size_t s = 0; s < d; ++s)
                                lhs[s] = lhs[s] + cij * A.mult[t][k][s];
                        const Scalar& cjk = A.mult[j][k][t];
                        if (!cjk.is_zero())
                            for (std::size_t s = 0; s < d; ++s)
                                rhs[s] = rhs[s] + cjk * A.mult[i][t][s];
                    }
                    if (lhs != rhs)
                        throw InputError("associativity fails on (" + A.basis[i] + ", " +
                                         A.basis[j] + ", " + A.basis[k] + ")");
                }

        std::vector<Scalar> ei(d, Scalar::zero(f));
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t t = 0; t < d; ++t) ei[t] = (t == i) ? Scalar::one(f) : Scalar::zero(f);
            if (A.mult_vec(A.unit, ei) != ei || A.mult_vec(ei, A.unit) != ei)
                throw InputError("unit vector fails the unit law on " + A.basis[i]);
        }
        return A;
    }

    /// k[x]/(x^2 - x) over the field, basis {1, x}; handy in tests.
    static FinDimAlgebra idempotent_line(Field f) {
        std::vector<MultEntry> e = {
            {0, 0, 0, Scalar::one(f)},
            {0, 1, 1, Scalar::one(f)},
            {1, 0, 1, Scalar::one(f)},
            {1, 1, 1, Scalar::one(f)},
        };
        return make(f, {"one", "x"}, e, {Scalar::one(f), Scalar::zero(f)});
    }

    static FinDimAlgebra ground_field(Field f) {
        return make(f, {"one"}, {{0, 0, 0, Scalar::one(f)}}, {Scalar::one(f)});
    }

    /// k x k with componentwise product.
    static FinDimAlgebra product_of_fields(Field f) {
        std::vector<MultEntry> e = {{0, 0, 0, Scalar::one(f)}, {1, 1, 1, Scalar::one(f)}};
        return make(f, {"p", "q"}, e, {Scalar::one(f), Scalar::one(f)});
    }

    /// k[x]/(x^2): the dual numbers.
    static FinDimAlgebra dual_numbers(Field f) {
        std::vector<MultEntry> e = {
            {0, 0, 0, Scalar::one(f)}, {0, 1, 1, Scalar::one(f)}, {1, 0, 1, Scalar::one(f)}};
        return make(f, {"one", "x"}, e, {Scalar::one(f), Scalar::zero(f)});
    }

    /// 2x2 matrices, basis E11, E12, E21, E22.
    static FinDimAlgebra matrix2(Field f) {
        const Scalar one = Scalar::one(f);
        std::vector<MultEntry> e;
        auto idx = [](std::size_t r, std::size_t c) { return r * 2 + c; };
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 2; ++c)
                for (std::size_t s = 0; s < 2; ++s)
                    for (std::size_t t = 0; t < 2; ++t)
                        if (c == s) e.push_back({idx(r, c), idx(s, t), idx(r, t), one});
        std::vector<Scalar> unit = {one, Scalar::zero(f), Scalar::zero(f), one};
        return make(f, {"E11", "E12", "E21", "E22"}, e, std::move(unit));
    }
};

/// Bimodule over a FinDimAlgebra: commuting unital left and right actions.
struct Bimodule {
    Field field;
    std::size_t dim = 0;
    std::vector<Matrix> left;   // left[i] = action of b_i on the left
    std::vector<Matrix> right;  // right[i] = action of b_i on the right

    static Bimodule make(const FinDimAlgebra& A, std::size_t m, std::vector<Matrix> left,
                         std::vector<Matrix> right) {
        const std::size_t d = A.dim();
        if (left.size() != d || right.size() != d)
            throw InputError("need one left and one right action matrix per basis element");
        for (const auto& M : left)
            if (M.rows != m || M.cols != m) throw InputError("left action matrix has wrong shape");
        for (const auto& M : right)
            if (M.rows != m || M.cols != m) throw InputError("right action matrix has wrong shape");
        Bimodule B{A.field, m, std::move(left), std::move(right)};

        auto combo = [&](const std::vector<Matrix>& act, std::size_t i, std::size_t j) {
            Matrix out(m, m, A.field);
            for (std::size_t k = 0; k < d; ++k) {
                const Scalar& c = A.mult[i][j][k];
                if (c.is_zero()) continue;
                for (std::size_t t = 0; t < m * m; ++t) out.a[t] = out.a[t] + c * act[k].a[t];
            }
            return out;
        };
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                if (!(combo(B.left, i, j) == mul(B.left[i], B.left[j], A.field)))
                    throw InputError("left action is not a homomorphism at (" + A.basis[i] + ", " +
                                     A.basis[j] + ")");
                if (!(combo(B.right, i, j) == mul(B.right[j], B.right[i], A.field)))
                    throw InputError("right action is not an antihomomorphism at (" + A.basis[i] +
                                     ", " + A.basis[j] + ")");
                if (!(mul(B.left[i], B.right[j], A.field) == mul(B.right[j], B.left[i], A.field)))
                    throw InputError("left and right actions fail to commute at (" + A.basis[i] +
                                     ", " + A.basis[j] + ")");
            }
        Matrix lu(m, m, A.field), ru(m, m, A.field);
        for (std::size_t k = 0; k < d; ++k) {
            if (!A.unit[k].is_zero())
                for (std::size_t t = 0; t < m * m; ++t) {
                    lu.a[t] = lu.a[t] + A.unit[k] * B.left[k].a[t];
                    ru.a[t] = ru.a[t] + A.unit[k] * B.right[k].a[t];
                }
        }
        if (!(lu == Matrix::identity(m, A.field)) || !(ru == Matrix::identity(m, A.field)))
            throw InputError("the unit must act as the identity on both sides");
        return B;
    }

    /// A as a bimodule over itself.
    static Bimodule regular(const FinDimAlgebra& A) {
        const std::size_t d = A.dim();
        std::vector<Matrix> L, R;
        L.reserve(d);
        R.reserve(d);
        for (std::size_t i = 0; i < d; ++i) {
            L.push_back(A.left_matrix(i));
            R.push_back(A.right_matrix(i));
        }
        return make(A, d, std::move(L), std::move(R));
    }

    /// The linear dual A* with (a.phi)(x) = phi(xa) and (phi.a)(x) = phi(ax).
    static Bimodule dual(const FinDimAlgebra& A) {
        const std::size_t d = A.dim();
        std::vector<Matrix> L, R;
        L.reserve(d);
        R.reserve(d);
        for (std::size_t i = 0; i < d; ++i) {
            L.push_back(transpose(A.right_matrix(i), A.field));
            R.push_back(transpose(A.left_matrix(i), A.field));
        }
        return make(A, d, std::move(L), std::move(R));
    }
};

}  // namespace essalg
