#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "essalg/certificates.hpp"
#include "essalg/comm.hpp"

namespace essalg {

/// Koszul chain complex K_r -> ... -> K_1 -> K_0 on a sequence of ring
/// elements, with free modules of rank binomial(r, j) and differential
/// entries reduced to normal form. diff[j-1] is the map out of K_j, stored
/// as a rank(K_{j-1}) x rank(K_j) polynomial matrix.
struct KoszulComplex {
    CommPresentation ring;
    std::vector<Polynomial> seq;
    std::vector<std::vector<std::vector<std::size_t>>> bases;  // bases[j]: sorted index tuples
    std::vector<std::vector<std::vector<Polynomial>>> diff;

    std::size_t length() const { return seq.size(); }
    std::size_t rank(std::size_t j) const { return j < bases.size() ? bases[j].size() : 0; }
};

namespace detail {

inline std::vector<std::vector<std::size_t>> subsets_lex(std::size_t r, std::size_t j) {
    std::vector<std::vector<std::size_t>> out;
    if (j > r) return out;
    std::vector<std::size_t> cur(j);
    for (std::size_t i = 0; i < j; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t t = j;
        while (t > 0 && cur[t - 1] == r - j + (t - 1)) --t;
        if (t == 0) break;
        ++cur[t - 1];
        for (std::size_t i = t; i < j; ++i) cur[i] = cur[i - 1] + 1;
    }
    return out;
}

}  // namespace detail

inline KoszulComplex koszul_complex(const CommPresentation& A,
                                    const std::vector<Polynomial>& seq) {
    if (seq.empty()) throw InputError("a Koszul complex needs a nonempty sequence");
    const std::size_t n = A.ideal.nvars;
    for (const auto& f : seq)
        if (f.nv != n) throw InputError("sequence element lives in the wrong ring");
    const std::size_t r = seq.size();

    KoszulComplex K;
    K.ring = A;
    K.seq = seq;
    std::vector<Polynomial> nf;
    nf.reserve(r);
    for (const auto& f : seq) nf.push_back(normal_form(f, A.ideal));

    std::vector<std::map<std::vector<std::size_t>, std::size_t>> pos(r + 1);
    for (std::size_t j = 0; j <= r; ++j) {
        K.bases.push_back(detail::subsets_lex(r, j));
        for (std::size_t i = 0; i < K.bases[j].size(); ++i) pos[j][K.bases[j][i]] = i;
    }

    for (std::size_t j = 1; j <= r; ++j) {
        const auto& cols = K.bases[j];
        const auto& rows = K.bases[j - 1];
        std::vector<std::vector<Polynomial>> D(
            rows.size(), std::vector<Polynomial>(cols.size(), Polynomial::zero(n)));
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const auto& S = cols[c];
            for (std::size_t t = 0; t < S.size(); ++t) {
                std::vector<std::size_t> T = S;
                T.erase(T.begin() + static_cast<std::ptrdiff_t>(t));
                std::size_t rI = pos[j - 1].at(T);
                Polynomial entry = (t % 2 == 0) ? nf[S[t]] : neg(nf[S[t]]);
                D[rI][c] = add(D[rI][c], entry, A.ideal.order);
            }
        }
        K.diff.push_back(std::move(D));
    }

    // d.d reduces to zero modulo the defining ideal in every degree.
    for (std::size_t j = 2; j <= r; ++j) {
        const auto& Dj = K.diff[j - 1];
        const auto& Dp = K.diff[j - 2];
        for (std::size_t rI = 0; rI < K.rank(j - 2); ++rI)
            for (std::size_t c = 0; c < K.rank(j); ++c) {
                Polynomial acc = Polynomial::zero(n);
                for (std::size_t m = 0; m < K.rank(j - 1); ++m)
                    acc = add(acc, mul(Dp[rI][m], Dj[m][c], A.ideal.order), A.ideal.order);
                if (!normal_form(acc, A.ideal).is_zero())
                    throw MathError("Koszul composition fails to vanish at degree " +
                                    std::to_string(j));
            }
    }
    return K;
}

/// Tor ranks of the quotient by a certified regular sequence, against itself
/// over the presented ring. The Koszul complex on the sequence resolves the
/// quotient; after tensoring down, every differential entry must reduce to
/// zero, so Tor_j is free of rank binomial(r, j).
struct TorProfile {
    std::size_t length = 0;
    std::vector<std::size_t> dims;  // Tor_0 .. Tor_n_max ranks over the quotient
};

inline TorProfile tor_via_koszul(const RegularSequenceCertificate& cert, std::size_t n_max) {
    if (!cert.consistent())
        throw InputError("the supplied certificate does not certify a regular sequence");
    const std::size_t r = cert.sequence.size();
    KoszulComplex K = koszul_complex(cert.ring, cert.sequence);

    CommPresentation B = add_relations(cert.ring, cert.sequence);
    if (B.ideal.is_unit_ideal())
        throw MathError("certified quotient collapsed on replay");
    for (std::size_t j = 1; j <= r; ++j)
        for (const auto& row : K.diff[j - 1])
            for (const auto& entry : row)
                if (!normal_form(entry, B.ideal).is_zero())
                    throw MathError("tensored Koszul differential fails to vanish");

    TorProfile out;
    out.length = r;
    out.dims.assign(n_max + 1, 0);
    for (std::size_t j = 0; j <= n_max && j <= r; ++j) out.dims[j] = K.rank(j);
    return out;
}

}  // namespace essalg
