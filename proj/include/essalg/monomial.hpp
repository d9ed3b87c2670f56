#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "essalg/common.hpp"

namespace essalg {

/// Commutative monomial: exponent vector over a fixed ambient variable list,
/// with the total degree cached.
struct Monomial {
    std::vector<std::uint32_t> e;
    std::uint32_t deg = 0;

    Monomial() = default;

    explicit Monomial(std::vector<std::uint32_t> exps) : e(std::move(exps)) { recompute_degree(); }

    static Monomial one(std::size_t nvars) { return Monomial(std::vector<std::uint32_t>(nvars, 0)); }

    static Monomial var(std::size_t nvars, std::size_t i, std::uint32_t k = 1) {
        std::vector<std::uint32_t> v(nvars, 0);
        v[i] = k;
        return Monomial(std::move(v));
    }

    void recompute_degree() {
        deg = std::accumulate(e.begin(), e.end(), std::uint32_t{0});
    }

    std::size_t nvars() const { return e.size(); }
    bool is_one() const { return deg == 0; }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        r.deg += o.deg;
        return r;
    }

    bool divides(const Monomial& o) const {
        if (deg > o.deg) return false;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    /// Quotient o / this; caller must ensure divisibility.
    Monomial quotient_of(const Monomial& o) const {
        Monomial r = o;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= e[i];
        r.deg -= deg;
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (o.e[i] > r.e[i]) r.e[i] = o.e[i];
        r.recompute_degree();
        return r;
    }

    bool coprime_with(const Monomial& o) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0 && o.e[i] > 0) return false;
        return true;
    }

    /// True when every variable with a positive exponent is flagged in `mask`.
    bool supported_on(const std::vector<std::uint8_t>& mask) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0 && !mask[i]) return false;
        return true;
    }

    std::string str(const std::vector<std::string>& vars) const {
        if (is_one()) return "1";
        std::string s;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += vars[i];
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
        return s;
    }
};

}  // namespace essalg
