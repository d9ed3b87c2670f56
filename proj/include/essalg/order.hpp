#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "essalg/common.hpp"
#include "essalg/monomial.hpp"

namespace essalg {

/// Global monomial order: lex, graded reverse lex, or a block elimination
/// order that compares the flagged block (grevlex within it) before the rest.
struct MonomialOrder {
    enum class Tag : std::uint8_t { Lex, Grevlex, Block };

    Tag tag = Tag::Grevlex;
    std::vector<std::uint8_t> elim;  // Block only: 1 marks the leading block

    static MonomialOrder lex() { return MonomialOrder{Tag::Lex, {}}; }
    static MonomialOrder grevlex() { return MonomialOrder{Tag::Grevlex, {}}; }

    static MonomialOrder block(std::vector<std::uint8_t> elim_mask) {
        bool any = false;
        for (auto b : elim_mask) any = any || (b != 0);
        if (!any) throw InputError("block order needs a nonempty elimination block");
        return MonomialOrder{Tag::Block, std::move(elim_mask)};
    }

    bool operator==(const MonomialOrder& o) const { return tag == o.tag && elim == o.elim; }

    /// -1, 0, +1 for a < b, a == b, a > b.
    int cmp(const Monomial& a, const Monomial& b) const {
        switch (tag) {
            case Tag::Lex: return cmp_lex(a, b);
            case Tag::Grevlex: return cmp_grevlex_masked(a, b, nullptr, false);
            case Tag::Block: {
                if (int c = cmp_grevlex_masked(a, b, &elim, true)) return c;
                return cmp_grevlex_masked(a, b, &elim, false);
            }
        }
        throw MathError("unreachable order tag");
    }

    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

    std::string str() const {
        switch (tag) {
            case Tag::Lex: return "lex";
            case Tag::Grevlex: return "grevlex";
            case Tag::Block: {
                std::string s = "block[";
                for (std::size_t i = 0; i < elim.size(); ++i)
                    if (elim[i]) s += (s.back() == '[' ? "" : ",") + std::to_string(i);
                return s + "]";
            }
        }
        return "?";
    }

  private:
    static int cmp_lex(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.e.size(); ++i) {
            if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
        }
        return 0;
    }

    /// Grevlex restricted to the variables where mask membership == in_block;
    /// a null mask means all variables participate.
    static int cmp_grevlex_masked(const Monomial& a, const Monomial& b,
                                  const std::vector<std::uint8_t>* mask, bool in_block) {
        std::uint64_t da = 0, db = 0;
        for (std::size_t i = 0; i < a.e.size(); ++i) {
            if (mask && static_cast<bool>((*mask)[i]) != in_block) continue;
            da += a.e[i];
            db += b.e[i];
        }
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t j = a.e.size(); j-- > 0;) {
            if (mask && static_cast<bool>((*mask)[j]) != in_block) continue;
            if (a.e[j] != b.e[j]) return a.e[j] < b.e[j] ? 1 : -1;
        }
        return 0;
    }
};

}  // namespace essalg
