#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "essalg/comm.hpp"
#include "essalg/common.hpp"
#include "essalg/expr.hpp"

namespace essalg {

/// Word in the free monoid on the generators; letters are generator indices.
using Word = std::vector<std::uint32_t>;

/// Degree-lexicographic word order: longer words are larger, equal lengths
/// compare positionwise with the higher generator index winning.
inline int word_cmp(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() > b.size() ? 1 : -1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
}

inline Word word_concat(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

/// Element of the free associative algebra. Terms are sorted strictly
/// descending in deglex and never carry zero coefficients.
struct NCPolynomial {
    std::size_t ngens = 0;
    std::vector<std::pair<Word, Scalar>> terms;

    NCPolynomial() = default;
    explicit NCPolynomial(std::size_t g) : ngens(g) {}

    static NCPolynomial zero(std::size_t g) { return NCPolynomial(g); }

    static NCPolynomial constant(std::size_t g, const Scalar& c) {
        NCPolynomial p(g);
        if (!c.is_zero()) p.terms.emplace_back(Word{}, c);
        return p;
    }

    static NCPolynomial letter(std::size_t g, std::uint32_t i, const Field& f) {
        NCPolynomial p(g);
        p.terms.emplace_back(Word{i}, Scalar::one(f));
        return p;
    }

    static NCPolynomial word_term(std::size_t g, Word w, Scalar c) {
        NCPolynomial p(g);
        if (!c.is_zero()) p.terms.emplace_back(std::move(w), std::move(c));
        return p;
    }

    static NCPolynomial normalized(std::size_t g, std::vector<std::pair<Word, Scalar>> raw) {
        std::sort(raw.begin(), raw.end(),
                  [](const auto& a, const auto& b) { return word_cmp(a.first, b.first) > 0; });
        NCPolynomial p(g);
        for (auto& t : raw) {
            if (!p.terms.empty() && p.terms.back().first == t.first) {
                p.terms.back().second = p.terms.back().second + t.second;
                if (p.terms.back().second.is_zero()) p.terms.pop_back();
            } else if (!t.second.is_zero()) {
                p.terms.push_back(std::move(t));
            }
        }
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    const Word& leading_word() const {
        if (terms.empty()) throw MathError("leading word of zero");
        return terms.front().first;
    }

    std::uint32_t degree() const {
        return terms.empty() ? 0 : static_cast<std::uint32_t>(terms.front().first.size());
    }

    bool has_constant_term() const {
        return !terms.empty() && terms.back().first.empty();
    }

    bool operator==(const NCPolynomial& o) const { return ngens == o.ngens && terms == o.terms; }
    bool operator!=(const NCPolynomial& o) const { return !(*this == o); }

    std::string str(const std::vector<std::string>& gens) const {
        if (terms.empty()) return "0";
        std::string s;
        for (const auto& [w, c] : terms) {
            std::string cs = c.str();
            bool negc = !cs.empty() && cs[0] == '-';
            if (s.empty()) {
                if (negc) s += "-", cs = cs.substr(1);
            } else {
                s += negc ? " - " : " + ";
                if (negc) cs = cs.substr(1);
            }
            if (w.empty()) {
                s += cs;
            } else {
                if (cs != "1") s += cs.find('/') == std::string::npos ? cs + "*" : "(" + cs + ")*";
                for (std::size_t i = 0; i < w.size(); ++i)
                    s += (i ? "*" : "") + gens[w[i]];
            }
        }
        return s;
    }
};

inline NCPolynomial nc_neg(const NCPolynomial& p) {
    NCPolynomial r = p;
    for (auto& t : r.terms) t.second = -t.second;
    return r;
}

inline NCPolynomial nc_add(const NCPolynomial& a, const NCPolynomial& b) {
    NCPolynomial r(a.ngens ? a.ngens : b.ngens);
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        int c = word_cmp(a.terms[i].first, b.terms[j].first);
        if (c > 0) {
            r.terms.push_back(a.terms[i++]);
        } else if (c < 0) {
            r.terms.push_back(b.terms[j++]);
        } else {
            Scalar s = a.terms[i].second + b.terms[j].second;
            if (!s.is_zero()) r.terms.emplace_back(a.terms[i].first, std::move(s));
            ++i, ++j;
        }
    }
    for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) r.terms.push_back(b.terms[j]);
    return r;
}

inline NCPolynomial nc_sub(const NCPolynomial& a, const NCPolynomial& b) {
    return nc_add(a, nc_neg(b));
}

inline NCPolynomial nc_scale(const NCPolynomial& p, const Scalar& c) {
    if (c.is_zero()) return NCPolynomial::zero(p.ngens);
    NCPolynomial r = p;
    for (auto& t : r.terms) t.second = t.second * c;
    return r;
}

inline NCPolynomial nc_mul(const NCPolynomial& a, const NCPolynomial& b) {
    std::vector<std::pair<Word, Scalar>> raw;
    raw.reserve(a.terms.size() * b.terms.size());
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms)
            raw.emplace_back(word_concat(ta.first, tb.first), ta.second * tb.second);
    return NCPolynomial::normalized(a.ngens ? a.ngens : b.ngens, std::move(raw));
}

/// Sandwich u * p * v for words u, v; concatenation preserves deglex order.
inline NCPolynomial nc_sandwich(const Word& u, const NCPolynomial& p, const Word& v) {
    NCPolynomial r(p.ngens);
    r.terms.reserve(p.terms.size());
    for (const auto& [w, c] : p.terms) r.terms.emplace_back(word_concat(u, word_concat(w, v)), c);
    return r;
}

/// Evaluate an expression tree in the free algebra; x^k means x repeated.
inline NCPolynomial eval_nc(const ExprNode& n, const std::map<std::string, std::size_t>& gen_index,
                            std::size_t ngens, const Field& f) {
    switch (n.kind) {
        case ExprNode::Kind::Int:
            return NCPolynomial::constant(ngens, Scalar::from_mpz(f, n.num));
        case ExprNode::Kind::Var: {
            auto it = gen_index.find(n.name);
            if (it == gen_index.end()) throw InputError("unknown generator \"" + n.name + "\"");
            return NCPolynomial::letter(ngens, static_cast<std::uint32_t>(it->second), f);
        }
        case ExprNode::Kind::Neg:
            return nc_neg(eval_nc(n.kids[0], gen_index, ngens, f));
        case ExprNode::Kind::Add:
            return nc_add(eval_nc(n.kids[0], gen_index, ngens, f),
                          eval_nc(n.kids[1], gen_index, ngens, f));
        case ExprNode::Kind::Sub:
            return nc_sub(eval_nc(n.kids[0], gen_index, ngens, f),
                          eval_nc(n.kids[1], gen_index, ngens, f));
        case ExprNode::Kind::Mul:
            return nc_mul(eval_nc(n.kids[0], gen_index, ngens, f),
                          eval_nc(n.kids[1], gen_index, ngens, f));
        case ExprNode::Kind::Pow: {
            NCPolynomial base = eval_nc(n.kids[0], gen_index, ngens, f);
            NCPolynomial r = NCPolynomial::constant(ngens, Scalar::one(f));
            for (std::uint32_t k = 0; k < n.exponent; ++k) r = nc_mul(r, base);
            return r;
        }
    }
    throw MathError("unreachable expression kind");
}

inline NCPolynomial parse_nc_polynomial(const std::string& src,
                                        const std::vector<std::string>& gens, const Field& f) {
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < gens.size(); ++i) idx[gens[i]] = i;
    return eval_nc(parse_expression(src), idx, gens.size(), f);
}

/// Finitely presented associative algebra, unital or not. Nonunital
/// presentations must not mention the empty word.
struct NCPresentation {
    Field field;
    std::vector<std::string> gens;
    std::vector<NCPolynomial> relations;
    bool unital = true;

    static NCPresentation make(Field f, std::vector<std::string> gens,
                               std::vector<NCPolynomial> relations, bool unital) {
        NCPresentation A;
        A.field = f;
        CommPresentation::check_names(gens);
        A.gens = std::move(gens);
        A.unital = unital;
        for (std::size_t i = 0; i < relations.size(); ++i) {
            if (relations[i].is_zero())
                throw InputError("relation " + std::to_string(i + 1) + " is zero");
            if (!unital && relations[i].has_constant_term())
                throw InputError("relation " + std::to_string(i + 1) +
                                 " has a constant term; nonunital presentations cannot use 1");
        }
        A.relations = std::move(relations);
        return A;
    }

    static NCPresentation parse(Field f, std::vector<std::string> gens,
                                const std::vector<std::string>& relation_exprs, bool unital) {
        std::vector<NCPolynomial> rels;
        rels.reserve(relation_exprs.size());
        for (const auto& s : relation_exprs) rels.push_back(parse_nc_polynomial(s, gens, f));
        return make(f, std::move(gens), std::move(rels), unital);
    }

    NCPolynomial parse_poly(const std::string& s) const {
        return parse_nc_polynomial(s, gens, field);
    }
};

/// One oriented rewrite: the leading word lhs maps to the strictly smaller
/// polynomial rhs, with lhs - rhs in the defining ideal.
struct RewriteRule {
    Word lhs;
    NCPolynomial rhs;
};

struct RewriteSystem {
    Field field;
    std::size_t ngens = 0;
    std::uint32_t degree_bound = 0;
    bool trivial = false;  // the ideal contains a unit; every element is 0
    bool confluent_up_to_bound = false;
    bool fully_confluent = false;  // every overlap of the final rules was within the bound
    std::vector<RewriteRule> rules;
};

/// Leftmost occurrence of `pat` in `w`, or npos.
inline std::size_t find_subword(const Word& w, const Word& pat) {
    if (pat.size() > w.size()) return static_cast<std::size_t>(-1);
    for (std::size_t i = 0; i + pat.size() <= w.size(); ++i) {
        bool ok = true;
        for (std::size_t k = 0; k < pat.size(); ++k)
            if (w[i + k] != pat[k]) {
                ok = false;
                break;
            }
        if (ok) return i;
    }
    return static_cast<std::size_t>(-1);
}

/// Full reduction to normal form: repeatedly rewrite the largest reducible
/// term, first rule wins, leftmost occurrence first.
inline NCPolynomial nc_reduce(NCPolynomial p, const RewriteSystem& R) {
    if (R.trivial) return NCPolynomial::zero(p.ngens);
    NCPolynomial result(p.ngens);
    while (!p.is_zero()) {
        const Word w = p.terms.front().first;
        const Scalar c = p.terms.front().second;
        bool rewritten = false;
        for (const auto& rule : R.rules) {
            std::size_t pos = find_subword(w, rule.lhs);
            if (pos == static_cast<std::size_t>(-1)) continue;
            Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
            Word v(w.begin() + static_cast<std::ptrdiff_t>(pos + rule.lhs.size()), w.end());
            p.terms.erase(p.terms.begin());
            p = nc_add(p, nc_scale(nc_sandwich(u, rule.rhs, v), c));
            rewritten = true;
            break;
        }
        if (!rewritten) {
            result.terms.emplace_back(w, c);
            p.terms.erase(p.terms.begin());
        }
    }
    return result;
}

/// Bounded two-sided completion of the relation set under deglex: resolve all
/// critical pairs whose superposed word has length at most `bound`.
inline RewriteSystem complete_bounded(const NCPresentation& A, std::uint32_t bound,
                                      const Budget& budget = {}) {
    if (bound > budget.max_degree)
        throw InputError("completion bound exceeds the degree budget");
    RewriteSystem R;
    R.field = A.field;
    R.ngens = A.gens.size();
    R.degree_bound = bound;

    auto add_rule = [&](NCPolynomial p) -> bool {  // returns true if system became trivial
        p = nc_reduce(std::move(p), R);
        if (p.is_zero()) return false;
        if (p.leading_word().empty()) {
            R.trivial = true;
            R.rules.clear();
            return true;
        }
        Scalar inv = p.terms.front().second.inverse();
        Word lhs = p.terms.front().first;
        p.terms.erase(p.terms.begin());
        R.rules.push_back({std::move(lhs), nc_scale(nc_neg(p), inv)});
        return false;
    };

    for (const auto& r : A.relations)
        if (add_rule(r)) return R;

    std::uint64_t processed = 0;
    std::set<std::tuple<Word, Word, std::size_t, int>> seen;
    bool changed = true;
    while (changed && !R.trivial) {
        changed = false;
        const std::size_t nrules = R.rules.size();
        for (std::size_t i = 0; i < nrules && !R.trivial; ++i) {
            for (std::size_t j = 0; j < nrules && !R.trivial; ++j) {
                const Word li = R.rules[i].lhs;
                const Word lj = R.rules[j].lhs;
                // proper overlap: a suffix of li equals a prefix of lj
                for (std::size_t k = 1; k < li.size() && k < lj.size(); ++k) {
                    bool match = true;
                    for (std::size_t t = 0; t < k; ++t)
                        if (li[li.size() - k + t] != lj[t]) {
                            match = false;
                            break;
                        }
                    if (!match) continue;
                    std::size_t superlen = li.size() + lj.size() - k;
                    if (superlen > bound) continue;
                    if (!seen.insert({li, lj, k, 0}).second) continue;
                    if (++processed > budget.max_pairs)
                        throw ResourceError("pairs", "critical-pair budget exceeded in completion");
                    Word b(lj.begin() + static_cast<std::ptrdiff_t>(k), lj.end());
                    Word a(li.begin(), li.end() - static_cast<std::ptrdiff_t>(k));
                    NCPolynomial left = nc_sandwich({}, R.rules[i].rhs, b);
                    NCPolynomial right = nc_sandwich(a, R.rules[j].rhs, {});
                    if (add_rule(nc_sub(left, right))) break;
                    changed = changed || (R.rules.size() > nrules);
                }
                if (R.trivial) break;
                // containment: li occurs strictly inside lj
                if (i != j && li.size() < lj.size()) {
                    std::size_t pos = find_subword(lj, li);
                    if (pos != static_cast<std::size_t>(-1) && lj.size() <= bound &&
                        seen.insert({li, lj, pos, 1}).second) {
                        if (++processed > budget.max_pairs)
                            throw ResourceError("pairs", "critical-pair budget exceeded in completion");
                        Word u(lj.begin(), lj.begin() + static_cast<std::ptrdiff_t>(pos));
                        Word v(lj.begin() + static_cast<std::ptrdiff_t>(pos + li.size()), lj.end());
                        NCPolynomial inner = nc_sandwich(u, R.rules[i].rhs, v);
                        if (add_rule(nc_sub(R.rules[j].rhs, inner))) break;
                        changed = changed || (R.rules.size() > nrules);
                    }
                }
            }
        }
        if (R.rules.size() > nrules) changed = true;
    }

    if (!R.trivial) {
        R.confluent_up_to_bound = true;
        std::size_t maxlhs = 0;
        for (const auto& r : R.rules) maxlhs = std::max(maxlhs, r.lhs.size());
        R.fully_confluent = maxlhs == 0 || (2 * maxlhs - 1 <= bound);
    } else {
        R.confluent_up_to_bound = true;
        R.fully_confluent = true;
    }
    return R;
}

struct BoundedNormalForm {
    NCPolynomial nf;
    bool confluent_up_to_bound = false;
    bool fully_confluent = false;
};

inline BoundedNormalForm nc_normal_form_bounded(const NCPolynomial& p, const NCPresentation& A,
                                                std::uint32_t bound, const Budget& budget = {}) {
    if (p.degree() > bound)
        throw InputError("polynomial degree exceeds the requested bound");
    RewriteSystem R = complete_bounded(A, bound, budget);
    return {nc_reduce(p, R), R.confluent_up_to_bound, R.fully_confluent};
}

/// Irreducible words of length <= bound: a basis of the quotient in those
/// degrees whenever the system is confluent up to the bound.
inline std::vector<Word> nc_basis_words_bounded(const NCPresentation& A, std::uint32_t bound,
                                                const Budget& budget = {}) {
    RewriteSystem R = complete_bounded(A, bound, budget);
    std::vector<Word> basis;
    if (R.trivial) return basis;
    std::vector<Word> level{Word{}};
    if (A.unital) basis.push_back(Word{});
    for (std::uint32_t d = 1; d <= bound; ++d) {
        std::vector<Word> next;
        for (const auto& w : level)
            for (std::uint32_t g = 0; g < A.gens.size(); ++g) {
                Word x = w;
                x.push_back(g);
                bool reducible = false;
                for (const auto& rule : R.rules)
                    if (find_subword(x, rule.lhs) != static_cast<std::size_t>(-1)) {
                        reducible = true;
                        break;
                    }
                if (!reducible) next.push_back(std::move(x));
            }
        for (const auto& w : next) basis.push_back(w);
        level = std::move(next);
    }
    return basis;
}

}  // namespace essalg
