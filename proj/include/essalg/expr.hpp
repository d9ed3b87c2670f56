#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "essalg/common.hpp"
#include "essalg/polynomial.hpp"

namespace essalg {

/// Expression grammar shared by every file format:
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := '-' factor | base ('^' UINT)?
///   base   := INT | NAME | '(' expr ')'
/// Implicit multiplication is rejected on purpose.
struct ExprNode {
    enum class Kind : std::uint8_t { Int, Var, Neg, Add, Sub, Mul, Pow } kind;
    mpz_class num;           // Int
    std::string name;        // Var
    std::uint32_t exponent = 0;  // Pow
    std::vector<ExprNode> kids;
};

namespace detail {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    explicit Lexer(const std::string& src) : s(src) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool done() {
        skip_ws();
        return pos >= s.size();
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw InputError("parse error at position " + std::to_string(pos) + " in \"" + s +
                         "\": " + msg);
    }
};

inline ExprNode parse_expr(Lexer& lx);

inline ExprNode parse_base(Lexer& lx) {
    char c = lx.peek();
    if (c == '(') {
        ++lx.pos;
        ExprNode inner = parse_expr(lx);
        if (lx.peek() != ')') lx.fail("expected ')'");
        ++lx.pos;
        return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = lx.pos;
        while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
            ++lx.pos;
        ExprNode n{ExprNode::Kind::Int, mpz_class(lx.s.substr(start, lx.pos - start)), "", 0, {}};
        return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = lx.pos;
        while (lx.pos < lx.s.size() &&
               (std::isalnum(static_cast<unsigned char>(lx.s[lx.pos])) || lx.s[lx.pos] == '_'))
            ++lx.pos;
        ExprNode n{ExprNode::Kind::Var, 0, lx.s.substr(start, lx.pos - start), 0, {}};
        return n;
    }
    lx.fail("expected integer, name, or '('");
}

inline ExprNode parse_factor(Lexer& lx) {
    if (lx.peek() == '-') {
        ++lx.pos;
        ExprNode n{ExprNode::Kind::Neg, 0, "", 0, {}};
        n.kids.push_back(parse_factor(lx));
        return n;
    }
    ExprNode base = parse_base(lx);
    if (lx.peek() == '^') {
        ++lx.pos;
        char c = lx.peek();
        if (!std::isdigit(static_cast<unsigned char>(c))) lx.fail("exponent must be a nonnegative integer");
        std::size_t start = lx.pos;
        while (lx.pos < lx.s.size() && std::isdigit(static_cast<unsigned char>(lx.s[lx.pos])))
            ++lx.pos;
        unsigned long e = std::stoul(lx.s.substr(start, lx.pos - start));
        if (e > 1000) lx.fail("exponent too large");
        ExprNode n{ExprNode::Kind::Pow, 0, "", static_cast<std::uint32_t>(e), {}};
        n.kids.push_back(std::move(base));
        return n;
    }
    return base;
}

inline ExprNode parse_term(Lexer& lx) {
    ExprNode acc = parse_factor(lx);
    while (true) {
        char c = lx.peek();
        if (c == '*') {
            ++lx.pos;
            ExprNode n{ExprNode::Kind::Mul, 0, "", 0, {}};
            n.kids.push_back(std::move(acc));
            n.kids.push_back(parse_factor(lx));
            acc = std::move(n);
        } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(') {
            lx.fail("implicit multiplication is not allowed; write '*'");
        } else {
            return acc;
        }
    }
}

inline ExprNode parse_expr(Lexer& lx) {
    ExprNode acc = parse_term(lx);
    while (true) {
        char c = lx.peek();
        if (c == '+' || c == '-') {
            ++lx.pos;
            ExprNode n{c == '+' ? ExprNode::Kind::Add : ExprNode::Kind::Sub, 0, "", 0, {}};
            n.kids.push_back(std::move(acc));
            n.kids.push_back(parse_term(lx));
            acc = std::move(n);
        } else {
            return acc;
        }
    }
}

}  // namespace detail

inline ExprNode parse_expression(const std::string& src) {
    detail::Lexer lx(src);
    if (lx.done()) throw InputError("empty expression");
    ExprNode n = detail::parse_expr(lx);
    if (!lx.done()) lx.fail("trailing input");
    return n;
}

/// Evaluate an expression tree in a commutative polynomial ring.
inline Polynomial eval_comm(const ExprNode& n, const std::map<std::string, std::size_t>& var_index,
                            std::size_t nvars, const Field& f, const MonomialOrder& ord) {
    switch (n.kind) {
        case ExprNode::Kind::Int:
            return Polynomial::constant(nvars, Scalar::from_mpz(f, n.num));
        case ExprNode::Kind::Var: {
            auto it = var_index.find(n.name);
            if (it == var_index.end()) throw InputError("unknown variable \"" + n.name + "\"");
            return Polynomial::variable(nvars, it->second, f);
        }
        case ExprNode::Kind::Neg:
            return neg(eval_comm(n.kids[0], var_index, nvars, f, ord));
        case ExprNode::Kind::Add:
            return add(eval_comm(n.kids[0], var_index, nvars, f, ord),
                       eval_comm(n.kids[1], var_index, nvars, f, ord), ord);
        case ExprNode::Kind::Sub:
            return sub(eval_comm(n.kids[0], var_index, nvars, f, ord),
                       eval_comm(n.kids[1], var_index, nvars, f, ord), ord);
        case ExprNode::Kind::Mul:
            return mul(eval_comm(n.kids[0], var_index, nvars, f, ord),
                       eval_comm(n.kids[1], var_index, nvars, f, ord), ord);
        case ExprNode::Kind::Pow:
            return pow(eval_comm(n.kids[0], var_index, nvars, f, ord), n.exponent, ord, f);
    }
    throw MathError("unreachable expression kind");
}

inline Polynomial parse_comm_polynomial(const std::string& src, const std::vector<std::string>& vars,
                                        const Field& f, const MonomialOrder& ord) {
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < vars.size(); ++i) idx[vars[i]] = i;
    return eval_comm(parse_expression(src), idx, vars.size(), f, ord);
}

}  // namespace essalg
