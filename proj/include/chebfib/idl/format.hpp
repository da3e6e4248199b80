#pragma once

#include <string>

#include "chebfib/idl/ast.hpp"

namespace chebfib::idl {

namespace detail {

// Precedence levels for minimal parenthesization: 1 add/sub, 2 mul/div,
// 3 unary minus, 4 atoms (calls, names, numbers, powers).
inline int level(const ExprPtr& e) {
    const auto& n = e->node;
    if (std::holds_alternative<BinaryExpr>(n)) {
        const char op = std::get<BinaryExpr>(n).op;
        return (op == '+' || op == '-') ? 1 : 2;
    }
    if (std::holds_alternative<NegExpr>(n))
        return 3;
    if (std::holds_alternative<RationalConst>(n))
        return 2;  // prints as p/q, reparses at term level
    return 4;
}

inline std::string format_impl(const ExprPtr& e);

inline std::string wrap(const ExprPtr& e, int min_level) {
    const std::string s = format_impl(e);
    if (level(e) < min_level)
        return "(" + s + ")";
    return s;
}

inline std::string format_exponent(const AffineIndex& exp) {
    if (exp.is_const() && exp.c >= 0)
        return std::to_string(exp.c);
    return "(" + exp.to_string() + ")";
}

struct FormatVisitor {
    std::string operator()(const IntConst& v) const { return std::to_string(v.value); }
    std::string operator()(const RationalConst& v) const { return v.value.to_string(); }
    std::string operator()(const VarX&) const { return "x"; }
    std::string operator()(const MetaVar& v) const { return std::string(1, v.name); }
    std::string operator()(const SeqRef& v) const {
        return std::string(to_string(v.kind)) + "(" + v.index.to_string() + "," +
               format_impl(v.arg) + ")";
    }
    std::string operator()(const NumSeqRef& v) const {
        return std::string(to_string(v.kind)) + "(" + v.index.to_string() + ")";
    }
    std::string operator()(const BinomRef& v) const {
        return "binom(" + v.top.to_string() + "," + v.bottom.to_string() + ")";
    }
    std::string operator()(const SumExpr& v) const {
        return std::string("sum(") + v.var + "," + v.lo.to_string() + "," + v.hi.to_string() +
               "," + format_impl(v.body) + ")";
    }
    std::string operator()(const PowExpr& v) const {
        return wrap(v.base, 4) + "^" + format_exponent(v.exp);
    }
    std::string operator()(const NegExpr& v) const {
        // '^' binds tighter than unary minus, so powers stay bare.
        return "-" + wrap(v.a, 4);
    }
    std::string operator()(const BinaryExpr& v) const {
        switch (v.op) {
            case '+': return wrap(v.lhs, 1) + " + " + wrap(v.rhs, 2);
            case '-': return wrap(v.lhs, 1) + " - " + wrap(v.rhs, 2);
            case '*': return wrap(v.lhs, 2) + "*" + wrap(v.rhs, 3);
            default: return wrap(v.lhs, 2) + "/" + wrap(v.rhs, 3);
        }
    }
    std::string operator()(const SqrtExpr& v) const {
        return "sqrt(" + format_impl(v.radicand) + ")";
    }
    std::string operator()(const SignPow& v) const { return "sign(" + v.exp.to_string() + ")"; }
};

inline std::string format_impl(const ExprPtr& e) { return std::visit(FormatVisitor{}, e->node); }

}  // namespace detail

/// Canonical text; parse(format(id)) is structurally the identity.
inline std::string format_expr(const ExprPtr& e) { return detail::format_impl(e); }

inline std::string format_identity(const Identity& id) {
    return format_expr(id.lhs) + " = " + format_expr(id.rhs) + " for n >= " +
           std::to_string(id.n_min);
}

}  // namespace chebfib::idl
