#pragma once

// Single-coefficient AST mutation for negative controls: bumps exactly one
// integer constant. Sites inside sqrt radicands are excluded (mutating a
// radicand produces an unbound-radical error rather than a falsified
// identity).

#include "chebfib/idl/ast.hpp"

namespace testutil {

struct IntMutator {
    int target = -1;
    int seen = 0;
    long long delta = 1;

    chebfib::idl::ExprPtr walk(const chebfib::idl::ExprPtr& e, bool in_sqrt) {
        using namespace chebfib::idl;
        const auto& node = e->node;
        if (auto* v = std::get_if<IntConst>(&node)) {
            if (!in_sqrt && seen++ == target)
                return make_expr(IntConst{v->value + delta});
            return e;
        }
        if (auto* v = std::get_if<SeqRef>(&node))
            return make_expr(SeqRef{v->kind, v->index, walk(v->arg, in_sqrt)});
        if (auto* v = std::get_if<SumExpr>(&node))
            return make_expr(SumExpr{v->var, v->lo, v->hi, walk(v->body, in_sqrt)});
        if (auto* v = std::get_if<PowExpr>(&node))
            return make_expr(PowExpr{walk(v->base, in_sqrt), v->exp});
        if (auto* v = std::get_if<NegExpr>(&node))
            return make_expr(NegExpr{walk(v->a, in_sqrt)});
        if (auto* v = std::get_if<BinaryExpr>(&node))
            return make_expr(BinaryExpr{v->op, walk(v->lhs, in_sqrt), walk(v->rhs, in_sqrt)});
        if (auto* v = std::get_if<SqrtExpr>(&node))
            return make_expr(SqrtExpr{walk(v->radicand, true)});
        return e;
    }
};

inline int count_int_sites(const chebfib::idl::ExprPtr& e) {
    IntMutator m;
    m.target = -1;  // never fires, only counts
    m.walk(e, false);
    return m.seen;
}

/// Returns a copy of the identity with the site-th eligible integer
/// constant (counting LHS then RHS) changed by delta.
inline chebfib::idl::Identity mutate_one_int(const chebfib::idl::Identity& id, int site,
                                             long long delta) {
    IntMutator m;
    m.target = site;
    m.delta = delta;
    chebfib::idl::Identity out = id;
    out.lhs = m.walk(id.lhs, false);
    if (m.target >= m.seen)
        out.rhs = m.walk(id.rhs, false);  // the site index continues into the RHS
    else
        out.rhs = id.rhs;
    return out;
}

}  // namespace testutil
