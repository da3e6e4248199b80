#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "chebfib/idl/ast.hpp"
#include "chebfib/idl/format.hpp"

namespace chebfib::idl {

/// Evaluation failure that is an error, not a falsified identity:
/// unbound radical, negative sequence index, 0^negative, division by zero
/// at a concrete n.
class EvalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

namespace detail {

struct Env {
    long n = 0;
    std::optional<long> k;

    long metavar(char name) const {
        if (name == 'n')
            return n;
        if (name == 'k' && k.has_value())
            return *k;
        throw EvalError(std::string("unbound metavariable '") + name + "'");
    }

    long affine(const AffineIndex& a) const {
        long v = a.n * n + a.c;
        if (a.k != 0)
            v += a.k * metavar('k');
        return v;
    }
};

class Evaluator {
  public:
    Evaluator(ExtCtxPtr ctx, const RadicalBindings& bindings)
        : ctx_(std::move(ctx)), bindings_(bindings) {
        if (bindings_.w1_radicand != ctx_->d1 || bindings_.w2_radicand != ctx_->d2)
            throw EvalError("radical bindings do not match the evaluation context");
    }

    ExtElem eval(const ExprPtr& e, const Env& env) const {
        return std::visit([&](const auto& node) { return eval_node(node, env); }, e->node);
    }

  private:
    ExtElem scalar(RatFunc v) const { return ExtElem::from_scalar(ctx_, std::move(v)); }

    ExtElem eval_node(const IntConst& v, const Env&) const {
        return scalar(RatFunc(Rational(static_cast<long>(v.value))));
    }
    ExtElem eval_node(const RationalConst& v, const Env&) const {
        return scalar(RatFunc(v.value));
    }
    ExtElem eval_node(const VarX&, const Env&) const { return scalar(RatFunc(Poly::x())); }
    ExtElem eval_node(const MetaVar& v, const Env& env) const {
        return scalar(RatFunc(Rational(env.metavar(v.name))));
    }
    ExtElem eval_node(const SeqRef& v, const Env& env) const {
        const long idx = env.affine(v.index);
        if (idx < 0)
            throw EvalError("negative sequence index " + std::to_string(idx) + " in " +
                            std::string(to_string(v.kind)) + "(" + v.index.to_string() + ",...)");
        const Poly p = seq_poly(v.kind, idx);
        // The common argument x embeds the polynomial directly.
        if (std::holds_alternative<VarX>(v.arg->node))
            return scalar(RatFunc(p));
        return ext_eval_poly(p, eval(v.arg, env));
    }
    ExtElem eval_node(const NumSeqRef& v, const Env& env) const {
        const long idx = env.affine(v.index);
        if (idx < 0)
            throw EvalError("negative sequence index " + std::to_string(idx) + " in " +
                            std::string(to_string(v.kind)) + "(" + v.index.to_string() + ")");
        return scalar(RatFunc(num_seq(v.kind, idx)));
    }
    ExtElem eval_node(const BinomRef& v, const Env& env) const {
        return scalar(RatFunc(binomial(env.affine(v.top), env.affine(v.bottom))));
    }
    ExtElem eval_node(const SumExpr& v, const Env& env) const {
        const long lo = env.affine(v.lo);
        const long hi = env.affine(v.hi);
        ExtElem acc = ExtElem::zero(ctx_);
        // Empty when hi < lo; terms are only ever materialized in range.
        for (long i = lo; i <= hi; ++i) {
            Env inner = env;
            if (v.var == 'k')
                inner.k = i;
            else
                inner.n = i;
            acc += eval(v.body, inner);
        }
        return acc;
    }
    ExtElem eval_node(const PowExpr& v, const Env& env) const {
        const long e = env.affine(v.exp);
        const ExtElem base = eval(v.base, env);
        if (e < 0 && base.is_zero())
            throw EvalError("0 raised to negative power " + std::to_string(e));
        return base.pow(e);
    }
    ExtElem eval_node(const NegExpr& v, const Env& env) const { return -eval(v.a, env); }
    ExtElem eval_node(const BinaryExpr& v, const Env& env) const {
        const ExtElem l = eval(v.lhs, env);
        const ExtElem r = eval(v.rhs, env);
        switch (v.op) {
            case '+': return l + r;
            case '-': return l - r;
            case '*': return l * r;
            default:
                if (r.is_zero())
                    throw EvalError("division by zero while evaluating " + format_expr(v.rhs));
                return l * r.inverse();
        }
    }
    ExtElem eval_node(const SqrtExpr& v, const Env& env) const {
        const ExtElem radicand = eval(v.radicand, env);
        RatFunc rf;
        try {
            rf = radicand.project_ratfunc();
        } catch (const NotPolynomialError&) {
            throw EvalError("unbound radical: radicand is not radical-free: " +
                            format_expr(v.radicand));
        }
        if (rf.is_poly() && rf.num() == bindings_.w1_radicand)
            return ExtElem::w1(ctx_);
        if (rf.is_poly() && rf.num() == bindings_.w2_radicand)
            return ExtElem::w2(ctx_);
        throw EvalError("unbound radical: sqrt(" + rf.to_string() +
                        ") matches neither bound radicand");
    }
    ExtElem eval_node(const SignPow& v, const Env& env) const {
        const long e = env.affine(v.exp);
        const bool odd = (e % 2) != 0;
        return scalar(RatFunc(Rational(odd ? -1 : 1)));
    }

    ExtCtxPtr ctx_;
    RadicalBindings bindings_;
};

}  // namespace detail

/// Residual LHS - RHS at a concrete n, computed in the given context.
inline ExtElem eval_identity(const Identity& id, long n, const ExtCtxPtr& ctx) {
    if (n < id.n_min)
        throw EvalError("n = " + std::to_string(n) + " is below the identity's n_min = " +
                        std::to_string(id.n_min));
    const detail::Evaluator ev(ctx, id.bindings);
    const detail::Env env{n, std::nullopt};
    return ev.eval(id.lhs, env) - ev.eval(id.rhs, env);
}

/// Evaluates a single expression (exposed for tests and diagnostics).
inline ExtElem eval_expr(const ExprPtr& e, long n, std::optional<long> k, const ExtCtxPtr& ctx,
                         const RadicalBindings& bindings = {}) {
    const detail::Evaluator ev(ctx, bindings);
    return ev.eval(e, detail::Env{n, k});
}

}  // namespace chebfib::idl
