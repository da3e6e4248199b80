#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>

#include "chebfib/sequences.hpp"

namespace chebfib::idl {

/// Integer-affine expression a*n + b*k + c — the only shape the language
/// allows in sequence indices, sum bounds, and exponents.
struct AffineIndex {
    long n = 0;
    long k = 0;
    long c = 0;

    bool is_const() const { return n == 0 && k == 0; }

    friend AffineIndex operator+(const AffineIndex& a, const AffineIndex& b) {
        return {a.n + b.n, a.k + b.k, a.c + b.c};
    }
    friend AffineIndex operator-(const AffineIndex& a, const AffineIndex& b) {
        return {a.n - b.n, a.k - b.k, a.c - b.c};
    }
    AffineIndex operator-() const { return {-n, -k, -c}; }
    AffineIndex scaled(long s) const { return {n * s, k * s, c * s}; }

    friend bool operator==(const AffineIndex& a, const AffineIndex& b) {
        return a.n == b.n && a.k == b.k && a.c == b.c;
    }

    std::string to_string() const {
        std::string out;
        auto term = [&out](long coef, const char* name) {
            if (coef == 0)
                return;
            if (out.empty())
                out += coef < 0 ? "-" : "";
            else
                out += coef < 0 ? "-" : "+";
            const long a = coef < 0 ? -coef : coef;
            if (a != 1 || name[0] == '\0')
                out += std::to_string(a);
            if (name[0] != '\0') {
                if (a != 1)
                    out += "*";
                out += name;
            }
        };
        term(n, "n");
        term(k, "k");
        term(c, "");
        if (out.empty())
            return "0";
        return out;
    }
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct IntConst {
    long long value;
};
struct RationalConst {
    Rational value;
};
struct VarX {};
struct MetaVar {
    char name;  // 'n' or 'k'
};
/// Sequence polynomial reference: kind, affine index, argument expression
/// (the argument is evaluated first, so F(k, 3*x) works).
struct SeqRef {
    SeqKind kind;
    AffineIndex index;
    ExprPtr arg;
};
struct NumSeqRef {
    NumSeqKind kind;
    AffineIndex index;
};
struct BinomRef {
    AffineIndex top;
    AffineIndex bottom;
};
struct SumExpr {
    char var;  // bound metavariable
    AffineIndex lo;
    AffineIndex hi;
    ExprPtr body;
};
struct PowExpr {
    ExprPtr base;
    AffineIndex exp;
};
struct NegExpr {
    ExprPtr a;
};
struct BinaryExpr {
    char op;  // '+', '-', '*', '/'
    ExprPtr lhs;
    ExprPtr rhs;
};
struct SqrtExpr {
    ExprPtr radicand;
};
/// sign(e) = (-1)^e.
struct SignPow {
    AffineIndex exp;
};

using ExprNode = std::variant<IntConst, RationalConst, VarX, MetaVar, SeqRef, NumSeqRef,
                              BinomRef, SumExpr, PowExpr, NegExpr, BinaryExpr, SqrtExpr, SignPow>;

struct Expr {
    ExprNode node;
};

inline ExprPtr make_expr(ExprNode node) {
    return std::make_shared<const Expr>(Expr{std::move(node)});
}

/// Which radicand plays w1 and which plays w2 when the identity is
/// evaluated in a biquadratic context.
struct RadicalBindings {
    Poly w1_radicand{std::vector<Rational>{Rational(-1), Rational(0), Rational(1)}};  // x^2-1
    Poly w2_radicand{std::vector<Rational>{Rational(4), Rational(0), Rational(1)}};   // x^2+4

    friend bool operator==(const RadicalBindings& a, const RadicalBindings& b) {
        return a.w1_radicand == b.w1_radicand && a.w2_radicand == b.w2_radicand;
    }
};

/// A machine-checkable identity: two expressions whose free metavariable
/// is n, valid from n_min on.
struct Identity {
    ExprPtr lhs;
    ExprPtr rhs;
    long n_min = 0;
    RadicalBindings bindings;
};

inline bool structurally_equal(const ExprPtr& a, const ExprPtr& b);

namespace detail {

struct EqVisitor {
    const ExprPtr& other;

    bool operator()(const IntConst& v) const {
        auto* o = std::get_if<IntConst>(&other->node);
        return o && o->value == v.value;
    }
    bool operator()(const RationalConst& v) const {
        auto* o = std::get_if<RationalConst>(&other->node);
        return o && o->value == v.value;
    }
    bool operator()(const VarX&) const { return std::holds_alternative<VarX>(other->node); }
    bool operator()(const MetaVar& v) const {
        auto* o = std::get_if<MetaVar>(&other->node);
        return o && o->name == v.name;
    }
    bool operator()(const SeqRef& v) const {
        auto* o = std::get_if<SeqRef>(&other->node);
        return o && o->kind == v.kind && o->index == v.index && structurally_equal(v.arg, o->arg);
    }
    bool operator()(const NumSeqRef& v) const {
        auto* o = std::get_if<NumSeqRef>(&other->node);
        return o && o->kind == v.kind && o->index == v.index;
    }
    bool operator()(const BinomRef& v) const {
        auto* o = std::get_if<BinomRef>(&other->node);
        return o && o->top == v.top && o->bottom == v.bottom;
    }
    bool operator()(const SumExpr& v) const {
        auto* o = std::get_if<SumExpr>(&other->node);
        return o && o->var == v.var && o->lo == v.lo && o->hi == v.hi &&
               structurally_equal(v.body, o->body);
    }
    bool operator()(const PowExpr& v) const {
        auto* o = std::get_if<PowExpr>(&other->node);
        return o && o->exp == v.exp && structurally_equal(v.base, o->base);
    }
    bool operator()(const NegExpr& v) const {
        auto* o = std::get_if<NegExpr>(&other->node);
        return o && structurally_equal(v.a, o->a);
    }
    bool operator()(const BinaryExpr& v) const {
        auto* o = std::get_if<BinaryExpr>(&other->node);
        return o && o->op == v.op && structurally_equal(v.lhs, o->lhs) &&
               structurally_equal(v.rhs, o->rhs);
    }
    bool operator()(const SqrtExpr& v) const {
        auto* o = std::get_if<SqrtExpr>(&other->node);
        return o && structurally_equal(v.radicand, o->radicand);
    }
    bool operator()(const SignPow& v) const {
        auto* o = std::get_if<SignPow>(&other->node);
        return o && o->exp == v.exp;
    }
};

}  // namespace detail

inline bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return std::visit(detail::EqVisitor{b}, a->node);
}

inline bool structurally_equal(const Identity& a, const Identity& b) {
    return a.n_min == b.n_min && a.bindings == b.bindings &&
           structurally_equal(a.lhs, b.lhs) && structurally_equal(a.rhs, b.rhs);
}

}  // namespace chebfib::idl
