#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>

#include "chebfib/ratfunc.hpp"

namespace chebfib {

namespace detail {

// Tries to write p as q^2 by coefficient matching. Returns false when p is
// not a perfect square (or the attempt exceeds the degree budget).
inline bool poly_is_square(const Poly& p, int max_half_degree = 8) {
    if (p.is_zero())
        return true;
    const int d = *p.degree();
    if (d % 2 != 0 || d / 2 > max_half_degree)
        return false;
    if (p.is_constant()) {
        const Rational c = p.constant_term();
        if (c.is_negative())
            return false;
        mpz_class rn, rd;
        const mpz_class num = c.numerator(), den = c.denominator();
        if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), 2))
            return false;
        return mpz_root(rd.get_mpz_t(), den.get_mpz_t(), 2) != 0;
    }
    const int h = d / 2;
    const Rational lead = p.coeff(d);
    if (lead.is_negative())
        return false;
    // q = sqrt(lead)*x^h + lower terms, solved top-down.
    mpz_class sn, sd;
    if (!mpz_root(sn.get_mpz_t(), lead.numerator().get_mpz_t(), 2))
        return false;
    if (!mpz_root(sd.get_mpz_t(), lead.denominator().get_mpz_t(), 2))
        return false;
    std::vector<Rational> q(static_cast<size_t>(h) + 1, Rational(0));
    q[static_cast<size_t>(h)] = Rational(sn, sd);
    for (int i = h - 1; i >= 0; --i) {
        // Coefficient of x^(i+h) in q^2 must match p.
        Rational acc(0);
        for (int j = i + 1; j <= h; ++j) {
            const int other = i + h - j;
            if (other > h || other < 0)
                continue;
            if (other > i)
                acc += q[static_cast<size_t>(j)] * q[static_cast<size_t>(other)];
        }
        q[static_cast<size_t>(i)] =
            (p.coeff(i + h) - acc) / (Rational(2) * q[static_cast<size_t>(h)]);
    }
    Poly candidate{std::vector<Rational>(q.begin(), q.end())};
    return candidate * candidate == p;
}

}  // namespace detail

/// Context for the biquadratic extension Q(x)(w1, w2), w1^2 = d1, w2^2 = d2.
/// Discriminants are checked by a cheap heuristic only (degree parity plus
/// coefficient-matching square root); callers instantiate the handful of
/// contexts the catalog needs. Compared by structural equality; ctx(a,b)
/// and ctx(b,a) are distinct.
struct ExtCtx {
    Poly d1;
    Poly d2;

    ExtCtx(Poly d1_, Poly d2_) : d1(std::move(d1_)), d2(std::move(d2_)) {
        if (d1.is_zero() || d2.is_zero())
            throw std::domain_error("ExtCtx: zero discriminant");
        if (detail::poly_is_square(d1) || detail::poly_is_square(d2) ||
            detail::poly_is_square(d1 * d2))
            throw std::domain_error("ExtCtx: discriminant is a perfect square");
    }

    friend bool operator==(const ExtCtx& a, const ExtCtx& b) {
        return a.d1 == b.d1 && a.d2 == b.d2;
    }
    friend bool operator!=(const ExtCtx& a, const ExtCtx& b) { return !(a == b); }
};

using ExtCtxPtr = std::shared_ptr<const ExtCtx>;

inline ExtCtxPtr make_ctx(Poly d1, Poly d2) {
    return std::make_shared<const ExtCtx>(std::move(d1), std::move(d2));
}

/// Raised when projecting an element with surviving radical parts (or a
/// nonconstant denominator) to a polynomial; carries the offenders.
class NotPolynomialError : public std::domain_error {
  public:
    NotPolynomialError(std::string what, std::string offending)
        : std::domain_error(std::move(what)), offending_(std::move(offending)) {}
    const std::string& offending() const { return offending_; }

  private:
    std::string offending_;
};

/// Element c00 + c10*w1 + c01*w2 + c11*w1*w2 of Q(x)(w1, w2).
/// Immutable value type; all four components share one context.
class ExtElem {
  public:
    static ExtElem zero(ExtCtxPtr ctx) { return ExtElem(std::move(ctx)); }
    static ExtElem one(ExtCtxPtr ctx) { return from_scalar(std::move(ctx), RatFunc(1)); }
    static ExtElem from_scalar(ExtCtxPtr ctx, RatFunc c) {
        ExtElem e(std::move(ctx));
        e.c00_ = std::move(c);
        return e;
    }
    static ExtElem w1(ExtCtxPtr ctx) {
        ExtElem e(std::move(ctx));
        e.c10_ = RatFunc(1);
        return e;
    }
    static ExtElem w2(ExtCtxPtr ctx) {
        ExtElem e(std::move(ctx));
        e.c01_ = RatFunc(1);
        return e;
    }
    static ExtElem make(ExtCtxPtr ctx, RatFunc c00, RatFunc c10, RatFunc c01, RatFunc c11) {
        ExtElem e(std::move(ctx));
        e.c00_ = std::move(c00);
        e.c10_ = std::move(c10);
        e.c01_ = std::move(c01);
        e.c11_ = std::move(c11);
        return e;
    }

    const ExtCtxPtr& ctx() const { return ctx_; }
    const RatFunc& c00() const { return c00_; }
    const RatFunc& c10() const { return c10_; }
    const RatFunc& c01() const { return c01_; }
    const RatFunc& c11() const { return c11_; }

    bool is_zero() const {
        return c00_.is_zero() && c10_.is_zero() && c01_.is_zero() && c11_.is_zero();
    }
    bool is_scalar() const { return c10_.is_zero() && c01_.is_zero() && c11_.is_zero(); }

    ExtElem operator-() const { return make(ctx_, -c00_, -c10_, -c01_, -c11_); }

    friend ExtElem operator+(const ExtElem& a, const ExtElem& b) {
        a.require_same_ctx(b);
        return make(a.ctx_, a.c00_ + b.c00_, a.c10_ + b.c10_, a.c01_ + b.c01_, a.c11_ + b.c11_);
    }
    friend ExtElem operator-(const ExtElem& a, const ExtElem& b) { return a + (-b); }

    friend ExtElem operator*(const ExtElem& a, const ExtElem& b) {
        a.require_same_ctx(b);
        if (a.is_zero() || b.is_zero())
            return zero(a.ctx_);
        // Fast scalar paths keep polynomial-only workloads cheap.
        if (a.is_scalar())
            return make(b.ctx_, a.c00_ * b.c00_, a.c00_ * b.c10_, a.c00_ * b.c01_,
                        a.c00_ * b.c11_);
        if (b.is_scalar())
            return make(a.ctx_, a.c00_ * b.c00_, a.c10_ * b.c00_, a.c01_ * b.c00_,
                        a.c11_ * b.c00_);
        const RatFunc d1{a.ctx_->d1};
        const RatFunc d2{a.ctx_->d2};
        RatFunc r00, r10, r01, r11;
        auto acc = [](RatFunc& dst, const RatFunc& u, const RatFunc& v) {
            if (!u.is_zero() && !v.is_zero())
                dst += u * v;
        };
        // 16-term product reduced by w1^2 -> d1, w2^2 -> d2, (w1 w2)^2 -> d1 d2.
        acc(r00, a.c00_, b.c00_);
        acc(r00, a.c10_ * d1, b.c10_);
        acc(r00, a.c01_ * d2, b.c01_);
        acc(r00, a.c11_ * d1, b.c11_ * d2);
        acc(r10, a.c00_, b.c10_);
        acc(r10, a.c10_, b.c00_);
        acc(r10, a.c01_ * d2, b.c11_);
        acc(r10, a.c11_ * d2, b.c01_);
        acc(r01, a.c00_, b.c01_);
        acc(r01, a.c01_, b.c00_);
        acc(r01, a.c10_ * d1, b.c11_);
        acc(r01, a.c11_ * d1, b.c10_);
        acc(r11, a.c00_, b.c11_);
        acc(r11, a.c11_, b.c00_);
        acc(r11, a.c10_, b.c01_);
        acc(r11, a.c01_, b.c10_);
        return make(a.ctx_, std::move(r00), std::move(r10), std::move(r01), std::move(r11));
    }

    friend ExtElem operator*(const ExtElem& a, const RatFunc& s) {
        return make(a.ctx_, a.c00_ * s, a.c10_ * s, a.c01_ * s, a.c11_ * s);
    }

    ExtElem& operator+=(const ExtElem& o) { return *this = *this + o; }
    ExtElem& operator-=(const ExtElem& o) { return *this = *this - o; }
    ExtElem& operator*=(const ExtElem& o) { return *this = *this * o; }

    friend bool operator==(const ExtElem& a, const ExtElem& b) {
        a.require_same_ctx(b);
        return a.c00_ == b.c00_ && a.c10_ == b.c10_ && a.c01_ == b.c01_ && a.c11_ == b.c11_;
    }
    friend bool operator!=(const ExtElem& a, const ExtElem& b) { return !(a == b); }

    /// Two-step tower inversion: conjugate over w2 down into Q(x)(w1), then
    /// invert there via the norm into Q(x).
    ExtElem inverse() const {
        if (is_zero())
            throw std::domain_error("ExtElem: inverse of zero");
        // *this = A + B*w2 with A = c00 + c10 w1, B = c01 + c11 w1.
        const RatFunc d1{ctx_->d1};
        const RatFunc d2{ctx_->d2};
        // conj = A - B*w2; n = (A + B w2)(A - B w2) = A^2 - B^2 d2 in Q(x)(w1).
        // n = p + q w1:
        const RatFunc p = c00_ * c00_ + c10_ * c10_ * d1 - (c01_ * c01_ + c11_ * c11_ * d1) * d2;
        const RatFunc q = RatFunc(2) * (c00_ * c10_ - c01_ * c11_ * d2);
        // 1/n = (p - q w1) / (p^2 - q^2 d1).
        const RatFunc norm = p * p - q * q * d1;
        if (norm.is_zero())
            throw std::domain_error("ExtElem: inverse of zero divisor");
        const RatFunc ip = p / norm;
        const RatFunc iq = -q / norm;
        // inverse = (A - B w2) * (ip + iq w1)
        const ExtElem conj = make(ctx_, c00_, c10_, -c01_, -c11_);
        const ExtElem ninv = make(ctx_, ip, iq, RatFunc(), RatFunc());
        return conj * ninv;
    }

    /// Repeated-squaring power; pow(a, 0) = 1; e < 0 requires a != 0.
    ExtElem pow(long e) const {
        if (e < 0)
            return inverse().pow(-e);
        ExtElem r = one(ctx_);
        ExtElem base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1)
                r *= base;
            if (e > 1)
                base *= base;
        }
        return r;
    }

    /// The radical-free component as a rational function; the three radical
    /// components must vanish.
    RatFunc project_ratfunc() const {
        if (!is_scalar())
            throw NotPolynomialError("ExtElem: radical components are nonzero",
                                     describe_radicals());
        return c00_;
    }

    /// As project_ratfunc, additionally requiring a constant denominator.
    Poly project_poly() const {
        const RatFunc r = project_ratfunc();
        if (!r.is_poly())
            throw NotPolynomialError("ExtElem: not a polynomial (nonconstant denominator)",
                                     r.to_string());
        return r.num();
    }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero())
            return "0";
        std::string out;
        auto append = [&out, &var](const RatFunc& c, const char* basis) {
            if (c.is_zero())
                return;
            if (!out.empty())
                out += " + ";
            if (basis[0] == '\0') {
                out += c.to_string(var);
                return;
            }
            if (c.is_one())
                out += basis;
            else
                out += "(" + c.to_string(var) + ")*" + basis;
        };
        append(c00_, "");
        append(c10_, "w1");
        append(c01_, "w2");
        append(c11_, "w1*w2");
        return out;
    }

  private:
    explicit ExtElem(ExtCtxPtr ctx) : ctx_(std::move(ctx)) {
        if (!ctx_)
            throw std::domain_error("ExtElem: null context");
    }

    void require_same_ctx(const ExtElem& o) const {
        if (ctx_ != o.ctx_ && *ctx_ != *o.ctx_)
            throw std::domain_error("ExtElem: context mismatch");
    }

    std::string describe_radicals() const {
        return "w1: " + c10_.to_string() + ", w2: " + c01_.to_string() +
               ", w1*w2: " + c11_.to_string();
    }

    ExtCtxPtr ctx_;
    RatFunc c00_, c10_, c01_, c11_;
};

/// Horner evaluation of a Q[x] polynomial at an extension element.
inline ExtElem ext_eval_poly(const Poly& p, const ExtElem& at) {
    ExtElem acc = ExtElem::zero(at.ctx());
    if (p.is_zero())
        return acc;
    for (int i = *p.degree(); i >= 0; --i) {
        acc = acc * at;
        const Rational c = p.coeff(i);
        if (!c.is_zero())
            acc += ExtElem::from_scalar(at.ctx(), RatFunc(c));
    }
    return acc;
}

}  // namespace chebfib
