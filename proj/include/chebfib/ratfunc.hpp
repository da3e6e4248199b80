#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "chebfib/poly.hpp"

namespace chebfib {

/// Rational function num/den over Q[x], kept in canonical form:
/// den nonzero and monic, gcd(num, den) constant. Equality is
/// component-wise, which makes zero-residual checks structural.
class RatFunc {
  public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(const Rational& c) : num_(c), den_(1) {}
    RatFunc(long c) : num_(Rational(c)), den_(1) {}
    RatFunc(Poly num) : num_(std::move(num)), den_(1) {}
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_poly() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    Rational constant_value() const {
        if (!is_constant())
            throw std::domain_error("RatFunc: not a constant");
        return num_.constant_term();
    }

    RatFunc operator-() const { return raw(-num_, den_); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero())
            return b;
        if (b.is_zero())
            return a;
        if (a.den_ == b.den_) {
            Poly n = a.num_ + b.num_;
            if (n.is_zero())
                return RatFunc();
            Poly g = poly_gcd(n, a.den_);
            if (g.is_one())
                return raw(std::move(n), a.den_);
            return make_monic(Poly::divrem(n, g).first, Poly::divrem(a.den_, g).first);
        }
        const Poly g = poly_gcd(a.den_, b.den_);
        if (g.is_one())
            return raw(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
        const Poly bg = Poly::divrem(b.den_, g).first;
        Poly t = a.num_ * bg + b.num_ * Poly::divrem(a.den_, g).first;
        if (t.is_zero())
            return RatFunc();
        const Poly h = poly_gcd(t, g);
        if (h.is_one())
            return raw(std::move(t), a.den_ * bg);
        return make_monic(Poly::divrem(t, h).first, Poly::divrem(a.den_, h).first * bg);
    }

    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero())
            return RatFunc();
        // Cross-reduce so the product of reduced fractions needs no final gcd.
        const Poly g1 = poly_gcd(a.num_, b.den_);
        const Poly g2 = poly_gcd(b.num_, a.den_);
        const Poly n1 = g1.is_one() ? a.num_ : Poly::divrem(a.num_, g1).first;
        const Poly n2 = g2.is_one() ? b.num_ : Poly::divrem(b.num_, g2).first;
        const Poly d1 = g2.is_one() ? a.den_ : Poly::divrem(a.den_, g2).first;
        const Poly d2 = g1.is_one() ? b.den_ : Poly::divrem(b.den_, g1).first;
        return make_monic(n1 * n2, d1 * d2);
    }

    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inverse() const {
        if (is_zero())
            throw std::domain_error("RatFunc: division by zero rational function");
        return make_monic(den_, num_);
    }

    RatFunc pow(long e) const {
        if (e < 0)
            return inverse().pow(-e);
        RatFunc r(Rational(1));
        RatFunc base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1)
                r *= base;
            if (e > 1)
                base *= base;
        }
        return r;
    }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string to_string(const std::string& var = "x") const {
        if (den_.is_one())
            return num_.to_string(var);
        return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
    }

  private:
    // Assumes n/d already coprime with d monic and nonzero.
    static RatFunc raw(Poly n, Poly d) {
        RatFunc r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }
    // Assumes n/d coprime; only rescales to make d monic.
    static RatFunc make_monic(Poly n, Poly d) {
        const Rational lc = d.leading_coeff();
        if (!lc.is_one()) {
            const Rational inv = lc.inverse();
            n = n * inv;
            d = d * inv;
        }
        return raw(std::move(n), std::move(d));
    }

    void normalize() {
        if (den_.is_zero())
            throw std::domain_error("RatFunc: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        const Poly g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = Poly::divrem(num_, g).first;
            den_ = Poly::divrem(den_, g).first;
        }
        const Rational lc = den_.leading_coeff();
        if (!lc.is_one()) {
            const Rational inv = lc.inverse();
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    Poly num_;
    Poly den_;
};

}  // namespace chebfib
