#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chebfib/rational.hpp"

namespace chebfib {

/// Dense univariate polynomial over Rational. coeff(i) is the coefficient
/// of x^i; the highest stored coefficient is nonzero and the zero
/// polynomial stores nothing (degree() is nullopt, which orders below
/// every integer).
class Poly {
  public:
    Poly() = default;
    Poly(const Rational& c) {
        if (!c.is_zero())
            c_.push_back(c);
    }
    Poly(long c) : Poly(Rational(c)) {}
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static Poly x() { return monomial(1, Rational(1)); }
    static Poly monomial(int deg, const Rational& c) {
        Poly p;
        if (!c.is_zero()) {
            p.c_.assign(static_cast<size_t>(deg) + 1, Rational(0));
            p.c_.back() = c;
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }

    std::optional<int> degree() const {
        if (c_.empty())
            return std::nullopt;
        return static_cast<int>(c_.size()) - 1;
    }

    Rational coeff(int i) const {
        if (i < 0 || static_cast<size_t>(i) >= c_.size())
            return Rational(0);
        return c_[static_cast<size_t>(i)];
    }

    Rational leading_coeff() const { return c_.empty() ? Rational(0) : c_.back(); }
    Rational constant_term() const { return coeff(0); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.c_)
            c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            r.c_[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i)
            r.c_[i] += b.c_[i];
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    // Plain O(d^2) convolution; desk-scale degrees never justify more.
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero())
            return Poly();
        Poly r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero())
                continue;
            for (size_t j = 0; j < b.c_.size(); ++j)
                if (!b.c_[j].is_zero())
                    r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    friend Poly operator*(const Poly& a, const Rational& s) {
        if (s.is_zero())
            return Poly();
        Poly r = a;
        for (auto& c : r.c_)
            c *= s;
        return r;
    }
    friend Poly operator*(const Rational& s, const Poly& a) { return a * s; }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly pow(long e) const {
        if (e < 0)
            throw std::domain_error("Poly: negative power");
        Poly r(1);
        Poly base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1)
                r *= base;
            if (e > 1)
                base *= base;
        }
        return r;
    }

    /// Euclidean division: a = q*b + r with deg r < deg b.
    static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
        if (b.is_zero())
            throw std::domain_error("Poly: division by zero polynomial");
        Poly q, r = a;
        const int db = *b.degree();
        const Rational lb = b.leading_coeff();
        while (!r.is_zero() && *r.degree() >= db) {
            const int dr = *r.degree();
            const Rational c = r.leading_coeff() / lb;
            q += monomial(dr - db, c);
            r -= monomial(dr - db, c) * b;
        }
        return {q, r};
    }

    Rational eval(const Rational& v) const {
        Rational acc(0);
        for (size_t i = c_.size(); i-- > 0;)
            acc = acc * v + c_[i];
        return acc;
    }

    /// p(s*x): coefficient i is scaled by s^i.
    Poly scale_arg(const Rational& s) const {
        Poly r = *this;
        Rational f(1);
        for (size_t i = 1; i < r.c_.size(); ++i) {
            f *= s;
            r.c_[i] *= f;
        }
        r.trim();
        return r;
    }

    Poly monic() const {
        if (is_zero())
            return *this;
        return *this * leading_coeff().inverse();
    }

    /// Integer-primitive decomposition: *this == content * primitive,
    /// primitive has coprime integer coefficients with positive lead.
    std::pair<Rational, std::vector<mpz_class>> integer_primitive() const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero())
            c_.pop_back();
    }
    std::vector<Rational> c_;
};

inline std::pair<Rational, std::vector<mpz_class>> Poly::integer_primitive() const {
    if (is_zero())
        return {Rational(0), {}};
    mpz_class den_lcm(1);
    const int d = *degree();
    for (int i = 0; i <= d; ++i) {
        mpz_class den = coeff(i).denominator();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), den.get_mpz_t());
    }
    std::vector<mpz_class> ints(static_cast<size_t>(d) + 1);
    mpz_class g(0);
    for (int i = 0; i <= d; ++i) {
        const Rational scaled = coeff(i) * Rational(den_lcm);
        ints[static_cast<size_t>(i)] = scaled.numerator();  // integral by construction
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[static_cast<size_t>(i)].get_mpz_t());
    }
    if (ints.back() < 0)
        g = -g;
    for (auto& c : ints)
        c /= g;
    return {Rational(g, den_lcm), ints};
}

namespace detail {

// One pseudo-division step on integer coefficient vectors, followed by
// content stripping (primitive PRS). Vectors are trimmed, highest index last.
inline void trim_int(std::vector<mpz_class>& v) {
    while (!v.empty() && v.back() == 0)
        v.pop_back();
}

inline std::vector<mpz_class> primitive_part(std::vector<mpz_class> v) {
    trim_int(v);
    if (v.empty())
        return v;
    mpz_class g(0);
    for (const auto& c : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (v.back() < 0)
        g = -g;
    for (auto& c : v)
        c /= g;
    return v;
}

inline std::vector<mpz_class> pseudo_rem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    const size_t db = b.size() - 1;
    const mpz_class& lb = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        const mpz_class la = a.back();
        const size_t shift = a.size() - b.size();
        for (auto& c : a)
            c *= lb;
        for (size_t i = 0; i + 1 < b.size(); ++i)
            a[i + shift] -= la * b[i];
        a[db + shift] = 0;
        trim_int(a);
    }
    return a;
}

}  // namespace detail

/// Monic GCD over Q via the primitive Euclidean algorithm on integer
/// coefficients. Both inputs zero is a domain error; gcd(p, 0) = monic p.
inline Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero())
        throw std::domain_error("poly_gcd: gcd(0, 0) is undefined");
    if (a.is_zero())
        return b.monic();
    if (b.is_zero())
        return a.monic();
    auto u = detail::primitive_part(a.integer_primitive().second);
    auto v = detail::primitive_part(b.integer_primitive().second);
    if (u.size() < v.size())
        std::swap(u, v);
    while (!v.empty()) {
        auto r = detail::primitive_part(detail::pseudo_rem(u, v));
        u = std::move(v);
        v = std::move(r);
    }
    std::vector<Rational> coeffs(u.size());
    for (size_t i = 0; i < u.size(); ++i)
        coeffs[i] = Rational(u[i]);
    return Poly(std::move(coeffs)).monic();
}

inline std::string Poly::to_string(const std::string& var) const {
    if (is_zero())
        return "0";
    std::string out;
    for (int i = *degree(); i >= 0; --i) {
        const Rational c = coeff(i);
        if (c.is_zero())
            continue;
        const bool first = out.empty();
        const Rational a = c.abs();
        if (first)
            out += c.is_negative() ? "-" : "";
        else
            out += c.is_negative() ? " - " : " + ";
        std::string body;
        if (i == 0)
            body = a.to_string();
        else {
            if (!a.is_one())
                body = a.to_string() + "*";
            body += var;
            if (i > 1)
                body += "^" + std::to_string(i);
        }
        out += body;
    }
    return out;
}

}  // namespace chebfib
