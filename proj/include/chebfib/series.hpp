#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chebfib/sequences.hpp"

namespace chebfib {

/// Truncated formal power series in z with exact coefficients.
/// Stores exactly order+1 coefficients; arithmetic requires equal orders.
/// EGF-backed series store plain z^j coefficients (the 1/j! folded in), so
/// one Cauchy product serves both normalizations.
template <class Coef>
class Series {
  public:
    Series(long order, std::vector<Coef> coeffs) : order_(order), c_(std::move(coeffs)) {
        if (order_ < 0 || c_.size() != static_cast<size_t>(order_) + 1)
            throw std::domain_error("Series: need exactly order+1 coefficients");
    }

    long order() const { return order_; }
    const Coef& coeff(long j) const {
        if (j < 0 || j > order_)
            throw std::domain_error("Series: coefficient index out of range");
        return c_[static_cast<size_t>(j)];
    }
    const std::vector<Coef>& coeffs() const { return c_; }

    friend Series operator+(const Series& a, const Series& b) {
        a.require_same_order(b);
        std::vector<Coef> c;
        c.reserve(a.c_.size());
        for (size_t i = 0; i < a.c_.size(); ++i)
            c.push_back(a.c_[i] + b.c_[i]);
        return Series(a.order_, std::move(c));
    }

    friend Series operator-(const Series& a, const Series& b) {
        a.require_same_order(b);
        std::vector<Coef> c;
        c.reserve(a.c_.size());
        for (size_t i = 0; i < a.c_.size(); ++i)
            c.push_back(a.c_[i] - b.c_[i]);
        return Series(a.order_, std::move(c));
    }

    /// Cauchy product truncated to the shared order.
    friend Series operator*(const Series& a, const Series& b) {
        a.require_same_order(b);
        std::vector<Coef> c;
        c.reserve(a.c_.size());
        for (long j = 0; j <= a.order_; ++j) {
            Coef acc = a.c_[0] * b.c_[static_cast<size_t>(j)];
            for (long i = 1; i <= j; ++i)
                acc = acc + a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j - i)];
            c.push_back(std::move(acc));
        }
        return Series(a.order_, std::move(c));
    }

    friend bool operator==(const Series& a, const Series& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }

  private:
    void require_same_order(const Series& o) const {
        if (order_ != o.order_)
            throw std::domain_error("Series: order mismatch");
    }

    long order_;
    std::vector<Coef> c_;
};

/// z-polynomial (RatFunc coefficients in x) as a padded series.
inline Series<RatFunc> series_from_zpoly(std::vector<RatFunc> zcoeffs, long order) {
    zcoeffs.resize(static_cast<size_t>(order) + 1, RatFunc());
    return Series<RatFunc>(order, std::move(zcoeffs));
}

/// Power-series division num/den where den has a nonzero constant term;
/// coefficients satisfy the linear recurrence induced by den.
inline Series<RatFunc> series_from_rational_gf(const std::vector<RatFunc>& num,
                                               const std::vector<RatFunc>& den, long order) {
    if (den.empty() || den[0].is_zero())
        throw std::domain_error("series_from_rational_gf: denominator constant term is zero");
    const RatFunc inv0 = den[0].inverse();
    std::vector<RatFunc> c;
    c.reserve(static_cast<size_t>(order) + 1);
    for (long j = 0; j <= order; ++j) {
        RatFunc acc = static_cast<size_t>(j) < num.size() ? num[static_cast<size_t>(j)]
                                                          : RatFunc();
        for (long i = 1; i <= j && static_cast<size_t>(i) < den.size(); ++i)
            acc -= den[static_cast<size_t>(i)] * c[static_cast<size_t>(j - i)];
        c.push_back(acc * inv0);
    }
    return Series<RatFunc>(order, std::move(c));
}

// ----------------------------------------------------------------------
// Generating-function families
// ----------------------------------------------------------------------

/// All eighteen families: nine ordinary, nine exponential.
enum class GfFamily {
    t, t1, t2, u, u1, u2, f, f1, f2,              // ordinary
    tau, tau1, tau2, omega, omega1, omega2, phi, phi1, phi2  // exponential
};

inline bool is_egf(GfFamily f) { return f >= GfFamily::tau; }

inline const char* to_string(GfFamily f) {
    switch (f) {
        case GfFamily::t: return "t";
        case GfFamily::t1: return "t1";
        case GfFamily::t2: return "t2";
        case GfFamily::u: return "u";
        case GfFamily::u1: return "u1";
        case GfFamily::u2: return "u2";
        case GfFamily::f: return "f";
        case GfFamily::f1: return "f1";
        case GfFamily::f2: return "f2";
        case GfFamily::tau: return "tau";
        case GfFamily::tau1: return "tau1";
        case GfFamily::tau2: return "tau2";
        case GfFamily::omega: return "omega";
        case GfFamily::omega1: return "omega1";
        case GfFamily::omega2: return "omega2";
        case GfFamily::phi: return "phi";
        case GfFamily::phi1: return "phi1";
        case GfFamily::phi2: return "phi2";
    }
    return "?";
}

inline GfFamily gf_family_from_name(const std::string& name) {
    for (int i = 0; i <= static_cast<int>(GfFamily::phi2); ++i)
        if (name == to_string(static_cast<GfFamily>(i)))
            return static_cast<GfFamily>(i);
    throw std::domain_error("unknown generating-function family: " + name);
}

/// A family plus an argument scale s(x): the series is built in s(x)*z,
/// applied coefficient-wise as s^j.
struct GfSpec {
    GfFamily family;
    RatFunc scale{Rational(1)};
};

/// The closed rational form of an ordinary family, as z-polynomials.
struct RationalGf {
    std::vector<RatFunc> num;
    std::vector<RatFunc> den;
};

inline RationalGf ogf_closed_form(GfFamily family) {
    const RatFunc one(1);
    const RatFunc x{Poly::x()};
    const RatFunc x2 = x * x;
    const RatFunc den_cheb1 = -(RatFunc(2) * x);           // 1 - 2x z + z^2
    const RatFunc den_cheb2 = -(RatFunc(4) * x2 - RatFunc(2));  // 1 - (4x^2-2) z + z^2
    const RatFunc den_fib2 = -(x2 + RatFunc(2));           // 1 - (x^2+2) z + z^2
    switch (family) {
        case GfFamily::t: return {{one, -x}, {one, den_cheb1, one}};
        case GfFamily::t1: return {{x, -x}, {one, den_cheb2, one}};
        case GfFamily::t2: return {{one, -(RatFunc(2) * x2 - one)}, {one, den_cheb2, one}};
        case GfFamily::u: return {{one}, {one, den_cheb1, one}};
        case GfFamily::u1: return {{RatFunc(2) * x}, {one, den_cheb2, one}};
        case GfFamily::u2: return {{one, one}, {one, den_cheb2, one}};
        case GfFamily::f: return {{RatFunc(), one}, {one, -x, -one}};
        case GfFamily::f1: return {{one, -one}, {one, den_fib2, one}};
        case GfFamily::f2: return {{RatFunc(), x}, {one, den_fib2, one}};
        default:
            throw std::domain_error("ogf_closed_form: not an ordinary family");
    }
}

// ----------------------------------------------------------------------
// Exponential atoms: every EGF here is a finite sum of c * e^{g z} with
// c, g in the biquadratic extension, so the z^j coefficient is the closed
// form c*g^j/j! and no term-by-term composition is ever needed.
// ----------------------------------------------------------------------

struct ExpAtom {
    ExtElem coeff;
    ExtElem rate;
};

using AtomSum = std::vector<ExpAtom>;

inline AtomSum atom_product(const AtomSum& a, const AtomSum& b) {
    AtomSum r;
    r.reserve(a.size() * b.size());
    for (const auto& p : a)
        for (const auto& q : b)
            r.push_back({p.coeff * q.coeff, p.rate + q.rate});
    return r;
}

inline AtomSum atom_concat(AtomSum a, const AtomSum& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline AtomSum atom_scale_coeff(AtomSum a, const ExtElem& c) {
    for (auto& atom : a)
        atom.coeff = atom.coeff * c;
    return a;
}

/// Rescales the series argument: e^{g z} -> e^{g s z}.
inline AtomSum atom_scale_argument(AtomSum a, const RatFunc& s) {
    for (auto& atom : a)
        atom.rate = atom.rate * s;
    return a;
}

/// sinh(g z) = e^{gz}/2 - e^{-gz}/2.
inline AtomSum sinh_atoms(const ExtElem& g) {
    const ExtElem half = ExtElem::from_scalar(g.ctx(), RatFunc(Rational(1, 2)));
    return {{half, g}, {-half, -g}};
}

/// cosh(g z) = e^{gz}/2 + e^{-gz}/2.
inline AtomSum cosh_atoms(const ExtElem& g) {
    const ExtElem half = ExtElem::from_scalar(g.ctx(), RatFunc(Rational(1, 2)));
    return {{half, g}, {half, -g}};
}

inline AtomSum exp_atom(const ExtElem& coeff, const ExtElem& rate) { return {{coeff, rate}}; }

/// Atom decomposition of an exponential family in the standard context.
inline AtomSum egf_atoms(GfFamily family) {
    const ExtCtxPtr& ctx = standard_ctx();
    const ExtElem x = ExtElem::from_scalar(ctx, RatFunc(Poly::x()));
    const ExtElem w1 = ExtElem::w1(ctx);
    const ExtElem w2 = ExtElem::w2(ctx);
    const RatFunc half(Rational(1, 2));
    const ExtElem alpha = x + w1;
    const ExtElem beta = x - w1;
    const ExtElem rho = (x + w2) * half;
    const ExtElem sigma = (x - w2) * half;
    const ExtElem a2 = alpha * alpha;
    const ExtElem b2 = beta * beta;
    const ExtElem r2s = rho * rho;
    const ExtElem s2s = sigma * sigma;
    const ExtElem inv_2w1 = (w1 + w1).inverse();
    const ExtElem inv_w2 = w2.inverse();
    switch (family) {
        case GfFamily::tau: return {{ExtElem::from_scalar(ctx, half), alpha},
                                    {ExtElem::from_scalar(ctx, half), beta}};
        case GfFamily::tau1: return {{alpha * half, a2}, {beta * half, b2}};
        case GfFamily::tau2: return {{ExtElem::from_scalar(ctx, half), a2},
                                     {ExtElem::from_scalar(ctx, half), b2}};
        case GfFamily::omega: return {{alpha * inv_2w1, alpha}, {-(beta * inv_2w1), beta}};
        case GfFamily::omega1: return {{a2 * inv_2w1, a2}, {-(b2 * inv_2w1), b2}};
        case GfFamily::omega2: return {{alpha * inv_2w1, a2}, {-(beta * inv_2w1), b2}};
        case GfFamily::phi: return {{inv_w2, rho}, {-inv_w2, sigma}};
        case GfFamily::phi1: return {{rho * inv_w2, r2s}, {-(sigma * inv_w2), s2s}};
        case GfFamily::phi2: return {{inv_w2, r2s}, {-inv_w2, s2s}};
        default:
            throw std::domain_error("egf_atoms: not an exponential family");
    }
}

/// Expands an atom sum into a truncated series with extension coefficients:
/// coefficient j is sum_i c_i g_i^j / j!.
inline Series<ExtElem> atoms_to_series(const AtomSum& atoms, long order,
                                       const RatFunc& arg_scale = RatFunc(1)) {
    if (atoms.empty())
        throw std::domain_error("atoms_to_series: empty atom sum");
    const ExtCtxPtr& ctx = atoms[0].coeff.ctx();
    std::vector<ExtElem> c(static_cast<size_t>(order) + 1, ExtElem::zero(ctx));
    for (const auto& atom : atoms) {
        ExtElem rate = atom.rate;
        if (!arg_scale.is_one())
            rate = rate * arg_scale;
        ExtElem power = ExtElem::one(ctx);
        Rational inv_fact(1);
        for (long j = 0; j <= order; ++j) {
            if (j > 0) {
                power = power * rate;
                inv_fact /= Rational(j);
            }
            c[static_cast<size_t>(j)] += atom.coeff * power * RatFunc(inv_fact);
        }
    }
    return Series<ExtElem>(order, std::move(c));
}

/// Builds any family as a RatFunc-coefficient series. Exponential families
/// are assembled in the extension; the radicals cancel pairwise, so the
/// projection never fails on a correct atom table.
inline Series<RatFunc> build_gf(const GfSpec& spec, long order) {
    if (!is_egf(spec.family)) {
        const RationalGf gf = ogf_closed_form(spec.family);
        Series<RatFunc> s = series_from_rational_gf(gf.num, gf.den, order);
        if (spec.scale.is_one())
            return s;
        std::vector<RatFunc> c = s.coeffs();
        RatFunc sp(Rational(1));
        for (long j = 1; j <= order; ++j) {
            sp *= spec.scale;
            c[static_cast<size_t>(j)] *= sp;
        }
        return Series<RatFunc>(order, std::move(c));
    }
    const Series<ExtElem> ext = atoms_to_series(egf_atoms(spec.family), order, spec.scale);
    std::vector<RatFunc> c;
    c.reserve(static_cast<size_t>(order) + 1);
    for (long j = 0; j <= order; ++j) {
        try {
            c.push_back(ext.coeff(j).project_ratfunc());
        } catch (const NotPolynomialError& e) {
            throw std::logic_error(std::string("build_gf: radical survived projection "
                                               "(internal consistency violated): ") +
                                   e.what());
        }
    }
    return Series<RatFunc>(order, std::move(c));
}

// ----------------------------------------------------------------------
// Functional-equation checking
// ----------------------------------------------------------------------

struct FeCheckResult {
    bool pass = true;
    long first_failing_index = -1;
    std::string residual;  // canonical form of the first nonzero difference
};

/// Per-coefficient difference of two equal-order series; failure is data,
/// not an error.
template <class Coef>
FeCheckResult fe_check(const Series<Coef>& lhs, const Series<Coef>& rhs) {
    if (lhs.order() != rhs.order())
        throw std::domain_error("fe_check: order mismatch");
    for (long j = 0; j <= lhs.order(); ++j) {
        const Coef diff = lhs.coeff(j) - rhs.coeff(j);
        if (!diff.is_zero())
            return {false, j, "z^" + std::to_string(j) + ": " + diff.to_string()};
    }
    return {};
}

}  // namespace chebfib
