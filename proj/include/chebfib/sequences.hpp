#pragma once

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "chebfib/quadext.hpp"

namespace chebfib {

/// The polynomial families. Recurrence data per tag:
///   T: seeds 1, x;   next = 2x*cur - prev
///   U: seeds 1, 2x;  next = 2x*cur - prev
///   F: seeds 0, 1;   next = x*cur + prev
///   B: seeds 0, 1;   next = 6x*cur - prev
///   C: seeds 1, 3x;  next = 6x*cur - prev
enum class SeqKind { ChebyshevT, ChebyshevU, FibonacciPoly, BalancingB, LucasBalancingC };

enum class NumSeqKind { FibonacciNum, LucasNum, BalancingNum };

inline const char* to_string(SeqKind k) {
    switch (k) {
        case SeqKind::ChebyshevT: return "T";
        case SeqKind::ChebyshevU: return "U";
        case SeqKind::FibonacciPoly: return "F";
        case SeqKind::BalancingB: return "B";
        case SeqKind::LucasBalancingC: return "C";
    }
    return "?";
}

inline const char* to_string(NumSeqKind k) {
    switch (k) {
        case NumSeqKind::FibonacciNum: return "Fib";
        case NumSeqKind::LucasNum: return "Luc";
        case NumSeqKind::BalancingNum: return "Bal";
    }
    return "?";
}

namespace detail {

struct SeqRecurrence {
    Poly seed0;
    Poly seed1;
    Poly multiplier;
    Rational sign;
};

inline SeqRecurrence recurrence_for(SeqKind kind) {
    const Poly x = Poly::x();
    switch (kind) {
        case SeqKind::ChebyshevT: return {Poly(1), x, Rational(2) * x, Rational(-1)};
        case SeqKind::ChebyshevU: return {Poly(1), Rational(2) * x, Rational(2) * x, Rational(-1)};
        case SeqKind::FibonacciPoly: return {Poly(), Poly(1), x, Rational(1)};
        case SeqKind::BalancingB: return {Poly(), Poly(1), Rational(6) * x, Rational(-1)};
        case SeqKind::LucasBalancingC:
            return {Poly(1), Rational(3) * x, Rational(6) * x, Rational(-1)};
    }
    throw std::logic_error("recurrence_for: bad kind");
}

// Memoized recurrence tables. The memo is the only mutable state in the
// module; a mutex keeps concurrent callers consistent with single-threaded
// execution.
class SeqTable {
  public:
    static SeqTable& instance() {
        static SeqTable t;
        return t;
    }

    Poly poly(SeqKind kind, long n) {
        std::lock_guard<std::mutex> lock(mu_);
        auto& table = poly_memo_[index(kind)];
        if (table.empty()) {
            const auto rec = recurrence_for(kind);
            table.push_back(rec.seed0);
            table.push_back(rec.seed1);
        }
        const auto rec = recurrence_for(kind);
        while (static_cast<long>(table.size()) <= n)
            table.push_back(rec.multiplier * table[table.size() - 1] +
                            rec.sign * table[table.size() - 2]);
        return table[static_cast<size_t>(n)];
    }

    Rational number(NumSeqKind kind, long n) {
        std::lock_guard<std::mutex> lock(mu_);
        auto& table = num_memo_[static_cast<size_t>(kind)];
        if (table.empty()) {
            switch (kind) {
                case NumSeqKind::FibonacciNum: table = {Rational(0), Rational(1)}; break;
                case NumSeqKind::LucasNum: table = {Rational(2), Rational(1)}; break;
                case NumSeqKind::BalancingNum: table = {Rational(0), Rational(1)}; break;
            }
        }
        while (static_cast<long>(table.size()) <= n) {
            const Rational& a = table[table.size() - 2];
            const Rational& b = table[table.size() - 1];
            table.push_back(kind == NumSeqKind::BalancingNum ? Rational(6) * b - a : b + a);
        }
        return table[static_cast<size_t>(n)];
    }

  private:
    static size_t index(SeqKind k) { return static_cast<size_t>(k); }
    std::mutex mu_;
    std::vector<Poly> poly_memo_[5];
    std::vector<Rational> num_memo_[3];
};

}  // namespace detail

/// The standard context housing every radical the catalog uses.
inline const ExtCtxPtr& standard_ctx() {
    static const ExtCtxPtr ctx = make_ctx(
        Poly{Rational(-1), Rational(0), Rational(1)},  // x^2 - 1
        Poly{Rational(4), Rational(0), Rational(1)});  // x^2 + 4
    return ctx;
}

inline void require_index(long n) {
    if (n < 0)
        throw std::domain_error("sequence index must be nonnegative");
}

/// n-th sequence polynomial by iterating the recurrence (memoized per kind).
inline Poly seq_poly(SeqKind kind, long n) {
    require_index(n);
    return detail::SeqTable::instance().poly(kind, n);
}

/// n-th sequence polynomial through the closed Binet form, computed in the
/// biquadratic extension and projected back; B/C compose the U/T forms with
/// argument 3x. Independent of seq_poly by construction (never memoized).
inline Poly seq_binet(SeqKind kind, long n) {
    require_index(n);
    const ExtCtxPtr& ctx = standard_ctx();
    const ExtElem x = ExtElem::from_scalar(ctx, RatFunc(Poly::x()));
    const ExtElem w1 = ExtElem::w1(ctx);
    const ExtElem w2 = ExtElem::w2(ctx);
    const ExtElem alpha = x + w1;
    const ExtElem beta = x - w1;
    const RatFunc half(Rational(1, 2));
    try {
        switch (kind) {
            case SeqKind::ChebyshevT:
                return ((alpha.pow(n) + beta.pow(n)) * half).project_poly();
            case SeqKind::ChebyshevU:
                return ((alpha.pow(n + 1) - beta.pow(n + 1)) * (w1.inverse() * half))
                    .project_poly();
            case SeqKind::FibonacciPoly: {
                const ExtElem rho = (x + w2) * half;
                const ExtElem sigma = (x - w2) * half;
                return ((rho.pow(n) - sigma.pow(n)) * w2.inverse()).project_poly();
            }
            case SeqKind::BalancingB:
                if (n == 0)
                    return Poly();
                return seq_binet(SeqKind::ChebyshevU, n - 1).scale_arg(Rational(3));
            case SeqKind::LucasBalancingC:
                return seq_binet(SeqKind::ChebyshevT, n).scale_arg(Rational(3));
        }
    } catch (const NotPolynomialError& e) {
        throw std::logic_error(std::string("seq_binet: projection failed (internal "
                                           "consistency violated): ") +
                               e.what());
    }
    throw std::logic_error("seq_binet: bad kind");
}

/// n-th sequence polynomial by the explicit binomial sum (T, U, F only).
inline Poly seq_explicit(SeqKind kind, long n) {
    require_index(n);
    const Poly x = Poly::x();
    const Poly x2m1 = x * x - Poly(1);
    Poly acc;
    switch (kind) {
        case SeqKind::ChebyshevT:
            for (long k = 0; 2 * k <= n; ++k)
                acc += binomial(n, 2 * k) * (x2m1.pow(k) * x.pow(n - 2 * k));
            return acc;
        case SeqKind::ChebyshevU:
            for (long k = 0; 2 * k <= n; ++k)
                acc += binomial(n + 1, 2 * k + 1) * (x2m1.pow(k) * x.pow(n - 2 * k));
            return acc;
        case SeqKind::FibonacciPoly:
            for (long k = 0; 2 * k <= n - 1; ++k)
                acc += binomial(n - k - 1, k) * x.pow(n - 2 * k - 1);
            return acc;
        default:
            throw std::domain_error(std::string("seq_explicit: no explicit form for kind ") +
                                    to_string(kind));
    }
}

/// Exact integer sequence value (denominator 1).
inline Rational num_seq(NumSeqKind kind, long n) {
    require_index(n);
    return detail::SeqTable::instance().number(kind, n);
}

/// Chebyshev values at 4 through the closed binomial forms
/// T_n(4) = 4^n * sum_j C(n,2j) (15/16)^j and the U analogue.
inline Rational chebyshev_at_four(SeqKind kind, long n) {
    require_index(n);
    const Rational ratio(15, 16);
    Rational sum(0);
    Rational rp(1);
    if (kind == SeqKind::ChebyshevT) {
        for (long j = 0; 2 * j <= n; ++j) {
            sum += binomial(n, 2 * j) * rp;
            rp *= ratio;
        }
    } else if (kind == SeqKind::ChebyshevU) {
        for (long j = 0; 2 * j <= n; ++j) {
            sum += binomial(n + 1, 2 * j + 1) * rp;
            rp *= ratio;
        }
    } else {
        throw std::domain_error("chebyshev_at_four: kind must be T or U");
    }
    return Rational(4).pow(n) * sum;
}

inline SeqKind seq_kind_from_name(const std::string& name) {
    if (name == "T") return SeqKind::ChebyshevT;
    if (name == "U") return SeqKind::ChebyshevU;
    if (name == "F") return SeqKind::FibonacciPoly;
    if (name == "B") return SeqKind::BalancingB;
    if (name == "C") return SeqKind::LucasBalancingC;
    throw std::domain_error("unknown sequence kind: " + name);
}

inline NumSeqKind num_seq_kind_from_name(const std::string& name) {
    if (name == "Fib") return NumSeqKind::FibonacciNum;
    if (name == "Luc") return NumSeqKind::LucasNum;
    if (name == "Bal") return NumSeqKind::BalancingNum;
    throw std::domain_error("unknown numeric sequence kind: " + name);
}

}  // namespace chebfib
