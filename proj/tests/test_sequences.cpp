#include <catch2/catch_amalgamated.hpp>

#include <thread>

#include "chebfib/sequences.hpp"
#include "test_util.hpp"

using namespace chebfib;

TEST_CASE("recurrence seeds", "[sequences]") {
    const Poly x = Poly::x();
    CHECK(seq_poly(SeqKind::ChebyshevT, 0) == Poly(1));
    CHECK(seq_poly(SeqKind::ChebyshevT, 1) == x);
    CHECK(seq_poly(SeqKind::ChebyshevU, 1) == Rational(2) * x);
    CHECK(seq_poly(SeqKind::FibonacciPoly, 0).is_zero());
    CHECK(seq_poly(SeqKind::FibonacciPoly, 1) == Poly(1));
    CHECK(seq_poly(SeqKind::BalancingB, 0).is_zero());
    CHECK(seq_poly(SeqKind::BalancingB, 1) == Poly(1));
    CHECK(seq_poly(SeqKind::LucasBalancingC, 0) == Poly(1));
    CHECK(seq_poly(SeqKind::LucasBalancingC, 1) == Rational(3) * x);
    CHECK(seq_poly(SeqKind::ChebyshevU, 3) ==
          Poly{Rational(0), Rational(-4), Rational(0), Rational(8)});
    CHECK_THROWS_AS(seq_poly(SeqKind::ChebyshevT, -1), std::domain_error);
}

TEST_CASE("binet route", "[sequences]") {
    const Poly x = Poly::x();
    CHECK(seq_binet(SeqKind::ChebyshevT, 2) == Rational(2) * x * x - Poly(1));
    CHECK(seq_binet(SeqKind::FibonacciPoly, 3) == x * x + Poly(1));
    CHECK(seq_binet(SeqKind::LucasBalancingC, 1) == Rational(3) * x);
    CHECK(seq_binet(SeqKind::BalancingB, 0).is_zero());
}

TEST_CASE("explicit binomial sums", "[sequences]") {
    // F_5 = C(4,0) x^4 + C(3,1) x^2 + C(2,2)
    Poly expected;
    expected += binomial(4, 0) * Poly::x().pow(4);
    expected += binomial(3, 1) * Poly::x().pow(2);
    expected += binomial(2, 2) * Poly(1);
    CHECK(seq_explicit(SeqKind::FibonacciPoly, 5) == expected);
    // T_2 = (x^2-1) + x^2
    CHECK(seq_explicit(SeqKind::ChebyshevT, 2) ==
          Poly{Rational(-1), Rational(0), Rational(2)});
    CHECK(seq_explicit(SeqKind::ChebyshevU, 0) == Poly(1));
    CHECK_THROWS_AS(seq_explicit(SeqKind::BalancingB, 3), std::domain_error);
}

TEST_CASE("three routes agree", "[sequences][property]") {
    for (long n = 0; n <= 30; ++n) {
        for (const auto kind :
             {SeqKind::ChebyshevT, SeqKind::ChebyshevU, SeqKind::FibonacciPoly}) {
            const Poly p = seq_poly(kind, n);
            CHECK(p == seq_binet(kind, n));
            CHECK(p == seq_explicit(kind, n));
        }
        CHECK(seq_poly(SeqKind::BalancingB, n) == seq_binet(SeqKind::BalancingB, n));
        CHECK(seq_poly(SeqKind::LucasBalancingC, n) == seq_binet(SeqKind::LucasBalancingC, n));
    }
}

TEST_CASE("balancing polynomials compose Chebyshev at 3x", "[sequences]") {
    for (long n = 1; n <= 40; ++n) {
        CHECK(seq_poly(SeqKind::BalancingB, n) ==
              seq_poly(SeqKind::ChebyshevU, n - 1).scale_arg(Rational(3)));
        CHECK(seq_poly(SeqKind::LucasBalancingC, n) ==
              seq_poly(SeqKind::ChebyshevT, n).scale_arg(Rational(3)));
    }
}

TEST_CASE("integer sequences", "[sequences]") {
    CHECK(num_seq(NumSeqKind::FibonacciNum, 10) == Rational(55));
    CHECK(num_seq(NumSeqKind::LucasNum, 0) == Rational(2));
    CHECK(num_seq(NumSeqKind::LucasNum, 1) == Rational(1));
    CHECK(num_seq(NumSeqKind::BalancingNum, 3) == Rational(35));
    for (long n = 0; n <= 30; ++n) {
        CHECK(num_seq(NumSeqKind::FibonacciNum, n) ==
              seq_poly(SeqKind::FibonacciPoly, n).eval(Rational(1)));
        CHECK(num_seq(NumSeqKind::BalancingNum, n) ==
              seq_poly(SeqKind::BalancingB, n).eval(Rational(1)));
        CHECK(num_seq(NumSeqKind::LucasNum, n) ==
              Rational(testutil::lucas_ll(static_cast<int>(n))));
    }
}

TEST_CASE("chebyshev values at four", "[sequences]") {
    CHECK(chebyshev_at_four(SeqKind::ChebyshevT, 1) == Rational(4));
    CHECK(chebyshev_at_four(SeqKind::ChebyshevT, 2) == Rational(31));
    // U_2(4) = 16*(C(3,1) + C(3,3)*15/16)
    CHECK(chebyshev_at_four(SeqKind::ChebyshevU, 2) == Rational(63));
    CHECK_THROWS_AS(chebyshev_at_four(SeqKind::FibonacciPoly, 2), std::domain_error);
    for (long n = 0; n <= 30; ++n) {
        CHECK(chebyshev_at_four(SeqKind::ChebyshevT, n) ==
              seq_poly(SeqKind::ChebyshevT, n).eval(Rational(4)));
        CHECK(chebyshev_at_four(SeqKind::ChebyshevU, n) ==
              seq_poly(SeqKind::ChebyshevU, n).eval(Rational(4)));
    }
}

TEST_CASE("anchor values at 3/2 and 4", "[sequences]") {
    for (long n = 0; n <= 40; ++n) {
        CHECK(seq_poly(SeqKind::ChebyshevT, n).eval(Rational(3, 2)) ==
              num_seq(NumSeqKind::LucasNum, 2 * n) * Rational(1, 2));
        CHECK(seq_poly(SeqKind::ChebyshevU, n).eval(Rational(3, 2)) ==
              num_seq(NumSeqKind::FibonacciNum, 2 * n + 2));
        CHECK(seq_poly(SeqKind::FibonacciPoly, n).eval(Rational(4)) ==
              num_seq(NumSeqKind::FibonacciNum, 3 * n) * Rational(1, 2));
    }
}

TEST_CASE("case table at minus sqrt five", "[sequences]") {
    const auto ctx = make_ctx(Poly(5), Poly::x() * Poly::x() + Poly(4));
    const ExtElem arg = -ExtElem::w1(ctx);  // -sqrt(5)
    auto scalar = [&ctx](const Rational& c) {
        return ExtElem::from_scalar(ctx, RatFunc(c));
    };
    auto radical = [&ctx](const Rational& c) {
        return ExtElem::make(ctx, RatFunc(), RatFunc(c), RatFunc(), RatFunc());
    };
    for (long n = 0; n <= 30; ++n) {
        const Rational f3 = num_seq(NumSeqKind::FibonacciNum, 3 * n);
        const Rational l3 = num_seq(NumSeqKind::LucasNum, 3 * n);
        const Rational f3p = num_seq(NumSeqKind::FibonacciNum, 3 * n + 3);
        const Rational l3p = num_seq(NumSeqKind::LucasNum, 3 * n + 3);
        const Rational f2 = num_seq(NumSeqKind::FibonacciNum, 2 * n);
        const Rational l2 = num_seq(NumSeqKind::LucasNum, 2 * n);
        const ExtElem t = ext_eval_poly(seq_poly(SeqKind::ChebyshevT, n), arg);
        const ExtElem u = ext_eval_poly(seq_poly(SeqKind::ChebyshevU, n), arg);
        const ExtElem f = ext_eval_poly(seq_poly(SeqKind::FibonacciPoly, n), arg);
        if (n % 2 == 0) {
            CHECK(t == scalar(l3 * Rational(1, 2)));
            CHECK(u == scalar(l3p * Rational(1, 4)));
            CHECK(f == radical(-(f2 * Rational(1, 3))));
        } else {
            CHECK(t == radical(-(f3 * Rational(1, 2))));
            CHECK(u == radical(-(f3p * Rational(1, 4))));
            CHECK(f == scalar(l2 * Rational(1, 3)));
        }
    }
}

TEST_CASE("case table at i/2", "[sequences]") {
    const auto ctx = make_ctx(Poly(-1), Poly::x() * Poly::x() + Poly(4));
    const ExtElem i = ExtElem::w1(ctx);
    const ExtElem arg = i * RatFunc(Rational(1, 2));  // i/2
    for (long n = 0; n <= 30; ++n) {
        const ExtElem in = i.pow(n);
        CHECK(ext_eval_poly(seq_poly(SeqKind::ChebyshevT, n), arg) ==
              in * RatFunc(num_seq(NumSeqKind::LucasNum, n) * Rational(1, 2)));
        CHECK(ext_eval_poly(seq_poly(SeqKind::ChebyshevU, n), arg) ==
              in * RatFunc(num_seq(NumSeqKind::FibonacciNum, n + 1)));
    }
}

TEST_CASE("memo is consistent under concurrent access", "[sequences]") {
    std::vector<std::thread> threads;
    std::vector<Poly> results(8);
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([t, &results] {
            Poly acc;
            for (long n = 0; n <= 60; ++n)
                acc = seq_poly(SeqKind::ChebyshevU, n);
            results[static_cast<size_t>(t)] = acc;
        });
    for (auto& t : threads)
        t.join();
    for (const auto& r : results)
        CHECK(r == seq_binet(SeqKind::ChebyshevU, 60));
}
