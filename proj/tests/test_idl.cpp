#include <catch2/catch_amalgamated.hpp>

#include "chebfib/catalog.hpp"
#include "chebfib/idl/eval.hpp"
#include "chebfib/idl/format.hpp"
#include "chebfib/idl/parser.hpp"

using namespace chebfib;
using namespace chebfib::idl;

namespace {

const char* kThm11 =
    "F(n,x) = T(n-1,x) - sum(k,1,n-2,(x*T(n-1-k,x)-2*T(n-2-k,x))*F(k,x)) for n >= 1";

ExtElem eval_text(const std::string& expr_text, long n, std::optional<long> k = std::nullopt) {
    Parser p(expr_text);
    return eval_expr(p.parse_expr_only(), n, k, standard_ctx());
}

// Closed-loop direct implementations, independent of the AST evaluator.
Poly thm11_lhs(long n) { return seq_poly(SeqKind::FibonacciPoly, n); }
Poly thm11_rhs(long n) {
    const Poly x = Poly::x();
    Poly acc = seq_poly(SeqKind::ChebyshevT, n - 1);
    for (long k = 1; k <= n - 2; ++k)
        acc -= (x * seq_poly(SeqKind::ChebyshevT, n - 1 - k) -
                Rational(2) * seq_poly(SeqKind::ChebyshevT, n - 2 - k)) *
               seq_poly(SeqKind::FibonacciPoly, k);
    return acc;
}
Poly thm22_lhs(long n) {
    return Rational(2) * Poly::x() * seq_poly(SeqKind::FibonacciPoly, 2 * n + 1);
}
Poly thm22_rhs(long n) {
    const Poly x = Poly::x();
    const Poly weight = Rational(3) * x * x - Poly(4);
    Poly acc = seq_poly(SeqKind::ChebyshevU, 2 * n + 1) - seq_poly(SeqKind::ChebyshevU, 2 * n - 1);
    for (long k = 0; k <= n - 1; ++k)
        acc -= weight * seq_poly(SeqKind::FibonacciPoly, 2 * k + 1) *
               seq_poly(SeqKind::ChebyshevU, 2 * (n - k) - 1);
    return acc;
}

}  // namespace

TEST_CASE("parsing the flagship identity", "[idl]") {
    const Identity id = parse_identity(kThm11);
    CHECK(id.n_min == 1);
    const auto* lhs = std::get_if<SeqRef>(&id.lhs->node);
    REQUIRE(lhs);
    CHECK(lhs->kind == SeqKind::FibonacciPoly);
    CHECK(lhs->index == AffineIndex{1, 0, 0});
    CHECK(std::holds_alternative<VarX>(lhs->arg->node));
    const auto* rhs = std::get_if<BinaryExpr>(&id.rhs->node);
    REQUIRE(rhs);
    CHECK(rhs->op == '-');
    const auto* sum = std::get_if<SumExpr>(&rhs->rhs->node);
    REQUIRE(sum);
    CHECK(sum->var == 'k');
    CHECK(sum->lo == AffineIndex{0, 0, 1});
    CHECK(sum->hi == AffineIndex{1, 0, -2});
}

TEST_CASE("parse errors carry locations", "[idl]") {
    // unclosed sum at end of input
    try {
        parse_identity("F(n,x) = sum(k,0,n-1, for n >= 1");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("sum") != std::string::npos);
        CHECK(e.line() == 1);
    }
    // non-affine index
    CHECK_THROWS_WITH(parse_identity("T(n*k,x) = 0 for n >= 0"),
                      Catch::Matchers::ContainsSubstring("non-affine"));
    // unknown name
    CHECK_THROWS_AS(parse_identity("Q(n,x) = 0 for n >= 0"), ParseError);
    // missing 'for' tail
    CHECK_THROWS_AS(parse_identity("F(n,x) = 0"), ParseError);
    // trailing garbage
    CHECK_THROWS_AS(parse_identity("F(n,x) = 0 for n >= 1 extra"), ParseError);
    // literal division by zero
    CHECK_THROWS_WITH(parse_identity("1/0 = 0 for n >= 0"),
                      Catch::Matchers::ContainsSubstring("division by zero"));
    // arity / malformed call
    CHECK_THROWS_AS(parse_identity("binom(n) = 0 for n >= 0"), ParseError);
}

TEST_CASE("power binds tighter than unary minus", "[idl]") {
    Parser p("-x^2");
    const ExprPtr e = p.parse_expr_only();
    const auto* neg = std::get_if<NegExpr>(&e->node);
    REQUIRE(neg);
    CHECK(std::holds_alternative<PowExpr>(neg->a->node));
    // and the parenthesized form negates first
    Parser q("(-x)^2");
    const ExprPtr e2 = q.parse_expr_only();
    const auto* pow = std::get_if<PowExpr>(&e2->node);
    REQUIRE(pow);
    CHECK(std::holds_alternative<NegExpr>(pow->base->node));
}

TEST_CASE("literal rationals fold", "[idl]") {
    Parser p("15/16");
    const ExprPtr e = p.parse_expr_only();
    const auto* r = std::get_if<RationalConst>(&e->node);
    REQUIRE(r);
    CHECK(r->value == Rational(15, 16));
}

TEST_CASE("round trip is the identity on the catalog corpus", "[idl]") {
    for (const auto& entry : catalog::entries()) {
        for (const std::string* text : {&entry.idl_text, &entry.verbatim_idl}) {
            if (text->empty())
                continue;
            const Identity parsed = parse_identity(*text);
            const std::string canon = format_identity(parsed);
            const Identity reparsed = parse_identity(canon);
            INFO(entry.id << ": " << canon);
            CHECK(structurally_equal(parsed, reparsed));
            CHECK(format_identity(reparsed) == canon);  // fixed point after one format
        }
    }
}

TEST_CASE("formatting is canonical", "[idl]") {
    const Identity id = parse_identity(kThm11);
    CHECK(format_identity(id) ==
          "F(n,x) = T(n-1,x) - sum(k,1,n-2,(x*T(n-k-1,x) - 2*T(n-k-2,x))*F(k,x)) for n >= 1");
    const Identity sgn = parse_identity("sign(n-k)*x = 0 for n >= 0");
    CHECK(format_identity(sgn).find("sign(n-k)") != std::string::npos);
}

TEST_CASE("sum semantics at the boundary", "[idl]") {
    const auto& ctx = standard_ctx();
    // hi = lo-1 contributes exactly zero
    CHECK(eval_text("sum(k,1,0,F(k,x))", 5).is_zero());
    // hi = lo contributes one term
    CHECK(eval_text("sum(k,2,2,F(k,x))", 5) ==
          ExtElem::from_scalar(ctx, RatFunc(seq_poly(SeqKind::FibonacciPoly, 2))));
}

TEST_CASE("sign parity", "[idl]") {
    for (long e = -6; e <= 6; ++e) {
        const auto v = eval_text("sign(n)", e);
        const long expect = (e % 2 == 0) ? 1 : -1;
        CHECK(v == ExtElem::from_scalar(standard_ctx(), RatFunc(Rational(expect))));
    }
}

TEST_CASE("named constants expand to their radical forms", "[idl]") {
    // alpha*beta = 1 and rho*sigma = -1 under evaluation
    CHECK(eval_text("alpha*beta", 0) == ExtElem::one(standard_ctx()));
    CHECK(eval_text("rho*sigma", 0) == -ExtElem::one(standard_ctx()));
    // alpha parses identically with and without the call parens
    Parser bare("alpha"), called("alpha()");
    CHECK(structurally_equal(bare.parse_expr_only(), called.parse_expr_only()));
}

TEST_CASE("evaluator errors are errors, not failures", "[idl]") {
    const auto& ctx = standard_ctx();
    // negative sequence index
    const Identity neg = parse_identity("F(n-2,x) = 0 for n >= 0");
    CHECK_THROWS_AS(eval_identity(neg, 0, ctx), EvalError);
    // 0^negative
    const Identity zp = parse_identity("0^(-1) = 1 for n >= 0");
    CHECK_THROWS_AS(eval_identity(zp, 0, ctx), EvalError);
    // division by zero at a concrete n
    const Identity dz = parse_identity("1/(x-x) = 1 for n >= 0");
    CHECK_THROWS_AS(eval_identity(dz, 0, ctx), EvalError);
    // unbound radical
    const Identity ur = parse_identity("sqrt(x^2+5) = 1 for n >= 0");
    CHECK_THROWS_AS(eval_identity(ur, 0, ctx), EvalError);
    // k outside any sum
    const Identity fk = parse_identity("F(k,x) = 0 for n >= 0");
    CHECK_THROWS_AS(eval_identity(fk, 0, ctx), EvalError);
    // below n_min
    const Identity ok = parse_identity(kThm11);
    CHECK_THROWS_AS(eval_identity(ok, 0, ctx), EvalError);
}

TEST_CASE("flagship identities have zero residual", "[idl]") {
    const auto& ctx = standard_ctx();
    const Identity thm11 = parse_identity(kThm11);
    CHECK(eval_identity(thm11, 3, ctx).is_zero());
    // the radical identity from the exponential side at n = 2
    const auto entry = catalog::find_entry("THM4.1");
    REQUIRE(entry);
    CHECK(eval_identity(entry->statement(), 2, ctx).is_zero());
}

TEST_CASE("evaluator matches closed-loop fixtures", "[idl]") {
    const auto& ctx = standard_ctx();
    const Identity thm11 = parse_identity(kThm11);
    const auto thm22_entry = catalog::find_entry("THM2.2");
    REQUIRE(thm22_entry);
    const Identity thm22 = thm22_entry->statement();
    for (long n = 1; n <= 15; ++n) {
        // identical sides, not just identical (zero) residuals
        CHECK(eval_expr(thm11.lhs, n, std::nullopt, ctx).project_poly() == thm11_lhs(n));
        CHECK(eval_expr(thm11.rhs, n, std::nullopt, ctx).project_poly() == thm11_rhs(n));
        CHECK(eval_expr(thm22.lhs, n, std::nullopt, ctx).project_poly() == thm22_lhs(n));
        CHECK(eval_expr(thm22.rhs, n, std::nullopt, ctx).project_poly() == thm22_rhs(n));
    }
}

TEST_CASE("identity files", "[idl]") {
    const std::string text =
        "# a comment\n"
        "radicals: x^2 - 1 -> w1, x^2 + 4 -> w2\n"
        "\n"
        "#@ id A.1\n"
        "#@ mode symbolic-poly\n"
        "F(n,x) = F(n,x) for n >= 0\n"
        "\n"
        "2*x*F(2*n+1,x) = U(2*n+1,x) - U(2*n-1,x) - "
        "(3*x^2-4)*sum(k,0,n-1,F(2*k+1,x)*U(2*(n-k)-1,x)) for n >= 1\n";
    const IdlFile file = parse_identity_file(text);
    REQUIRE(file.entries.size() == 2);
    CHECK(file.entries[0].id == "A.1");
    CHECK(file.entries[0].mode == "symbolic-poly");
    CHECK(file.entries[1].id == "USER.1");
    CHECK(file.entries[1].identity.n_min == 1);
    CHECK(file.bindings.w1_radicand == Poly{Rational(-1), Rational(0), Rational(1)});

    CHECK_THROWS_AS(parse_identity_file("radicals: x -> w1\n"), ParseError);
    CHECK_THROWS_AS(parse_identity_file("F(n,x) = for n >= 1\n"), ParseError);
}
