#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "chebfib/verify.hpp"
#include "mutation.hpp"

using namespace chebfib;
using namespace chebfib::catalog;
using testutil::count_int_sites;
using testutil::mutate_one_int;

TEST_CASE("catalog counts", "[catalog]") {
    CHECK(entries().size() == 55);
    CHECK(entries_with_prefix("THM1").size() == 2);
    CHECK(entries_with_prefix("THM2").size() == 4);
    CHECK(entries_with_prefix("THM3").size() == 12);
    CHECK(entries_with_prefix("THM7").size() == 12);
    CHECK(entries_with_prefix("COR7").size() == 7);
    CHECK(entries_with_prefix("COR8").size() == 6);
    CHECK(entries_with_prefix("COR9").size() == 4);
    CHECK(entries_with_prefix("COR10").size() == 2);
    CHECK(functional_equations().size() == 10);  // nine gated + one as-printed variant
    long gated_fe = 0;
    for (const auto& fe : functional_equations())
        gated_fe += fe.gate ? 1 : 0;
    CHECK(gated_fe == 9);

    std::set<std::string> ids;
    for (const auto& e : entries())
        ids.insert(e.id);
    CHECK(ids.size() == 55);  // unique
}

TEST_CASE("deterministic id order", "[catalog]") {
    CHECK(natural_id_less("THM3.2", "THM3.10"));
    CHECK(natural_id_less("COR7.1", "COR10.1"));
    CHECK(natural_id_less("THM4.1", "THM4.1.verbatim"));
    CHECK_FALSE(natural_id_less("THM4.2", "THM4.1.verbatim"));
    const auto& es = entries();
    for (size_t i = 1; i < es.size(); ++i)
        CHECK(natural_id_less(es[i - 1].id, es[i].id));
}

TEST_CASE("modes are what the statements imply", "[catalog]") {
    for (const auto& e : entries())
        CHECK(infer_mode(e.statement()) == e.mode);
}

TEST_CASE("worked examples", "[catalog]") {
    // THM1.1 at n = 3: F_3 = x^2+1 and T_2 - (x T_1 - 2 T_0) F_1 = x^2+1
    const Poly x = Poly::x();
    const Poly f3 = seq_poly(SeqKind::FibonacciPoly, 3);
    CHECK(f3 == x * x + Poly(1));
    const Poly rhs = seq_poly(SeqKind::ChebyshevT, 2) -
                     (x * seq_poly(SeqKind::ChebyshevT, 1) -
                      Rational(2) * seq_poly(SeqKind::ChebyshevT, 0)) *
                         seq_poly(SeqKind::FibonacciPoly, 1);
    CHECK(rhs == f3);
    const auto r = verify_entry("THM1.1", 3, 3);
    CHECK(r.status == "pass");

    // THM1.2 at n = 2 rests on the empty-sum convention
    const auto r2 = verify_entry("THM1.2", 2, 2);
    CHECK(r2.status == "pass");

    // COR8.1 at n = 1: 15 F_2 = 15 = 5*4 - 20/4
    CHECK(num_seq(NumSeqKind::FibonacciNum, 2) * Rational(15) == Rational(15));
    CHECK(Rational(5) * Rational(4) - Rational(20) * Rational(4).pow(-1) == Rational(15));
    CHECK(verify_entry("COR8.1", 1, 5).status == "pass");
}

TEST_CASE("verify_entry argument checking", "[catalog]") {
    CHECK_THROWS_AS(verify_entry("THM99.1", 1, 5), std::domain_error);
    CHECK_THROWS_AS(verify_entry("THM1.1", 0, 5), std::domain_error);  // below n_min
}

TEST_CASE("vacuous ranges pass with a note", "[catalog]") {
    const auto e = find_entry("THM1.1");
    REQUIRE(e);
    const auto r = verify_identity(e->id, e->anchor, to_string(e->mode), e->statement(), 1, 0);
    CHECK(r.status == "pass");
    CHECK(r.vacuous);
    CHECK(report_to_text({r}).find("vacuous") != std::string::npos);
}

TEST_CASE("gated entries pass and as-printed variants fail where recorded", "[catalog]") {
    const auto reports = verify_all(6, 2);
    // 55 canonical + 10 as-printed companions
    CHECK(reports.size() == 65);
    CHECK(all_gated_pass(reports));

    const std::vector<std::pair<std::string, long>> expected_failures = {
        {"COR7.3.verbatim", 1},  {"COR7.7.verbatim", 1},  {"COR8.5.verbatim", 1},
        {"THM4.1.verbatim", 1},  {"THM4.2.verbatim", 1},  {"THM7.04.verbatim", 1},
        {"THM7.06.verbatim", 0}, {"THM7.07.verbatim", 1}, {"THM7.08.verbatim", 1},
        {"THM7.09.verbatim", 1},
    };
    for (const auto& [id, first_n] : expected_failures) {
        const auto it = std::find_if(reports.begin(), reports.end(),
                                     [&](const VerifyReport& r) { return r.id == id; });
        REQUIRE(it != reports.end());
        INFO(id);
        CHECK(it->status == "fail");
        CHECK_FALSE(it->gate);
        REQUIRE(it->first_failing_n.has_value());
        CHECK(*it->first_failing_n == first_n);
        CHECK_FALSE(it->residual.empty());
    }
}

TEST_CASE("parallel runs are deterministic", "[catalog]") {
    auto strip = [](std::vector<VerifyReport> rs) {
        for (auto& r : rs)
            r.wall_time_ms = 0.0;
        return rs;
    };
    const RunMeta meta{64, 6, 0, ""};
    const auto a = report_to_json(meta, strip(verify_all(6, 1))).dump();
    const auto b = report_to_json(meta, strip(verify_all(6, 8))).dump();
    CHECK(a == b);
}

TEST_CASE("negative controls: single-coefficient mutations fail fast", "[catalog]") {
    const std::vector<std::string> pool = {"THM1.1", "THM2.2", "THM3.5",  "THM3.8",  "COR7.2",
                                           "THM4.1", "THM5.1", "THM7.03", "THM7.11", "COR8.1",
                                           "COR9.3", "COR10.1"};
    std::mt19937 rng(20250810);
    int checked = 0;
    for (const auto& id : pool) {
        if (checked >= 10)
            break;
        const auto entry = find_entry(id);
        REQUIRE(entry);
        const idl::Identity identity = entry->statement();
        const int sites = count_int_sites(identity.lhs) + count_int_sites(identity.rhs);
        REQUIRE(sites > 0);
        std::uniform_int_distribution<int> pick(0, sites - 1);
        const idl::Identity mutated = mutate_one_int(identity, pick(rng), +1);
        const auto r = verify_identity(entry->id + ".mutated", "", to_string(entry->mode),
                                       mutated, entry->n_min, 6);
        INFO(id << " site count " << sites);
        CHECK(r.status == "fail");
        REQUIRE(r.first_failing_n.has_value());
        CHECK(*r.first_failing_n <= 3);
        ++checked;
    }
    CHECK(checked == 10);
}

TEST_CASE("parity structure of the first exponential identity", "[catalog]") {
    // In THM4.1 the surviving LHS terms have n-k odd and the surviving RHS
    // terms have n-k even; check the summand expressions directly.
    const auto entry = find_entry("THM4.1");
    REQUIRE(entry);
    const idl::Identity id = entry->statement();
    const auto* lhs_sum = std::get_if<idl::SumExpr>(&id.lhs->node);
    const auto* rhs_sum = std::get_if<idl::SumExpr>(&id.rhs->node);
    REQUIRE(lhs_sum);
    REQUIRE(rhs_sum);
    const long n = 5;
    for (long k = 0; k <= n - 1; ++k) {
        const auto term = idl::eval_expr(lhs_sum->body, n, k, standard_ctx());
        CHECK(term.is_zero() == ((n - k) % 2 == 0));
    }
    for (long k = 1; k <= n; ++k) {
        const auto term = idl::eval_expr(rhs_sum->body, n, k, standard_ctx());
        CHECK(term.is_zero() == ((n - k) % 2 != 0));
    }
}

TEST_CASE("catalog dump parses back to the same statements", "[catalog]") {
    const auto file = idl::parse_identity_file(catalog_idl_text());
    CHECK(file.entries.size() == 65);
    size_t i = 0;
    for (const auto& e : entries()) {
        REQUIRE(i < file.entries.size());
        CHECK(file.entries[i].id == e.id);
        CHECK(file.entries[i].mode == to_string(e.mode));
        CHECK(idl::structurally_equal(file.entries[i].identity, e.statement()));
        ++i;
        if (e.has_verbatim_variant()) {
            CHECK(file.entries[i].id == e.id + ".verbatim");
            CHECK_FALSE(file.entries[i].gate);
            CHECK(idl::structurally_equal(file.entries[i].identity, e.verbatim_statement()));
            ++i;
        }
    }
}
