#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "chebfib/cli.hpp"

using namespace chebfib;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

class TempFile {
  public:
    explicit TempFile(const std::string& contents) {
        path_ = std::string(std::tmpnam(nullptr)) + ".idl";
        std::ofstream f(path_);
        f << contents;
    }
    ~TempFile() { std::remove(path_.c_str()); }
    const std::string& path() const { return path_; }

  private:
    std::string path_;
};

}  // namespace

TEST_CASE("seq subcommand", "[cli]") {
    const auto r = run_cli({"seq", "--kind", "F", "--n", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "x^4 + 3*x^2 + 1\n");
    CHECK(r.err.empty());

    CHECK(run_cli({"seq", "--kind", "T", "--n", "5", "--route", "binet"}).out ==
          run_cli({"seq", "--kind", "T", "--n", "5", "--route", "explicit"}).out);
    CHECK(run_cli({"seq", "--kind", "B", "--n", "2"}).out == "6*x\n");
}

TEST_CASE("series subcommand", "[cli]") {
    const auto r = run_cli({"series", "--family", "f", "--order", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "0, 1, x, x^2 + 1, x^3 + 2*x\n");

    const auto tau = run_cli({"series", "--family", "tau", "--order", "2"});
    CHECK(tau.code == 0);
    CHECK(tau.out == "1, x, x^2 - 1/2\n");  // T_2/2! = (2x^2-1)/2
}

TEST_CASE("verify subcommand on the catalog", "[cli]") {
    const auto r = run_cli({"verify", "--catalog", "THM1.1", "--n-max", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS  THM1.1") != std::string::npos);
    CHECK(r.out.find("1/1 gated entries passed") != std::string::npos);

    const auto all = run_cli({"verify", "--catalog", "all", "--n-max", "3", "--order", "8",
                              "--parallelism", "2"});
    CHECK(all.code == 0);
    // 55 identities + 10 as-printed companions + 9 FEs + 1 FE companion
    CHECK(all.out.find("64/64 gated entries passed") != std::string::npos);
    CHECK(all.out.find("(+11 as-printed variants reported)") != std::string::npos);

    const auto none = run_cli({"verify", "--catalog", "NOPE", "--n-max", "3"});
    CHECK(none.code == 2);
}

TEST_CASE("verify writes structured reports", "[cli]") {
    const std::string path = std::string(std::tmpnam(nullptr)) + ".json";
    const auto r = run_cli(
        {"verify", "--catalog", "COR9", "--n-max", "10", "--report", path});
    CHECK(r.code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    nlohmann::json doc;
    in >> doc;
    CHECK(doc["run"]["n_hi"] == 10);
    REQUIRE(doc["entries"].size() == 4);
    CHECK(doc["entries"][0]["id"] == "COR9.1");
    CHECK(doc["entries"][0]["status"] == "pass");
    CHECK(doc["entries"][0]["first_failing_n"].is_null());
    CHECK(doc["entries"][0]["mode"] == "numeric");
    CHECK(doc["entries"][0]["n_range"] == nlohmann::json({0, 10}));
    std::remove(path.c_str());

    const auto bad = run_cli({"verify", "--catalog", "COR9", "--n-max", "5", "--report",
                              "/nonexistent-dir/report.json"});
    CHECK(bad.code == 3);
}

TEST_CASE("verify subcommand on identity files", "[cli]") {
    const TempFile good("F(n,x) = F(n,x) for n >= 0\n");
    CHECK(run_cli({"verify", good.path(), "--n-max", "5"}).code == 0);

    const TempFile wrong("F(n,x) = T(n,x) for n >= 0\n");
    const auto r = run_cli({"verify", wrong.path(), "--n-max", "5"});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
    CHECK(r.out.find("first_failing_n=0") != std::string::npos);

    const TempFile syntax("F(n,x = 0 for n >= 0\n");
    const auto s = run_cli({"verify", syntax.path(), "--n-max", "5"});
    CHECK(s.code == 2);
    CHECK(s.err.find("line") != std::string::npos);

    CHECK(run_cli({"verify", "/no/such/file.idl"}).code == 2);
    CHECK(run_cli({"verify"}).code == 2);
}

TEST_CASE("numbers subcommand", "[cli]") {
    const auto r = run_cli({"numbers", "--corollary", "COR8", "--n-max", "12"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS  COR8.1") != std::string::npos);
    CHECK(r.out.find("COR8.5.verbatim") != std::string::npos);
    CHECK(r.out.find("6/6 gated entries passed") != std::string::npos);

    CHECK(run_cli({"numbers", "--corollary", "THM1"}).code == 2);  // nothing numeric there
}

TEST_CASE("catalog subcommand", "[cli]") {
    const auto r = run_cli({"catalog", "--list"});
    CHECK(r.code == 0);
    size_t lines = 0;
    for (char c : r.out)
        lines += c == '\n';
    // 55 + 10 as-printed + 9 FE + 1 FE as-printed
    CHECK(lines == 75);
    CHECK(r.out.find("THM1.1") != std::string::npos);
    CHECK(r.out.find("functional-equation") != std::string::npos);

    const auto filtered = run_cli({"catalog", "--list", "--filter", "THM2"});
    size_t flines = 0;
    for (char c : filtered.out)
        flines += c == '\n';
    CHECK(flines == 4);

    const auto dumped = run_cli({"catalog", "--dump-idl"});
    CHECK(dumped.code == 0);
    const auto parsed = idl::parse_identity_file(dumped.out);
    CHECK(parsed.entries.size() == 65);

    CHECK(run_cli({"catalog"}).code == 2);
}

TEST_CASE("usage errors exit 2", "[cli]") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"seq", "--kind", "T"}).code == 2);          // missing --n
    CHECK(run_cli({"seq", "--kind", "T", "--n", "3", "--bogus"}).code == 2);
    CHECK(run_cli({"seq", "--kind", "Q", "--n", "3"}).code == 2);
    CHECK(run_cli({"seq", "--kind", "T", "--n", "-4"}).code == 2);
    CHECK(run_cli({"series", "--family", "nope", "--order", "3"}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("stdout is byte-identical across runs and parallelism", "[cli]") {
    const auto a = run_cli({"verify", "--catalog", "THM2", "--n-max", "8", "--parallelism", "1"});
    const auto b = run_cli({"verify", "--catalog", "THM2", "--n-max", "8", "--parallelism", "8"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}
