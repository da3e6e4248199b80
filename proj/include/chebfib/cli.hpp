#pragma once

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "chebfib/verify.hpp"

namespace chebfib::cli {

/// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
/// 3 internal error.
enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kInternal = 3 };

namespace detail {

inline int default_parallelism() {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

struct VerifyOutput {
    std::vector<catalog::VerifyReport> reports;
    catalog::RunMeta meta;
};

inline int emit_reports(const VerifyOutput& out, const std::string& report_path,
                        const std::string& format, std::ostream& os, std::ostream& err) {
    os << catalog::report_to_text(out.reports);
    if (!report_path.empty()) {
        std::ofstream file(report_path);
        if (!file) {
            err << "cannot open report file: " << report_path << "\n";
            return kInternal;
        }
        if (format == "text")
            file << catalog::report_to_text(out.reports);
        else
            file << catalog::report_to_json(out.meta, out.reports).dump(2) << "\n";
    }
    return catalog::all_gated_pass(out.reports) ? kOk : kVerifyFailed;
}

inline void sort_reports(std::vector<catalog::VerifyReport>& reports) {
    std::sort(reports.begin(), reports.end(),
              [](const catalog::VerifyReport& a, const catalog::VerifyReport& b) {
                  return catalog::natural_id_less(a.id, b.id);
              });
}

}  // namespace detail

/// Argv-level entry point (program name excluded). Results go to `out`,
/// diagnostics to `err`.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact generator and verifier for Chebyshev-Fibonacci polynomial identities"};
    app.require_subcommand(1);

    // --- seq ---
    auto* seq = app.add_subcommand("seq", "print a sequence polynomial in canonical form");
    std::string seq_kind;
    long seq_n = 0;
    std::string seq_route = "recurrence";
    seq->add_option("--kind", seq_kind, "sequence family: T, U, F, B, C")->required();
    seq->add_option("--n", seq_n, "index (nonnegative)")->required();
    seq->add_option("--route", seq_route, "recurrence | binet | explicit")
        ->check(CLI::IsMember({"recurrence", "binet", "explicit"}));

    // --- series ---
    auto* series = app.add_subcommand("series", "print generating-function coefficients 0..order");
    std::string series_family;
    long series_order = 8;
    series->add_option("--family", series_family,
                       "one of t,t1,t2,u,u1,u2,f,f1,f2,tau,tau1,tau2,omega,omega1,omega2,"
                       "phi,phi1,phi2")
        ->required();
    series->add_option("--order", series_order, "truncation order (default 8)");

    // --- verify ---
    auto* verify = app.add_subcommand("verify", "verify catalog entries or an identity file");
    std::string verify_file;
    std::string verify_catalog;
    long verify_nmax = 25;
    long verify_order = 64;
    std::string verify_report;
    std::string verify_format = "structured";
    int verify_par = detail::default_parallelism();
    verify->add_option("file", verify_file, "identity file (.idl) to verify");
    verify->add_option("--catalog", verify_catalog,
                       "catalog id prefix, or 'all' (identities plus functional equations)");
    verify->add_option("--n-max", verify_nmax, "largest n per identity (default 25)");
    verify->add_option("--order", verify_order,
                       "truncation order for functional equations (default 64)");
    verify->add_option("--report", verify_report, "write a report file");
    verify->add_option("--format", verify_format, "report file format (default structured)")
        ->check(CLI::IsMember({"text", "structured"}));
    verify->add_option("--parallelism", verify_par, "worker threads (default: cores)");

    // --- numbers ---
    auto* numbers = app.add_subcommand("numbers", "verify the exact integer/rational entries");
    std::string numbers_cor = "COR";
    long numbers_nmax = 40;
    std::string numbers_report;
    std::string numbers_format = "structured";
    int numbers_par = detail::default_parallelism();
    numbers->add_option("--corollary", numbers_cor, "id prefix (default COR)");
    numbers->add_option("--n-max", numbers_nmax, "largest n per identity (default 40)");
    numbers->add_option("--report", numbers_report, "write a report file");
    numbers->add_option("--format", numbers_format, "report file format")
        ->check(CLI::IsMember({"text", "structured"}));
    numbers->add_option("--parallelism", numbers_par, "worker threads");

    // --- catalog ---
    auto* cat = app.add_subcommand("catalog", "list or dump the built-in catalog");
    bool cat_list = false;
    bool cat_dump = false;
    std::string cat_filter;
    cat->add_flag("--list", cat_list, "print ids, modes, and anchors");
    cat->add_flag("--dump-idl", cat_dump, "print the whole catalog as an identity file");
    cat->add_option("--filter", cat_filter, "id prefix filter for --list");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        err << app.help();
        return kUsage;
    }

    try {
        if (seq->parsed()) {
            if (seq_n < 0) {
                err << "error: --n must be nonnegative\n";
                return kUsage;
            }
            const SeqKind kind = seq_kind_from_name(seq_kind);
            Poly p;
            if (seq_route == "binet")
                p = seq_binet(kind, seq_n);
            else if (seq_route == "explicit")
                p = seq_explicit(kind, seq_n);
            else
                p = seq_poly(kind, seq_n);
            out << p.to_string() << "\n";
            return kOk;
        }

        if (series->parsed()) {
            if (series_order < 0) {
                err << "error: --order must be nonnegative\n";
                return kUsage;
            }
            const GfSpec spec{gf_family_from_name(series_family)};
            const auto s = build_gf(spec, series_order);
            for (long j = 0; j <= series_order; ++j)
                out << (j ? ", " : "") << s.coeff(j).to_string();
            out << "\n";
            return kOk;
        }

        if (verify->parsed()) {
            if (verify_file.empty() && verify_catalog.empty()) {
                err << "error: verify needs an identity file or --catalog\n";
                return kUsage;
            }
            detail::VerifyOutput result;
            result.meta = {verify_order, verify_nmax, verify_par,
                           catalog::utc_timestamp_now()};
            if (!verify_file.empty()) {
                std::ifstream in(verify_file);
                if (!in) {
                    err << "error: cannot read " << verify_file << "\n";
                    return kUsage;
                }
                std::stringstream buf;
                buf << in.rdbuf();
                idl::IdlFile parsed;
                try {
                    parsed = idl::parse_identity_file(buf.str());
                } catch (const idl::ParseError& e) {
                    err << verify_file << ": " << e.what() << "\n";
                    return kUsage;
                }
                result.reports = catalog::verify_idl_entries(parsed.entries, verify_nmax,
                                                             verify_par);
            } else {
                const std::string prefix = verify_catalog == "all" ? "" : verify_catalog;
                result.reports = catalog::verify_all(verify_nmax, verify_par, prefix);
                auto fe = catalog::verify_fe_all(verify_order, verify_par, prefix);
                result.reports.insert(result.reports.end(), fe.begin(), fe.end());
                detail::sort_reports(result.reports);
                if (result.reports.empty()) {
                    err << "error: no catalog entry matches prefix '" << verify_catalog << "'\n";
                    return kUsage;
                }
            }
            return detail::emit_reports(result, verify_report, verify_format, out, err);
        }

        if (numbers->parsed()) {
            detail::VerifyOutput result;
            result.meta = {0, numbers_nmax, numbers_par, catalog::utc_timestamp_now()};
            for (auto& r : catalog::verify_all(numbers_nmax, numbers_par, numbers_cor))
                if (r.mode == to_string(catalog::VerifyMode::Numeric))
                    result.reports.push_back(std::move(r));
            if (result.reports.empty()) {
                err << "error: no numeric entry matches prefix '" << numbers_cor << "'\n";
                return kUsage;
            }
            return detail::emit_reports(result, numbers_report, numbers_format, out, err);
        }

        if (cat->parsed()) {
            if (cat_dump) {
                out << catalog::catalog_idl_text();
                return kOk;
            }
            if (!cat_list) {
                err << "error: catalog needs --list or --dump-idl\n";
                return kUsage;
            }
            for (const auto& e : catalog::entries_with_prefix(cat_filter)) {
                out << e.id << "  [" << to_string(e.mode) << ", n >= " << e.n_min << "]  "
                    << e.anchor << "\n";
                if (e.has_verbatim_variant())
                    out << e.id << ".verbatim  [" << to_string(e.mode)
                        << ", reported only]  " << e.anchor << " [as printed]\n";
            }
            for (const auto& fe : catalog::functional_equations())
                if (fe.id.rfind(cat_filter, 0) == 0)
                    out << fe.id << "  [functional-equation"
                        << (fe.gate ? "" : ", reported only") << "]  " << fe.anchor << "\n";
            return kOk;
        }
    } catch (const idl::ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    err << "error: no subcommand\n";
    return kUsage;
}

}  // namespace chebfib::cli
