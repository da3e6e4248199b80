#pragma once

#include <atomic>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "chebfib/catalog.hpp"
#include "chebfib/functional_equations.hpp"
#include "chebfib/idl/eval.hpp"

namespace chebfib::catalog {

/// Outcome of checking one entry over a concrete range.
/// status: "pass" (zero residual everywhere, or vacuous range),
///         "fail" (first nonzero residual recorded),
///         "error" (evaluation raised; message in residual).
struct VerifyReport {
    std::string id;
    std::string anchor;
    std::string mode;
    long n_lo = 0;
    long n_hi = 0;
    std::string status;
    std::optional<long> first_failing_n;
    std::string residual;
    double wall_time_ms = 0.0;
    bool gate = true;
    bool vacuous = false;
};

namespace detail {

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

/// Checks one parsed identity for every n in [n_lo, n_hi].
inline VerifyReport verify_identity(const std::string& id, const std::string& anchor,
                                    const std::string& mode, const idl::Identity& identity,
                                    long n_lo, long n_hi, bool gate = true) {
    VerifyReport r;
    r.id = id;
    r.anchor = anchor;
    r.mode = mode;
    r.n_lo = n_lo;
    r.n_hi = n_hi;
    r.gate = gate;
    r.status = "pass";
    r.residual = "";
    const detail::Stopwatch clock;
    if (n_hi < n_lo) {
        r.vacuous = true;
        r.wall_time_ms = clock.ms();
        return r;
    }
    try {
        for (long n = n_lo; n <= n_hi; ++n) {
            const ExtElem residual = idl::eval_identity(identity, n, standard_ctx());
            if (!residual.is_zero()) {
                r.status = "fail";
                r.first_failing_n = n;
                r.residual = residual.to_string();
                break;
            }
        }
    } catch (const std::exception& e) {
        r.status = "error";
        r.residual = e.what();
    }
    r.wall_time_ms = clock.ms();
    return r;
}

/// Spec operation: one entry by id over [n_lo, n_hi]. Unknown ids and
/// ranges starting below the entry's n_min are errors.
inline VerifyReport verify_entry(const std::string& id, long n_lo, long n_hi) {
    const auto entry = find_entry(id);
    if (!entry)
        throw std::domain_error("unknown catalog entry: " + id);
    if (n_lo < entry->n_min)
        throw std::domain_error("n_lo " + std::to_string(n_lo) + " is below n_min " +
                                std::to_string(entry->n_min) + " for " + id);
    return verify_identity(entry->id, entry->anchor, to_string(entry->mode), entry->statement(),
                           n_lo, n_hi);
}

inline VerifyReport run_fe(const FunctionalEquation& fe, long order) {
    VerifyReport r;
    r.id = fe.id;
    r.anchor = fe.anchor;
    r.mode = to_string(VerifyMode::FunctionalEquation);
    r.n_lo = 0;
    r.n_hi = order;
    r.gate = fe.gate;
    const detail::Stopwatch clock;
    try {
        const FeCheckResult res = fe.check(order);
        if (res.pass) {
            r.status = "pass";
        } else {
            r.status = "fail";
            r.first_failing_n = res.first_failing_index;
            r.residual = res.residual;
        }
    } catch (const std::exception& e) {
        r.status = "error";
        r.residual = e.what();
    }
    r.wall_time_ms = clock.ms();
    return r;
}

namespace detail {

/// Runs tasks on `parallelism` workers; results land in fixed slots, so the
/// output order never depends on scheduling.
inline std::vector<VerifyReport> run_tasks(
    const std::vector<std::function<VerifyReport()>>& tasks, int parallelism) {
    std::vector<VerifyReport> results(tasks.size());
    if (parallelism <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i)
            results[i] = tasks[i]();
        return results;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= tasks.size())
                return;
            results[i] = tasks[i]();
        }
    };
    std::vector<std::thread> threads;
    const size_t count = std::min<size_t>(static_cast<size_t>(parallelism), tasks.size());
    threads.reserve(count);
    for (size_t t = 0; t < count; ++t)
        threads.emplace_back(worker);
    for (auto& t : threads)
        t.join();
    return results;
}

}  // namespace detail

/// Verifies identity entries (optionally filtered by id prefix) over
/// [n_min, n_hi] each. Entries with an as-printed variant also produce a
/// companion "<id>.verbatim" report, excluded from the pass gate. Output
/// order is deterministic regardless of parallelism.
inline std::vector<VerifyReport> verify_all(long n_hi, int parallelism,
                                            const std::string& prefix = "") {
    std::vector<std::function<VerifyReport()>> tasks;
    for (const auto& e : entries_with_prefix(prefix)) {
        tasks.push_back([e, n_hi] {
            return verify_identity(e.id, e.anchor, to_string(e.mode), e.statement(), e.n_min,
                                   n_hi);
        });
        if (e.has_verbatim_variant()) {
            tasks.push_back([e, n_hi] {
                return verify_identity(e.id + ".verbatim", e.anchor + " [as printed]",
                                       to_string(e.mode), e.verbatim_statement(), e.n_min, n_hi,
                                       /*gate=*/false);
            });
        }
    }
    return detail::run_tasks(tasks, parallelism);
}

/// Runs the functional-equation entries at the given truncation order.
inline std::vector<VerifyReport> verify_fe_all(long order, int parallelism,
                                               const std::string& prefix = "") {
    std::vector<std::function<VerifyReport()>> tasks;
    for (const auto& fe : functional_equations())
        if (fe.id.rfind(prefix, 0) == 0)
            tasks.push_back([&fe, order] { return run_fe(fe, order); });
    return detail::run_tasks(tasks, parallelism);
}

/// symbolic-ext when a radical appears, numeric when no x does, else
/// symbolic-poly.
inline VerifyMode infer_mode(const idl::Identity& identity);

/// Verifies the entries of a parsed identity file. Modes are taken from the
/// file's metadata or inferred; ids ending in ".verbatim" (or marked
/// "#@ gate false") are excluded from the pass gate.
inline std::vector<VerifyReport> verify_idl_entries(const std::vector<idl::IdlEntry>& list,
                                                    long n_hi, int parallelism) {
    std::vector<std::function<VerifyReport()>> tasks;
    for (const auto& entry : list) {
        tasks.push_back([entry, n_hi] {
            std::string mode = entry.mode;
            if (mode.empty())
                mode = to_string(infer_mode(entry.identity));
            const bool gate = entry.gate && entry.id.find(".verbatim") == std::string::npos;
            return verify_identity(entry.id, entry.anchor, mode, entry.identity,
                                   entry.identity.n_min, n_hi, gate);
        });
    }
    auto reports = detail::run_tasks(tasks, parallelism);
    std::sort(reports.begin(), reports.end(), [](const VerifyReport& a, const VerifyReport& b) {
        return natural_id_less(a.id, b.id);
    });
    return reports;
}

namespace detail {

struct ModeScan {
    bool has_sqrt = false;
    bool has_x = false;

    void scan(const idl::ExprPtr& e) {
        using namespace idl;
        if (std::holds_alternative<VarX>(e->node)) {
            has_x = true;
        } else if (auto* v = std::get_if<SqrtExpr>(&e->node)) {
            has_sqrt = true;
            scan(v->radicand);
        } else if (auto* v = std::get_if<SeqRef>(&e->node)) {
            scan(v->arg);
        } else if (auto* v = std::get_if<SumExpr>(&e->node)) {
            scan(v->body);
        } else if (auto* v = std::get_if<PowExpr>(&e->node)) {
            scan(v->base);
        } else if (auto* v = std::get_if<NegExpr>(&e->node)) {
            scan(v->a);
        } else if (auto* v = std::get_if<BinaryExpr>(&e->node)) {
            scan(v->lhs);
            scan(v->rhs);
        }
    }
};

}  // namespace detail

inline VerifyMode infer_mode(const idl::Identity& identity) {
    detail::ModeScan scan;
    scan.scan(identity.lhs);
    scan.scan(identity.rhs);
    if (scan.has_sqrt)
        return VerifyMode::SymbolicExt;
    if (scan.has_x)
        return VerifyMode::SymbolicPoly;
    return VerifyMode::Numeric;
}

inline bool all_gated_pass(const std::vector<VerifyReport>& reports) {
    for (const auto& r : reports)
        if (r.gate && r.status != "pass")
            return false;
    return true;
}

// ----------------------------------------------------------------------
// Report serialization
// ----------------------------------------------------------------------

struct RunMeta {
    long order = 0;  // functional-equation truncation order used in this run
    long n_hi = 0;
    int parallelism = 1;
    std::string timestamp;  // ISO-8601 UTC; confined to run metadata
};

inline std::string utc_timestamp_now() {
    const std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

/// Structured report: run metadata, then one record per entry with exactly
/// the fields id, anchor, mode, n_range, status, first_failing_n, residual,
/// wall_time_ms.
inline nlohmann::ordered_json report_to_json(const RunMeta& meta,
                                             const std::vector<VerifyReport>& reports) {
    nlohmann::ordered_json doc;
    doc["run"] = {{"order", meta.order},
                  {"n_hi", meta.n_hi},
                  {"parallelism", meta.parallelism},
                  {"timestamp", meta.timestamp}};
    doc["entries"] = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json e;
        e["id"] = r.id;
        e["anchor"] = r.anchor;
        e["mode"] = r.mode;
        e["n_range"] = {r.n_lo, r.n_hi};
        e["status"] = r.status;
        if (r.first_failing_n)
            e["first_failing_n"] = *r.first_failing_n;
        else
            e["first_failing_n"] = nullptr;
        e["residual"] = r.residual;
        e["wall_time_ms"] = r.wall_time_ms;
        doc["entries"].push_back(std::move(e));
    }
    return doc;
}

/// Text rendering, one line per entry; timing is deliberately omitted so
/// output is byte-identical across runs and parallelism settings.
inline std::string report_to_text(const std::vector<VerifyReport>& reports) {
    std::string out;
    for (const auto& r : reports) {
        char head[160];
        std::snprintf(head, sizeof head, "%-5s %-18s %-20s n=[%ld,%ld]",
                      r.status == "pass" ? "PASS" : (r.status == "fail" ? "FAIL" : "ERROR"),
                      r.id.c_str(), r.mode.c_str(), r.n_lo, r.n_hi);
        out += head;
        if (r.vacuous)
            out += "  (vacuous: empty range)";
        if (r.first_failing_n)
            out += "  first_failing_n=" + std::to_string(*r.first_failing_n);
        if (!r.residual.empty())
            out += "  residual: " + r.residual;
        out += "\n";
    }
    long passed = 0, gated = 0;
    for (const auto& r : reports) {
        if (!r.gate)
            continue;
        ++gated;
        if (r.status == "pass")
            ++passed;
    }
    out += std::to_string(passed) + "/" + std::to_string(gated) + " gated entries passed";
    const long extra = static_cast<long>(reports.size()) - gated;
    if (extra > 0)
        out += " (+" + std::to_string(extra) + " as-printed variants reported)";
    out += "\n";
    return out;
}

}  // namespace chebfib::catalog
