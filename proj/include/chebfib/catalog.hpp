#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chebfib/idl/parser.hpp"

namespace chebfib::catalog {

enum class VerifyMode { SymbolicPoly, SymbolicExt, Numeric, FunctionalEquation };

inline const char* to_string(VerifyMode m) {
    switch (m) {
        case VerifyMode::SymbolicPoly: return "symbolic-poly";
        case VerifyMode::SymbolicExt: return "symbolic-ext";
        case VerifyMode::Numeric: return "numeric";
        case VerifyMode::FunctionalEquation: return "functional-equation";
    }
    return "?";
}

inline VerifyMode mode_from_string(const std::string& s) {
    if (s == "symbolic-poly") return VerifyMode::SymbolicPoly;
    if (s == "symbolic-ext") return VerifyMode::SymbolicExt;
    if (s == "numeric") return VerifyMode::Numeric;
    if (s == "functional-equation") return VerifyMode::FunctionalEquation;
    throw std::domain_error("unknown verify mode: " + s);
}

/// One catalog identity. idl_text is the canonical statement; where the
/// source misprints the identity, idl_text carries the corrected form and
/// verbatim_idl the as-printed one (kept for reporting, excluded from the
/// pass/fail gate).
struct CatalogEntry {
    std::string id;
    std::string anchor;
    VerifyMode mode;
    std::string idl_text;
    std::string verbatim_idl;  // empty when the printed form is the canonical one
    long n_min = 0;

    bool has_verbatim_variant() const { return !verbatim_idl.empty(); }
    idl::Identity statement() const { return idl::parse_identity(idl_text); }
    idl::Identity verbatim_statement() const { return idl::parse_identity(verbatim_idl); }
};

/// Numeric-aware id ordering: digit runs compare as integers, so
/// THM3.2 < THM3.10 and COR7 < COR10.
inline bool natural_id_less(const std::string& a, const std::string& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
        const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
        if (da && db) {
            size_t ei = i, ej = j;
            while (ei < a.size() && std::isdigit(static_cast<unsigned char>(a[ei])))
                ++ei;
            while (ej < b.size() && std::isdigit(static_cast<unsigned char>(b[ej])))
                ++ej;
            const std::string na = a.substr(i, ei - i), nb = b.substr(j, ej - j);
            // compare as integers: longer (trimmed) run wins
            const std::string ta = na.substr(na.find_first_not_of('0') == std::string::npos
                                                 ? na.size() - 1
                                                 : na.find_first_not_of('0'));
            const std::string tb = nb.substr(nb.find_first_not_of('0') == std::string::npos
                                                 ? nb.size() - 1
                                                 : nb.find_first_not_of('0'));
            if (ta.size() != tb.size())
                return ta.size() < tb.size();
            if (ta != tb)
                return ta < tb;
            i = ei;
            j = ej;
            continue;
        }
        if (a[i] != b[j])
            return a[i] < b[j];
        ++i;
        ++j;
    }
    return a.size() - i < b.size() - j;
}

namespace detail {

inline std::vector<CatalogEntry> build_entries() {
    std::vector<CatalogEntry> es;
    auto add = [&es](std::string id, std::string anchor, VerifyMode mode, std::string text,
                     std::string verbatim = "") {
        CatalogEntry e;
        e.id = std::move(id);
        e.anchor = std::move(anchor);
        e.mode = mode;
        e.idl_text = std::move(text);
        e.verbatim_idl = std::move(verbatim);
        e.n_min = idl::parse_identity(e.idl_text).n_min;
        es.push_back(std::move(e));
    };
    const VerifyMode P = VerifyMode::SymbolicPoly;
    const VerifyMode E = VerifyMode::SymbolicExt;
    const VerifyMode N = VerifyMode::Numeric;

    // ---- Theorem 1: Fibonacci from Chebyshev convolutions ----
    add("THM1.1", "Theorem 1, identity 1 of 2", P,
        "F(n,x) = T(n-1,x) - sum(k,1,n-2,(x*T(n-1-k,x)-2*T(n-2-k,x))*F(k,x)) for n >= 1");
    add("THM1.2", "Theorem 1, identity 2 of 2", P,
        "F(n,x) + x*F(n-1,x) = U(n-1,x) - sum(k,1,n-2,(x*U(n-1-k,x)-2*U(n-2-k,x))*F(k,x)) "
        "for n >= 1");

    // ---- Theorem 2: odd/even indexed pairings ----
    add("THM2.1", "Theorem 2, identity 1 of 4", P,
        "x*(F(2*n+1,x) - F(2*n-1,x)) = T(2*n+1,x) - T(2*n-1,x) - "
        "(3*x^2-4)*sum(k,0,n-1,F(2*k+1,x)*T(2*(n-k)-1,x)) for n >= 1");
    add("THM2.2", "Theorem 2, identity 2 of 4", P,
        "2*x*F(2*n+1,x) = U(2*n+1,x) - U(2*n-1,x) - "
        "(3*x^2-4)*sum(k,0,n-1,F(2*k+1,x)*U(2*(n-k)-1,x)) for n >= 1");
    add("THM2.3", "Theorem 2, identity 3 of 4", P,
        "F(2*n,x) - (2*x^2-1)*F(2*n-2,x) = x*T(2*n-2,x) - "
        "(3*x^2-4)*sum(k,1,n-1,F(2*k,x)*T(2*(n-k-1),x)) for n >= 1");
    add("THM2.4", "Theorem 2, identity 4 of 4", P,
        "F(2*n,x) + F(2*n-2,x) = x*U(2*n-2,x) - "
        "(3*x^2-4)*sum(k,1,n-1,F(2*k,x)*U(2*(n-k-1),x)) for n >= 1");

    // ---- Theorem 3: mixed-index identities ----
    add("THM3.1", "Theorem 3, identity 1 of 12", P,
        "x*F(n,x) + (4*x^3-x^2-3*x)*F(n-1,x) = T(2*n-1,x) - "
        "sum(k,1,n-2,((4*x^2-x-2)*T(2*(n-k)-1,x)-2*T(2*(n-k)-3,x))*F(k,x)) for n >= 1");
    add("THM3.2", "Theorem 3, identity 2 of 12", P,
        "2*x*F(n,x) + (8*x^3-2*x^2-4*x)*F(n-1,x) = U(2*n-1,x) - "
        "sum(k,1,n-2,((4*x^2-x-2)*U(2*(n-k)-1,x)-2*U(2*(n-k)-3,x))*F(k,x)) for n >= 1");
    add("THM3.3", "Theorem 3, identity 3 of 12", P,
        "F(n,x) + (2*x^2-x-1)*F(n-1,x) = T(2*n-2,x) - "
        "sum(k,1,n-2,((4*x^2-x-2)*T(2*(n-k-1),x)-2*T(2*(n-k-2),x))*F(k,x)) for n >= 1");
    add("THM3.4", "Theorem 3, identity 4 of 12", P,
        "F(n,x) + (4*x^2-x-1)*F(n-1,x) = U(2*n-2,x) - "
        "sum(k,1,n-2,((4*x^2-x-2)*U(2*(n-k-1),x)-2*U(2*(n-k-2),x))*F(k,x)) for n >= 1");
    add("THM3.5", "Theorem 3, identity 5 of 12", P,
        "F(2*n+1,x) - (2*x^2-1)*F(2*n-1,x) = T(2*n,x) - T(2*n-2,x) - "
        "(3*x^2-4)*sum(k,0,n-1,T(2*(n-k-1),x)*F(2*k+1,x)) for n >= 1");
    add("THM3.6", "Theorem 3, identity 6 of 12", P,
        "F(2*n+1,x) + F(2*n-1,x) = U(2*n,x) - U(2*n-2,x) - "
        "(3*x^2-4)*sum(k,0,n-1,U(2*(n-k-1),x)*F(2*k+1,x)) for n >= 1");
    add("THM3.7", "Theorem 3, identity 7 of 12", P,
        "x^2*F(2*n-1,x) = x*T(2*n-1,x) - (3*x^2-4)*sum(k,1,n-1,T(2*(n-k)-1,x)*F(2*k,x)) "
        "for n >= 1");
    add("THM3.8", "Theorem 3, identity 8 of 12", P,
        "2*x*F(2*n,x) = x*U(2*n-1,x) - (3*x^2-4)*sum(k,1,n-1,U(2*(n-k)-1,x)*F(2*k,x)) "
        "for n >= 1");
    add("THM3.9", "Theorem 3, identity 9 of 12 (second term read as F_{2n-1}(x))", P,
        "F(2*n+1,x) - x*F(2*n-1,x) = T(n,x) - T(n-1,x) + "
        "(x^2-2*x+2)*sum(k,0,n-1,T(n-1-k,x)*F(2*k+1,x)) for n >= 1");
    add("THM3.10", "Theorem 3, identity 10 of 12", P,
        "F(2*n+1,x) = U(n,x) - U(n-1,x) + (x^2-2*x+2)*sum(k,0,n-1,U(n-1-k,x)*F(2*k+1,x)) "
        "for n >= 1");
    add("THM3.11", "Theorem 3, identity 11 of 12", P,
        "F(2*n,x) - x*F(2*n-2,x) = x*T(n-1,x) + (x^2-2*x+2)*sum(k,1,n-1,T(n-1-k,x)*F(2*k,x)) "
        "for n >= 1");
    add("THM3.12", "Theorem 3, identity 12 of 12", P,
        "F(2*n,x) = x*U(n-1,x) + (x^2-2*x+2)*sum(k,1,n-1,U(n-1-k,x)*F(2*k,x)) for n >= 1");

    // ---- Balancing corollary (after Theorem 3) ----
    add("COR7.1", "Balancing corollary, identity 1 of 7", P,
        "F(n,3*x) = C(n-1,x) - sum(k,1,n-2,(3*x*C(n-k-1,x)-2*C(n-k-2,x))*F(k,3*x)) for n >= 1");
    add("COR7.2", "Balancing corollary, identity 2 of 7", P,
        "F(n,3*x) + 3*x*F(n-1,3*x) = B(n,x) - "
        "sum(k,1,n-2,(3*x*B(n-k,x)-2*B(n-k-1,x))*F(k,3*x)) for n >= 1");
    add("COR7.3", "Balancing corollary, identity 3 of 7 (corrected sum bound; printed k=1 fails)",
        P,
        "9*x^2*F(2*n,3*x) = C(2*n+1,x) - C(2*n-1,x) - "
        "(27*x^2-4)*sum(k,0,n-1,C(2*(n-k)-1,x)*F(2*k+1,3*x)) for n >= 1",
        "9*x^2*F(2*n,3*x) = C(2*n+1,x) - C(2*n-1,x) - "
        "(27*x^2-4)*sum(k,1,n-1,C(2*(n-k)-1,x)*F(2*k+1,3*x)) for n >= 1");
    add("COR7.4", "Balancing corollary, identity 4 of 7 (passes as printed)", P,
        "6*x*F(2*n+1,3*x) = B(2*(n+1),x) - B(2*n,x) - "
        "(27*x^2-4)*sum(k,0,n-1,B(2*(n-k),x)*F(2*k+1,3*x)) for n >= 1");
    add("COR7.5", "Balancing corollary, identity 5 of 7", P,
        "F(2*n,3*x) + F(2*n-2,3*x) = 3*x*B(2*n-1,x) - "
        "(27*x^2-4)*sum(k,1,n-1,B(2*(n-k)-1,x)*F(2*k,3*x)) for n >= 1");
    add("COR7.6", "Balancing corollary, identity 6 of 7", P,
        "9*x^2*F(2*n-1,3*x) = 3*x*C(2*n-1,x) - "
        "(27*x^2-4)*sum(k,1,n-1,C(2*(n-k)-1,x)*F(2*k,3*x)) for n >= 1");
    add("COR7.7",
        "Balancing corollary, identity 7 of 7 (corrected coefficient 3x; printed x fails)", P,
        "6*x*F(2*n,3*x) = 3*x*B(2*n,x) - (27*x^2-4)*sum(k,1,n-1,B(2*(n-k),x)*F(2*k,3*x)) "
        "for n >= 1",
        "6*x*F(2*n,3*x) = x*B(2*n,x) - (27*x^2-4)*sum(k,1,n-1,B(2*(n-k),x)*F(2*k,3*x)) "
        "for n >= 1");

    // ---- Theorem 4: binomial identities with one radical weight ----
    add("THM4.1", "Theorem 4, identity 1 of 2 (corrected RHS bound k<=n; printed n-1 fails)", E,
        "sum(k,0,n-1,binom(n,k)*sqrt(x^2+4)^(n-1-k)*(1-sign(n-k))*T(k,x)) = "
        "sum(k,1,n,binom(n,k)*2^(k-1)*sqrt(x^2-1)^(n-k)*(1+sign(n-k))*F(k,x)) for n >= 0",
        "sum(k,0,n-1,binom(n,k)*sqrt(x^2+4)^(n-1-k)*(1-sign(n-k))*T(k,x)) = "
        "sum(k,1,n-1,binom(n,k)*2^(k-1)*sqrt(x^2-1)^(n-k)*(1+sign(n-k))*F(k,x)) for n >= 0");
    add("THM4.2", "Theorem 4, identity 2 of 2 (corrected RHS bound k<=n; printed n-1 fails)", E,
        "sum(k,0,n-1,binom(n,k)*sqrt(x^2+4)^(n-1-k)*(1-sign(n-k))*U(k,x)) = "
        "sum(k,1,n,binom(n,k)*2^(k-1)*sqrt(x^2-1)^(n-1-k)*(alpha-sign(n-k)*beta)*F(k,x)) "
        "for n >= 0",
        "sum(k,0,n-1,binom(n,k)*sqrt(x^2+4)^(n-1-k)*(1-sign(n-k))*U(k,x)) = "
        "sum(k,1,n-1,binom(n,k)*2^(k-1)*sqrt(x^2-1)^(n-1-k)*(alpha-sign(n-k)*beta)*F(k,x)) "
        "for n >= 0");

    // ---- Theorem 5: odd-indexed pairings with scaled weights ----
    add("THM5.1", "Theorem 5, identity 1 of 2", E,
        "x*sum(k,0,n,binom(n,k)*(sqrt(x^2+4)*(2*x^3-x)/(x^2+2))^(n-1-k)*"
        "(rho-sign(n-k)*sigma)*T(2*k+1,x)) = "
        "(2*x*sqrt(x^2-1))^(n-1)*sum(k,0,n,binom(n,k)*"
        "((2*x^2-1)/((x^3+2*x)*sqrt(x^2-1)))^(k-1)*(alpha+sign(n-k)*beta)*F(2*k+1,x)) "
        "for n >= 0");
    add("THM5.2", "Theorem 5, identity 2 of 2", E,
        "(1/2)*sum(k,0,n,binom(n,k)*(sqrt(x^2+4)*(2*x^3-x)/(x^2+2))^(n-1-k)*"
        "(rho-sign(n-k)*sigma)*U(2*k+1,x)) = "
        "(2*x*sqrt(x^2-1))^(n-2)*sum(k,0,n,binom(n,k)*"
        "((2*x^2-1)/((x^3+2*x)*sqrt(x^2-1)))^(k-1)*(alpha^2-sign(n-k)*beta^2)*F(2*k+1,x)) "
        "for n >= 0");

    // ---- Theorem 6: even-indexed pairings with scaled weights ----
    add("THM6.1", "Theorem 6, identity 1 of 2", E,
        "x*sum(k,0,n-1,binom(n,k)*(sqrt(x^2+4)*(2*x^3-x)/(x^2+2))^(n-k-1)*"
        "(1-sign(n-k))*T(2*k,x)) = "
        "(2*x*sqrt(x^2-1))^(n-1)*sum(k,1,n,binom(n,k)*"
        "((2*x^2-1)/((x^3+2*x)*sqrt(x^2-1)))^(k-1)*(1+sign(n-k))*F(2*k,x)) for n >= 0");
    add("THM6.2", "Theorem 6, identity 2 of 2", E,
        "(1/2)*sum(k,0,n,binom(n,k)*(sqrt(x^2+4)*(2*x^3-x)/(x^2+2))^(n-k-1)*"
        "(1-sign(n-k))*U(2*k,x)) = "
        "(2*x*sqrt(x^2-1))^(n-2)*sum(k,1,n,binom(n,k)*"
        "((2*x^2-1)/((x^3+2*x)*sqrt(x^2-1)))^(k-1)*(alpha-sign(n-k)*beta)*F(2*k,x)) "
        "for n >= 0");

    // ---- Theorem 7: twelve further binomial relations ----
    add("THM7.01", "Theorem 7, identity 1 of 12", E,
        "sum(k,0,n-1,binom(n,k)*(sqrt(x^2+4)*(2*x^2-1)/x)^(n-k-1)*(1-sign(n-k))*T(2*k,x)) = "
        "sum(k,1,n,binom(n,k)*((4*x^2-2)/x)^(k-1)*(2*x*sqrt(x^2-1))^(n-k)*"
        "(1+sign(n-k))*F(k,x)) for n >= 0");
    add("THM7.02", "Theorem 7, identity 2 of 12", E,
        "sum(k,0,n,binom(n,k)*(sqrt(x^2+4)*(2*x^2-1)/x)^(n-k-1)*(1-sign(n-k))*U(2*k,x)) = "
        "2*x*sum(k,1,n,binom(n,k)*((4*x^2-2)/x)^(k-1)*(2*x*sqrt(x^2-1))^(n-k-1)*"
        "(alpha-sign(n-k)*beta)*F(k,x)) for n >= 0");
    add("THM7.03", "Theorem 7, identity 3 of 12", E,
        "sum(k,0,n,binom(n,k)*(sqrt(x^2+4)*(2*x^2-1)/x)^(n-k-1)*(1-sign(n-k))*T(2*k+1,x)) = "
        "sum(k,1,n,binom(n,k)*((4*x^2-2)/x)^(k-1)*(2*x*sqrt(x^2-1))^(n-k)*"
        "(alpha+sign(n-k)*beta)*F(k,x)) for n >= 0");
    add("THM7.04", "Theorem 7, identity 4 of 12 (corrected coefficient 2x; printed x fails)", E,
        "sum(k,0,n,binom(n,k)*(sqrt(x^2+4)*(2*x^2-1)/x)^(n-k-1)*(1-sign(n-k))*U(2*k+1,x)) = "
        "2*x*sum(k,1,n,binom(n,k)*((4*x^2-2)/x)^(k-1)*(2*x*sqrt(x^2-1))^(n-k-1)*"
        "(alpha^2-sign(n-k)*beta^2)*F(k,x)) for n >= 0",
        "sum(k,0,n,binom(n,k)*(sqrt(x^2+4)*(2*x^2-1)/x)^(n-k-1)*(1-sign(n-k))*U(2*k+1,x)) = "
        "x*sum(k,1,n,binom(n,k)*((4*x^2-2)/x)^(k-1)*(2*x*sqrt(x^2-1))^(n-k-1)*"
        "(alpha^2-sign(n-k)*beta^2)*F(k,x)) for n >= 0");
    add("THM7.05", "Theorem 7, identity 5 of 12", E,
        "x*sum(k,0,n,binom(n,k)*((x^2+2)/(2*x))^(k)*(x*sqrt(x^2+4)/2)^(n-k-1)*"
        "(rho-sign(n-k)*sigma)*T(k,x)) = "
        "sum(k,0,n,binom(n,k)*((x^2+2)*sqrt(x^2-1)/(2*x))^(n-k)*(1+sign(n-k))*F(2*k+1,x)) "
        "for n >= 0");
    add("THM7.06",
        "Theorem 7, identity 6 of 12 (corrected weight denominator 2; printed /x fails)", E,
        "x*sum(k,0,n,binom(n,k)*((x^2+2)/(2*x))^(k-1)*(x*sqrt(x^2+4)/2)^(n-k-1)*"
        "(rho-sign(n-k)*sigma)*U(k,x)) = "
        "sum(k,0,n,binom(n,k)*((x^2+2)*sqrt(x^2-1)/(2*x))^(n-k-1)*"
        "(alpha-sign(n-k)*beta)*F(2*k+1,x)) for n >= 0",
        "x*sum(k,0,n,binom(n,k)*((x^2+2)/(2*x))^(k-1)*(x*sqrt(x^2+4)/x)^(n-k-1)*"
        "(rho-sign(n-k)*sigma)*U(k,x)) = "
        "sum(k,0,n,binom(n,k)*((x^2+2)*sqrt(x^2-1)/(2*x))^(n-k-1)*"
        "(alpha-sign(n-k)*beta)*F(2*k+1,x)) for n >= 0");
    add("THM7.07",
        "Theorem 7, identity 7 of 12 (corrected leading factor x, as in identity 5; "
        "printed form fails)",
        E,
        "x*sum(k,0,n,binom(n,k)*((x^2+2)/(2*x))^(k)*(x*sqrt(x^2+4)/2)^(n-k-1)*"
        "(1-sign(n-k))*T(k,x)) = "
        "sum(k,1,n,binom(n,k)*((x^2+2)*sqrt(x^2-1)/(2*x))^(n-k)*(1+sign(n-k))*F(2*k,x)) "
        "for n >= 0",
        "sum(k,0,n,binom(n,k)*((x^2+2)/(2*x))^(k)*(x*sqrt(x^2+4)/2)^(n-k-1)*"
        "(1-sign(n-k))*T(k,x)) = "
        "sum(k,1,n,binom(n,k)*((x^2+2)*sqrt(x^2-1)/(2*x))^(n-k)*(1+sign(n-k))*F(2*k,x)) "
        "for n >= 0");
    add("THM7.08", "Theorem 7, identity 8 of 12 (corrected conjugate sign; printed + fails)", E,
        "x*sum(k,0,n,binom(n,k)*((x^2+2)/(2*x))^(k-1)*(x*sqrt(x^2+4)/2)^(n-k-1)*"
        "(1-sign(n-k))*U(k,x)) = "
        "sum(k,0,n,binom(n,k)*((x^2+2)*sqrt(x^2-1)/(2*x))^(n-k-1)*"
        "(alpha-sign(n-k)*beta)*F(2*k,x)) for n >= 0",
        "x*sum(k,0,n,binom(n,k)*((x^2+2)/(2*x))^(k-1)*(x*sqrt(x^2+4)/2)^(n-k-1)*"
        "(1-sign(n-k))*U(k,x)) = "
        "sum(k,0,n,binom(n,k)*((x^2+2)*sqrt(x^2-1)/(2*x))^(n-k-1)*"
        "(alpha+sign(n-k)*beta)*F(2*k,x)) for n >= 0");
    add("THM7.09",
        "Theorem 7, identity 9 of 12 (corrected weight exponent n-k-1, as in identity 11; "
        "printed n-k fails)",
        E,
        "x*sum(k,0,n,binom(n,k)*((x^2+2)/(4*x^2-2))^(k)*(x*sqrt(x^2+4)/2)^(n-k-1)*"
        "(1-sign(n-k))*T(2*k+1,x)) = "
        "sum(k,0,n,binom(n,k)*(x*(x^2+2)*sqrt(x^2-1)/(2*x^2-1))^(n-k)*"
        "(alpha+sign(n-k)*beta)*F(2*k,x)) for n >= 0",
        "x*sum(k,0,n,binom(n,k)*((x^2+2)/(4*x^2-2))^(k)*(x*sqrt(x^2+4)/2)^(n-k)*"
        "(1-sign(n-k))*T(2*k+1,x)) = "
        "sum(k,0,n,binom(n,k)*(x*(x^2+2)*sqrt(x^2-1)/(2*x^2-1))^(n-k)*"
        "(alpha+sign(n-k)*beta)*F(2*k,x)) for n >= 0");
    add("THM7.10", "Theorem 7, identity 10 of 12", E,
        "sum(k,0,n,binom(n,k)*((x^2+2)/(4*x^2-2))^(k-1)*(x*sqrt(x^2+4)/2)^(n-k-1)*"
        "(1-sign(n-k))*U(2*k+1,x)) = "
        "2*sum(k,0,n,binom(n,k)*(x*(x^2+2)*sqrt(x^2-1)/(2*x^2-1))^(n-k-1)*"
        "(alpha^2-sign(n-k)*beta^2)*F(2*k,x)) for n >= 0");
    add("THM7.11", "Theorem 7, identity 11 of 12", E,
        "x*sum(k,0,n,binom(n,k)*((x^2+2)/(4*x^2-2))^(k)*(x*sqrt(x^2+4)/2)^(n-k-1)*"
        "(rho-sign(n-k)*sigma)*T(2*k,x)) = "
        "sum(k,0,n,binom(n,k)*(x*(x^2+2)*sqrt(x^2-1)/(2*x^2-1))^(n-k)*"
        "(1+sign(n-k))*F(2*k+1,x)) for n >= 0");
    add("THM7.12", "Theorem 7, identity 12 of 12", E,
        "sum(k,0,n,binom(n,k)*((x^2+2)/(4*x^2-2))^(k-1)*(x*sqrt(x^2+4)/2)^(n-k-1)*"
        "(rho-sign(n-k)*sigma)*U(2*k,x)) = "
        "2*sum(k,0,n,binom(n,k)*(x*(x^2+2)*sqrt(x^2-1)/(2*x^2-1))^(n-k-1)*"
        "(alpha-sign(n-k)*beta)*F(2*k+1,x)) for n >= 0");

    // ---- Numeric corollary: 4^n family from the value 3/2 ----
    add("COR8.1", "Numeric corollary (4^n family), identity 1 of 6", N,
        "15*Fib(2*(2*n-1)) = 5*4^(n) - 20*4^(-n) + "
        "11*sum(k,1,n-1,(4^(k)-4^(-k))*Fib(2*(2*n-2*k-1))) for n >= 1");
    add("COR8.2", "Numeric corollary (4^n family), identity 2 of 6", N,
        "15*Fib(4*n) = 12*(4^(n)-4^(-n)) + 11*sum(k,1,n-1,(4^(k)-4^(-k))*Fib(4*(n-k))) "
        "for n >= 1");
    add("COR8.3", "Numeric corollary (4^n family), identity 3 of 6", N,
        "15*Fib(2*n) = 4*(4^(n)-4^(-n)) - 5*sum(k,1,n-1,(4^(k)-4^(-k))*Fib(2*(n-k))) "
        "for n >= 1");
    add("COR8.4", "Numeric corollary (4^n family), identity 4 of 6", N,
        "15*Luc(4*(n-1)) = 4^(n) + 104*4^(-n) + "
        "11*sum(k,1,n-1,(4^(k)-4^(-k))*Luc(4*(n-k-1))) for n >= 1");
    add("COR8.5",
        "Numeric corollary (4^n family), identity 5 of 6 (corrected coefficient 15; "
        "printed 5 fails)",
        N,
        "15*Luc(2*(2*n-1)) = 9*4^(n) + 36*4^(-n) + "
        "11*sum(k,1,n-1,(4^(k)-4^(-k))*Luc(2*(2*n-2*k-1))) for n >= 1",
        "5*Luc(2*(2*n-1)) = 9*4^(n) + 36*4^(-n) + "
        "11*sum(k,1,n-1,(4^(k)-4^(-k))*Luc(2*(2*n-2*k-1))) for n >= 1");
    add("COR8.6", "Numeric corollary (4^n family), identity 6 of 6", N,
        "3*Luc(2*n-2) = 4^(n) + 8*4^(-n) - sum(k,0,n-1,(4^(k)-4^(-k))*Luc(2*(n-k-1))) "
        "for n >= 1");

    // ---- Numeric corollary: Fibonacci/Lucas convolutions ----
    add("COR9.1", "Numeric corollary (convolutions), identity 1 of 4", N,
        "11*sum(k,1,n,Fib(4*k)*Luc(6*(n-k))) = 3*Luc(6*n) - 2*Fib(4*n+4) + 18*Fib(4*n) "
        "for n >= 0");
    add("COR9.2", "Numeric corollary (convolutions), identity 2 of 4", N,
        "11*sum(k,1,n,Fib(4*k)*Luc(6*(n-k)+3)) = 3*Luc(6*n+3) - 4*Fib(4*n+4) - 4*Fib(4*n) "
        "for n >= 0");
    add("COR9.3", "Numeric corollary (convolutions), identity 3 of 4", N,
        "11*sum(k,0,n,Luc(4*k+2)*Fib(6*(n-k)+3)) = 3*(Fib(6*n+9)-Fib(6*n+3)) - "
        "2*(Luc(4*n+6)-Luc(4*n+2)) for n >= 0");
    add("COR9.4", "Numeric corollary (convolutions), identity 4 of 4", N,
        "11*sum(k,0,n,Luc(4*k+2)*Fib(6*(n-k)+6)) = 3*(Fib(6*n+12)-Fib(6*n+6)) - 8*Luc(4*n+6) "
        "for n >= 0");

    // ---- Numeric corollary: F_{3n} from Chebyshev values at 4 ----
    add("COR10.1", "Numeric corollary (values at 4), identity 1 of 2", N,
        "Fib(3*n) = 2*T(n-1,4) - sum(k,1,n-2,(4*T(n-1-k,4)-2*T(n-2-k,4))*Fib(3*k)) for n >= 1");
    add("COR10.2", "Numeric corollary (values at 4), identity 2 of 2", N,
        "Fib(3*n) + 4*Fib(3*n-3) = 2*U(n-1,4) - "
        "sum(k,1,n-2,(4*U(n-1-k,4)-2*U(n-2-k,4))*Fib(3*k)) for n >= 1");

    std::sort(es.begin(), es.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        return natural_id_less(a.id, b.id);
    });
    return es;
}

}  // namespace detail

/// The 55 identity entries in deterministic id order.
inline const std::vector<CatalogEntry>& entries() {
    static const std::vector<CatalogEntry> es = detail::build_entries();
    return es;
}

/// Entries whose id starts with the given prefix (empty prefix = all).
inline std::vector<CatalogEntry> entries_with_prefix(const std::string& prefix) {
    std::vector<CatalogEntry> out;
    for (const auto& e : entries())
        if (e.id.rfind(prefix, 0) == 0)
            out.push_back(e);
    return out;
}

inline std::optional<CatalogEntry> find_entry(const std::string& id) {
    for (const auto& e : entries())
        if (e.id == id)
            return e;
    return std::nullopt;
}

/// The whole identity catalog as an .idl document, ids and anchors carried
/// in #@ metadata comments; re-verifying the dump reproduces the built-in
/// reports.
inline std::string catalog_idl_text() {
    std::string out;
    out += "# Chebyshev-Fibonacci identity catalog, identity-description language dump.\n";
    out += "# Verify with: chebfib verify <this file> --n-max 25\n";
    out += "radicals: x^2 - 1 -> w1, x^2 + 4 -> w2\n\n";
    for (const auto& e : entries()) {
        out += "#@ id " + e.id + "\n";
        out += "#@ anchor " + e.anchor + "\n";
        out += "#@ mode " + std::string(to_string(e.mode)) + "\n";
        out += e.idl_text + "\n\n";
        if (e.has_verbatim_variant()) {
            out += "#@ id " + e.id + ".verbatim\n";
            out += "#@ anchor " + e.anchor + " [as printed]\n";
            out += "#@ mode " + std::string(to_string(e.mode)) + "\n";
            out += "#@ gate false\n";
            out += e.verbatim_idl + "\n\n";
        }
    }
    return out;
}

}  // namespace chebfib::catalog
