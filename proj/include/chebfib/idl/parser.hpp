#pragma once

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chebfib/idl/ast.hpp"

namespace chebfib::idl {

class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ")"),
          msg_(msg),
          line_(line),
          col_(col) {}
    const std::string& message() const { return msg_; }
    int line() const { return line_; }
    int column() const { return col_; }

  private:
    std::string msg_;
    int line_;
    int col_;
};

namespace detail {

struct Token {
    enum class Kind { Ident, Int, Sym, End };
    Kind kind = Kind::End;
    std::string text;
    long long value = 0;
    int line = 1;
    int col = 1;
};

class Lexer {
  public:
    Lexer(const std::string& src, int start_line = 1) : src_(src), line_(start_line) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, tok_.line, tok_.col);
    }

  private:
    void advance() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '#') {  // comment to end of line
                while (pos_ < src_.size() && src_[pos_] != '\n')
                    ++pos_;
            } else if (c == '\n') {
                ++pos_;
                ++line_;
                col_ = 1;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
                ++col_;
            } else {
                break;
            }
        }
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= src_.size()) {
            tok_ = Token{Token::Kind::End, "", 0, line_, col_};
            return;
        }
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                consume();
            const std::string text = src_.substr(start, pos_ - start);
            long long v = 0;
            try {
                v = std::stoll(text);
            } catch (const std::exception&) {
                throw ParseError("integer literal out of range: " + text, tok_.line, tok_.col);
            }
            tok_ = Token{Token::Kind::Int, text, v, tok_.line, tok_.col};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                consume();
            tok_ = Token{Token::Kind::Ident, src_.substr(start, pos_ - start), 0, tok_.line,
                         tok_.col};
            return;
        }
        // two-character symbol ">=" and "->"
        if ((c == '>' || c == '-') && pos_ + 1 < src_.size() &&
            ((c == '>' && src_[pos_ + 1] == '=') || (c == '-' && src_[pos_ + 1] == '>'))) {
            std::string text = src_.substr(pos_, 2);
            consume();
            consume();
            tok_ = Token{Token::Kind::Sym, text, 0, tok_.line, tok_.col};
            return;
        }
        static const std::string singles = "+-*/^(),=";
        if (singles.find(c) != std::string::npos) {
            consume();
            tok_ = Token{Token::Kind::Sym, std::string(1, c), 0, tok_.line, tok_.col};
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
    }

    void consume() {
        ++pos_;
        ++col_;
    }

    std::string src_;
    size_t pos_ = 0;
    int line_;
    int col_ = 1;
    Token tok_;
};

}  // namespace detail

/// One-pass recursive-descent parser for the identity language.
class Parser {
  public:
    explicit Parser(const std::string& text, int start_line = 1) : lex_(text, start_line) {}

    /// identity := expr "=" expr "for" "n" ">=" integer
    Identity parse_identity(RadicalBindings bindings = {}) {
        Identity id;
        id.bindings = std::move(bindings);
        id.lhs = parse_expr();
        expect_sym("=");
        id.rhs = parse_expr();
        expect_ident("for");
        expect_ident("n");
        expect_sym(">=");
        id.n_min = parse_signed_int();
        expect_end();
        return id;
    }

    ExprPtr parse_expr_only() {
        ExprPtr e = parse_expr();
        expect_end();
        return e;
    }

    /// Plain polynomial in x (used by the radicals file directive).
    Poly parse_poly_only() {
        ExprPtr e = parse_expr();
        return fold_poly(e);
    }

    static Poly fold_poly(const ExprPtr& e);

  private:
    using Token = detail::Token;

    ExprPtr parse_expr() {
        ExprPtr lhs = parse_term();
        while (peek_is_sym("+") || peek_is_sym("-")) {
            const char op = lex_.next().text[0];
            ExprPtr rhs = parse_term();
            lhs = make_expr(BinaryExpr{op, std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_factor();
        while (peek_is_sym("*") || peek_is_sym("/")) {
            const char op = lex_.next().text[0];
            ExprPtr rhs = parse_factor();
            if (op == '/') {
                // Fold literal integer quotients into exact rationals.
                auto* ln = std::get_if<IntConst>(&lhs->node);
                auto* rn = std::get_if<IntConst>(&rhs->node);
                if (ln && rn) {
                    if (rn->value == 0)
                        lex_.fail("division by zero constant");
                    lhs = make_expr(RationalConst{
                        Rational(static_cast<long>(ln->value), static_cast<long>(rn->value))});
                    continue;
                }
            }
            lhs = make_expr(BinaryExpr{op, std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    // '^' binds tighter than unary minus: -x^2 is -(x^2).
    ExprPtr parse_factor() {
        if (peek_is_sym("-")) {
            lex_.next();
            return make_expr(NegExpr{parse_factor()});
        }
        ExprPtr base = parse_primary();
        if (peek_is_sym("^")) {
            lex_.next();
            AffineIndex exp;
            if (lex_.peek().kind == Token::Kind::Int) {
                exp.c = static_cast<long>(lex_.next().value);
            } else {
                expect_sym("(");
                exp = parse_affine();
                expect_sym(")");
            }
            return make_expr(PowExpr{std::move(base), exp});
        }
        return base;
    }

    ExprPtr parse_primary() {
        const Token t = lex_.peek();
        if (t.kind == Token::Kind::Int) {
            lex_.next();
            return make_expr(IntConst{t.value});
        }
        if (t.kind == Token::Kind::Sym && t.text == "(") {
            lex_.next();
            ExprPtr e = parse_expr();
            expect_sym(")");
            return e;
        }
        if (t.kind != Token::Kind::Ident)
            lex_.fail("expected a number, name, or parenthesized expression");
        lex_.next();
        const std::string& name = t.text;
        if (name == "x")
            return make_expr(VarX{});
        if (name == "n" || name == "k")
            return make_expr(MetaVar{name[0]});
        if (name == "alpha" || name == "beta" || name == "rho" || name == "sigma") {
            if (peek_is_sym("(")) {  // tolerate zero-argument call form
                lex_.next();
                expect_sym(")");
            }
            return expand_named_const(name);
        }
        if (!peek_is_sym("("))
            lex_.fail("unknown name '" + name + "' (expected a call or one of x, n, k)");
        expect_sym("(");
        ExprPtr result = parse_call(name, t);
        expect_sym(")");
        return result;
    }

    ExprPtr parse_call(const std::string& name, const Token& at) {
        if (name == "T" || name == "U" || name == "F" || name == "B" || name == "C") {
            const AffineIndex idx = parse_affine();
            expect_sym(",");
            ExprPtr arg = parse_expr();
            return make_expr(SeqRef{seq_kind_from_name(name), idx, std::move(arg)});
        }
        if (name == "Fib" || name == "Luc" || name == "Bal")
            return make_expr(NumSeqRef{num_seq_kind_from_name(name), parse_affine()});
        if (name == "binom") {
            const AffineIndex top = parse_affine();
            expect_sym(",");
            const AffineIndex bottom = parse_affine();
            return make_expr(BinomRef{top, bottom});
        }
        if (name == "sum") {
            const Token v = lex_.next();
            if (v.kind != Token::Kind::Ident || (v.text != "k" && v.text != "n"))
                throw ParseError("sum variable must be n or k", v.line, v.col);
            try {
                expect_sym(",");
                const AffineIndex lo = parse_affine();
                expect_sym(",");
                const AffineIndex hi = parse_affine();
                expect_sym(",");
                ExprPtr body = parse_expr();
                return make_expr(SumExpr{v.text[0], lo, hi, std::move(body)});
            } catch (const ParseError& e) {
                throw ParseError(e.message() + " [in sum starting at line " +
                                     std::to_string(at.line) + ", column " +
                                     std::to_string(at.col) + "]",
                                 e.line(), e.column());
            }
        }
        if (name == "sqrt")
            return make_expr(SqrtExpr{parse_expr()});
        if (name == "sign")
            return make_expr(SignPow{parse_affine()});
        throw ParseError("unknown function '" + name + "'", at.line, at.col);
    }

    // alpha = x + sqrt(x^2-1), beta = x - sqrt(x^2-1),
    // rho = (x + sqrt(x^2+4))/2, sigma = (x - sqrt(x^2+4))/2.
    // Expanded at parse time so the evaluator stays radical-agnostic.
    ExprPtr expand_named_const(const std::string& name) {
        const ExprPtr x = make_expr(VarX{});
        const ExprPtr x2 = make_expr(PowExpr{x, AffineIndex{0, 0, 2}});
        const bool cheb = name == "alpha" || name == "beta";
        const ExprPtr radicand = make_expr(BinaryExpr{cheb ? '-' : '+', x2,
                                                      make_expr(IntConst{cheb ? 1 : 4})});
        const ExprPtr root = make_expr(SqrtExpr{radicand});
        const bool plus = name == "alpha" || name == "rho";
        const ExprPtr sum = make_expr(BinaryExpr{plus ? '+' : '-', x, root});
        if (cheb)
            return sum;
        return make_expr(BinaryExpr{'/', sum, make_expr(IntConst{2})});
    }

    // ----- integer-affine expressions in n, k -----

    AffineIndex parse_affine() {
        AffineIndex acc = parse_affine_term();
        while (peek_is_sym("+") || peek_is_sym("-")) {
            const char op = lex_.next().text[0];
            const AffineIndex t = parse_affine_term();
            acc = op == '+' ? acc + t : acc - t;
        }
        return acc;
    }

    AffineIndex parse_affine_term() {
        bool neg = false;
        while (peek_is_sym("-")) {
            lex_.next();
            neg = !neg;
        }
        AffineIndex acc = parse_affine_primary();
        while (peek_is_sym("*")) {
            const Token star = lex_.peek();
            lex_.next();
            const AffineIndex f = parse_affine_primary();
            if (acc.is_const())
                acc = f.scaled(acc.c);
            else if (f.is_const())
                acc = acc.scaled(f.c);
            else
                throw ParseError("non-affine index expression", star.line, star.col);
        }
        return neg ? -acc : acc;
    }

    AffineIndex parse_affine_primary() {
        const Token t = lex_.peek();
        if (t.kind == Token::Kind::Int) {
            lex_.next();
            return AffineIndex{0, 0, static_cast<long>(t.value)};
        }
        if (t.kind == Token::Kind::Ident && t.text == "n") {
            lex_.next();
            return AffineIndex{1, 0, 0};
        }
        if (t.kind == Token::Kind::Ident && t.text == "k") {
            lex_.next();
            return AffineIndex{0, 1, 0};
        }
        if (t.kind == Token::Kind::Sym && t.text == "(") {
            lex_.next();
            const AffineIndex inner = parse_affine();
            expect_sym(")");
            return inner;
        }
        throw ParseError("expected an integer-affine index expression in n, k", t.line, t.col);
    }

    long parse_signed_int() {
        bool neg = false;
        while (peek_is_sym("-")) {
            lex_.next();
            neg = !neg;
        }
        const Token t = lex_.next();
        if (t.kind != Token::Kind::Int)
            throw ParseError("expected an integer", t.line, t.col);
        return neg ? -static_cast<long>(t.value) : static_cast<long>(t.value);
    }

    bool peek_is_sym(const char* s) const {
        return lex_.peek().kind == Token::Kind::Sym && lex_.peek().text == s;
    }

    void expect_sym(const char* s) {
        const Token t = lex_.next();
        if (t.kind != Token::Kind::Sym || t.text != s)
            throw ParseError(std::string("expected '") + s + "'" +
                                 (t.kind == Token::Kind::End ? " before end of input"
                                                             : ", found '" + t.text + "'"),
                             t.line, t.col);
    }

    void expect_ident(const char* s) {
        const Token t = lex_.next();
        if (t.kind != Token::Kind::Ident || t.text != s)
            throw ParseError(std::string("expected '") + s + "'", t.line, t.col);
    }

    void expect_end() {
        const Token t = lex_.peek();
        if (t.kind != Token::Kind::End)
            throw ParseError("unexpected trailing input '" + t.text + "'", t.line, t.col);
    }

    detail::Lexer lex_;
};

inline Poly Parser::fold_poly(const ExprPtr& e) {
    const auto& node = e->node;
    if (auto* v = std::get_if<IntConst>(&node))
        return Poly(Rational(static_cast<long>(v->value)));
    if (auto* v = std::get_if<RationalConst>(&node))
        return Poly(v->value);
    if (std::holds_alternative<VarX>(node))
        return Poly::x();
    if (auto* v = std::get_if<NegExpr>(&node))
        return -fold_poly(v->a);
    if (auto* v = std::get_if<PowExpr>(&node)) {
        if (!v->exp.is_const() || v->exp.c < 0)
            throw std::domain_error("not a polynomial expression: bad exponent");
        return fold_poly(v->base).pow(v->exp.c);
    }
    if (auto* v = std::get_if<BinaryExpr>(&node)) {
        const Poly l = fold_poly(v->lhs);
        const Poly r = fold_poly(v->rhs);
        switch (v->op) {
            case '+': return l + r;
            case '-': return l - r;
            case '*': return l * r;
            case '/': {
                if (!r.is_constant() || r.is_zero())
                    throw std::domain_error("not a polynomial expression: bad division");
                return l * r.constant_term().inverse();
            }
        }
    }
    throw std::domain_error("not a polynomial expression");
}

/// parse("lhs = rhs for n >= N") with default radical bindings.
inline Identity parse_identity(const std::string& text, RadicalBindings bindings = {}) {
    return Parser(text).parse_identity(std::move(bindings));
}

/// One entry of an identity file: metadata directives plus the statement.
struct IdlEntry {
    std::string id;
    std::string anchor;
    std::string mode;   // empty = infer from the statement
    bool gate = true;   // false for as-printed variants kept for reporting
    Identity identity;
    std::string source_text;
};

struct IdlFile {
    RadicalBindings bindings;
    std::vector<IdlEntry> entries;
};

/// Reads an identity file: '#' comments, one identity per line (or spread
/// until the "for n >= N" tail), an optional "radicals:" header directive,
/// and optional "#@key value" metadata comments attached to the next
/// identity.
inline IdlFile parse_identity_file(const std::string& text) {
    IdlFile file;
    std::vector<std::string> lines;
    {
        std::string cur;
        for (char c : text) {
            if (c == '\n') {
                lines.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        lines.push_back(cur);
    }
    auto trim = [](const std::string& s) {
        size_t b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos)
            return std::string();
        size_t e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    };

    std::string pending_id, pending_anchor, pending_mode;
    bool pending_gate = true;
    std::string stmt;
    int stmt_line = 1;
    int auto_id = 1;

    auto flush_stmt = [&](int end_line) {
        if (trim(stmt).empty()) {
            stmt.clear();
            return;
        }
        IdlEntry entry;
        entry.identity = Parser(stmt, stmt_line).parse_identity(file.bindings);
        entry.id = pending_id.empty() ? "USER." + std::to_string(auto_id++) : pending_id;
        entry.anchor = pending_anchor;
        entry.mode = pending_mode;
        entry.gate = pending_gate;
        entry.source_text = trim(stmt);
        file.entries.push_back(std::move(entry));
        pending_id.clear();
        pending_anchor.clear();
        pending_mode.clear();
        pending_gate = true;
        stmt.clear();
        stmt_line = end_line + 1;
        (void)end_line;
    };

    for (size_t i = 0; i < lines.size(); ++i) {
        const int line_no = static_cast<int>(i) + 1;
        std::string line = lines[i];
        const std::string trimmed = trim(line);
        if (trimmed.rfind("#@", 0) == 0) {
            const std::string directive = trim(trimmed.substr(2));
            const size_t sp = directive.find(' ');
            const std::string key = sp == std::string::npos ? directive : directive.substr(0, sp);
            const std::string value =
                sp == std::string::npos ? std::string() : trim(directive.substr(sp + 1));
            if (key == "id")
                pending_id = value;
            else if (key == "anchor")
                pending_anchor = value;
            else if (key == "mode")
                pending_mode = value;
            else if (key == "gate")
                pending_gate = value != "false";
            continue;
        }
        if (!trimmed.empty() && trimmed[0] == '#')
            continue;
        if (trimmed.rfind("radicals:", 0) == 0) {
            // radicals: <poly> -> w1, <poly> -> w2
            const std::string rest = trimmed.substr(9);
            size_t comma = rest.find(',');
            if (comma == std::string::npos)
                throw ParseError("radicals directive needs two bindings", line_no, 1);
            auto parse_binding = [&](const std::string& part) {
                const size_t arrow = part.find("->");
                if (arrow == std::string::npos)
                    throw ParseError("radicals binding needs '->'", line_no, 1);
                Parser p(part.substr(0, arrow), line_no);
                const Poly radicand = p.parse_poly_only();
                const std::string target = trim(part.substr(arrow + 2));
                return std::make_pair(radicand, target);
            };
            auto [p1, t1] = parse_binding(rest.substr(0, comma));
            auto [p2, t2] = parse_binding(rest.substr(comma + 1));
            if (t1 == "w1" && t2 == "w2") {
                file.bindings.w1_radicand = p1;
                file.bindings.w2_radicand = p2;
            } else if (t1 == "w2" && t2 == "w1") {
                file.bindings.w1_radicand = p2;
                file.bindings.w2_radicand = p1;
            } else {
                throw ParseError("radicals directive must bind w1 and w2", line_no, 1);
            }
            continue;
        }
        if (trimmed.empty()) {
            flush_stmt(line_no);
            continue;
        }
        if (stmt.empty())
            stmt_line = line_no;
        stmt += line;
        stmt += "\n";
        // A statement is complete once its "for n >= N" tail has appeared.
        if (trimmed.find("for") != std::string::npos &&
            trimmed.find(">=") != std::string::npos)
            flush_stmt(line_no);
    }
    flush_stmt(static_cast<int>(lines.size()));
    return file;
}

}  // namespace chebfib::idl
