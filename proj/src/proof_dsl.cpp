/* Copyright 2026 The Eukleia Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "eukleia/proof_dsl.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace eukleia {

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// Lexer

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    auto is_ident_start = [](unsigned char c) { return std::isalpha(c) || c == '_'; };
    auto is_ident = [](unsigned char c) { return std::isalnum(c) || c == '_'; };

    while (i < text.size()) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c)) {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        SourceSpan span{line, col, 1};
        std::size_t start = i;
        if (is_ident_start(c)) {
            std::size_t j = i;
            while (j < text.size() && is_ident(static_cast<unsigned char>(text[j]))) ++j;
            span.length = static_cast<int>(j - start);
            out.push_back({TokenKind::Ident, std::string(text.substr(start, j - start)), span});
            advance(j - start);
        } else if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            span.length = static_cast<int>(j - start);
            out.push_back({TokenKind::Int, std::string(text.substr(start, j - start)), span});
            advance(j - start);
        } else if (std::string_view("{}(),;:/-").find(static_cast<char>(c)) !=
                   std::string_view::npos) {
            out.push_back({TokenKind::Punct, std::string(1, static_cast<char>(c)), span});
            advance(1);
        } else {
            throw ParseError(span, std::string("unexpected character '") +
                                       static_cast<char>(c) + "'");
        }
    }
    out.push_back({TokenKind::End, "", SourceSpan{line, col, 0}});
    return out;
}

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// Parser

namespace {

const std::set<std::string, std::less<>> kReserved = {"R", "ang"};

struct PendingRef {
    std::string label;
    SourceSpan span;
    bool in_block;
};

class Parser {
public:
    Parser(std::string_view text, bool require_declarations) : toks_(tokenize(text)) {
        if (require_declarations) declared_.emplace();
    }

    MultisetExpr expression_only() {
        MultisetExpr m = expr();
        expect_end();
        return m;
    }

    Derivation script() {
        Derivation d;
        if (!at_ident("vars")) fail(peek(), "missing 'vars' header", {"vars"});
        next();
        while (peek().kind == TokenKind::Ident) {
            const Token& v = next();
            if (kReserved.count(v.text)) fail(v, "'" + v.text + "' is reserved");
            if (!declared_->insert(v.text).second) fail(v, "variable " + v.text + " declared twice");
            d.vars.push_back(v.text);
        }
        expect_punct(";");

        while (at_ident("hyp")) {
            next();
            Hypothesis h;
            const Token& lbl = label_def();
            h.label = lbl.text;
            h.span = lbl.span;
            expect_punct(":");
            h.judgment = judgment();
            expect_punct(";");
            d.hypotheses.push_back(std::move(h));
        }
        while (peek().kind != TokenKind::End) d.steps.push_back(step(false));
        expect_end();

        for (const PendingRef& r : refs_) {
            if (r.label == kCaseRef) {
                if (!r.in_block) fail(r.span, "'case' used outside a case block");
            } else if (!labels_.count(r.label)) {
                fail(r.span, "unknown reference " + r.label);
            }
        }
        return d;
    }

private:
    //------------------------------------------------------------------------
    // token helpers

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() {
        const Token& t = toks_[pos_];
        if (t.kind != TokenKind::End) ++pos_;
        return t;
    }
    bool at_punct(std::string_view p) const {
        return peek().kind == TokenKind::Punct && peek().text == p;
    }
    bool at_ident(std::string_view s) const {
        return peek().kind == TokenKind::Ident && peek().text == s;
    }

    [[noreturn]] static void fail(const SourceSpan& span, std::string msg,
                                  std::vector<std::string> expected = {}) {
        throw ParseError(span, std::move(msg), std::move(expected));
    }
    [[noreturn]] static void fail(const Token& t, std::string msg,
                                  std::vector<std::string> expected = {}) {
        fail(t.span, std::move(msg), std::move(expected));
    }
    static std::string describe(const Token& t) {
        return t.kind == TokenKind::End ? "end of input" : "'" + t.text + "'";
    }

    const Token& expect_punct(std::string_view p) {
        if (!at_punct(p)) {
            fail(peek(), "expected '" + std::string(p) + "' but found " + describe(peek()),
                 {"'" + std::string(p) + "'"});
        }
        return next();
    }
    void expect_end() {
        if (peek().kind != TokenKind::End) {
            fail(peek(), "unexpected " + describe(peek()), {"end of input"});
        }
    }

    //------------------------------------------------------------------------
    // grammar

    const Token& label_def() {
        const Token& t = peek();
        if (t.kind != TokenKind::Ident) fail(t, "expected a label but found " + describe(t), {"label"});
        if (t.text == kCaseRef) fail(t, "'case' cannot be used as a label");
        if (!labels_.insert(t.text).second) fail(t, "label " + t.text + " defined twice");
        return next();
    }

    BigInt signed_int() {
        bool neg = false;
        if (at_punct("-")) {
            next();
            neg = true;
        }
        const Token& t = peek();
        if (t.kind != TokenKind::Int) fail(t, "expected an integer but found " + describe(t), {"integer"});
        next();
        BigInt v(t.text);
        return neg ? BigInt(-v) : v;
    }

    Term term() {
        const Token& t = peek();
        if (t.kind != TokenKind::Ident) {
            fail(t, "expected a term but found " + describe(t), {"identifier", "R", "ang("});
        }
        if (t.text == "R") {
            next();
            return AngleLit::right();
        }
        if (t.text == "ang") {
            SourceSpan start = next().span;
            expect_punct("(");
            BigInt x = signed_int();
            expect_punct("/");
            BigInt y = signed_int();
            const Token& close = expect_punct(")");
            try {
                return AngleLit::from_slope_vector(std::move(x), std::move(y));
            } catch (const DegenerateAngle& e) {
                SourceSpan span = start;
                if (close.span.line == start.line) span.length = close.span.column - start.column + 1;
                fail(span, e.what());
            }
        }
        if (declared_ && !declared_->count(t.text)) fail(t, "undeclared variable " + t.text);
        next();
        return Var{t.text};
    }

    MultisetExpr expr() {
        expect_punct("{");
        std::vector<Term> terms;
        if (!at_punct("}")) {
            terms.push_back(term());
            while (at_punct(",")) {
                next();
                terms.push_back(term());
            }
        }
        if (!at_punct("}")) {
            fail(peek(), "expected ',' or '}' but found " + describe(peek()), {"','", "'}'"});
        }
        next();
        return MultisetExpr(std::move(terms));
    }

    Judgment judgment() {
        const Token& t = peek();
        if (t.kind == TokenKind::Ident) {
            if (t.text == "Eq" || t.text == "Lt") {
                bool strict = t.text == "Lt";
                next();
                MultisetExpr lhs = expr();
                MultisetExpr rhs = expr();
                if (strict) return Lt{std::move(lhs), std::move(rhs)};
                return Eq{std::move(lhs), std::move(rhs)};
            }
            if (t.text == "Split") {
                next();
                Term whole = term();
                Term a = term();
                Term b = term();
                return Split{std::move(whole), std::move(a), std::move(b)};
            }
            if (t.text == "Congr") {
                next();
                Term a = term();
                Term b = term();
                return Congr{std::move(a), std::move(b)};
            }
            if (t.text == "False") {
                next();
                return Falsum{};
            }
        }
        fail(t, "expected a judgment but found " + describe(t),
             {"Eq", "Lt", "Split", "Congr", "False"});
    }

    Step step(bool in_block) {
        Step s;
        const Token& lbl = label_def();
        s.label = lbl.text;
        s.span = lbl.span;
        expect_punct(":");
        s.judgment = judgment();
        if (!at_ident("by")) fail(peek(), "expected 'by' but found " + describe(peek()), {"by"});
        next();

        const Token& rt = peek();
        if (rt.kind != TokenKind::Ident) fail(rt, "expected a rule name but found " + describe(rt), {"rule"});
        auto rule = rule_from_name(rt.text);
        if (!rule) fail(rt, "unknown rule " + rt.text, {"rule"});
        next();
        s.rule = *rule;

        if (s.rule == Rule::Cases) {
            CaseSplit cs;
            cs.left = expr();
            cs.right = expr();
            for (auto& branch : cs.branches) {
                expect_punct("{");
                while (!at_punct("}")) {
                    if (peek().kind == TokenKind::End) fail(peek(), "unterminated case block", {"'}'"});
                    branch.push_back(step(true));
                }
                next();
            }
            s.cases = std::move(cs);
        } else {
            while (peek().kind == TokenKind::Ident) {
                const Token& r = next();
                refs_.push_back({r.text, r.span, in_block});
                s.premises.push_back(r.text);
                if (at_punct(",")) next();
            }
        }
        expect_punct(";");
        return s;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::set<std::string> labels_;
    std::vector<PendingRef> refs_;
    std::optional<std::set<std::string>> declared_;  // empty: any identifier is a variable
};

}  // namespace

MultisetExpr parse_expr(std::string_view text) {
    return Parser(text, false).expression_only();
}

Derivation parse_proof(std::string_view text) {
    return Parser(text, true).script();
}

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// Printer

namespace {

void print_steps(std::ostream& os, const std::vector<Step>& steps, int indent) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    for (const Step& s : steps) {
        os << pad << s.label << ": " << to_string(s.judgment) << " by " << rule_name(s.rule);
        for (const std::string& p : s.premises) os << ' ' << p;
        if (s.cases) {
            os << ' ' << to_string(s.cases->left) << ' ' << to_string(s.cases->right);
            for (const auto& branch : s.cases->branches) {
                os << '\n' << pad << "{\n";
                print_steps(os, branch, indent + 2);
                os << pad << '}';
            }
        }
        os << ";\n";
    }
}

}  // namespace

std::string to_source(const Derivation& d) {
    std::ostringstream os;
    os << "vars";
    for (const std::string& v : d.vars) os << ' ' << v;
    os << ";\n";
    for (const Hypothesis& h : d.hypotheses) {
        os << "hyp " << h.label << ": " << to_string(h.judgment) << ";\n";
    }
    print_steps(os, d.steps, 0);
    return os.str();
}

}  // namespace eukleia
