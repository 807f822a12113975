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

// Text format for proof scripts (.eap files).
//
//   script    := 'vars' IDENT* ';' hyp* step*
//   hyp       := 'hyp' LABEL ':' judgment ';'
//   step      := LABEL ':' judgment 'by' RULE ref* ';'
//              | LABEL ':' judgment 'by' 'cases' expr expr block block block ';'
//   block     := '{' step* '}'
//   ref       := LABEL | 'case'
//   judgment  := 'Eq' expr expr | 'Lt' expr expr | 'Split' term term term
//              | 'Congr' term term | 'False'
//   expr      := '{' '}' | '{' term (',' term)* '}'
//   term      := IDENT | 'R' | 'ang' '(' INT '/' INT ')'
//
// `#` starts a comment that runs to the end of the line. References may be
// separated by commas. Rule names are case-insensitive.

#ifndef EUKLEIA_PROOF_DSL_HPP
#define EUKLEIA_PROOF_DSL_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eukleia/calculus.hpp"

namespace eukleia {

class ParseError : public std::runtime_error {
public:
    ParseError(SourceSpan span, std::string message, std::vector<std::string> expected = {})
        : std::runtime_error(format(span, message)),
          span_(span),
          message_(std::move(message)),
          expected_(std::move(expected)) {}

    const SourceSpan& span() const { return span_; }
    const std::string& message() const { return message_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    static std::string format(const SourceSpan& s, const std::string& m) {
        return std::to_string(s.line) + ":" + std::to_string(s.column) + ": " + m;
    }

    SourceSpan span_;
    std::string message_;
    std::vector<std::string> expected_;
};

enum class TokenKind { Ident, Int, Punct, End };

struct Token {
    TokenKind kind;
    std::string text;
    SourceSpan span;
};

/// Splits text into tokens, dropping whitespace and comments. The last token
/// is always End. Throws ParseError on characters outside the language.
std::vector<Token> tokenize(std::string_view text);

/// A standalone multiset expression; any identifier is read as a variable.
MultisetExpr parse_expr(std::string_view text);

Derivation parse_proof(std::string_view text);

/// Canonical script text; parse_proof(to_source(d)) == d.
std::string to_source(const Derivation& d);

}  // namespace eukleia

#endif  // EUKLEIA_PROOF_DSL_HPP
