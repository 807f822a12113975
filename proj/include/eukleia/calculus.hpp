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

#ifndef EUKLEIA_CALCULUS_HPP
#define EUKLEIA_CALCULUS_HPP

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "eukleia/angle.hpp"

namespace eukleia {

//------------------------------------------------------------------------------
// Terms and multiset expressions

struct Var {
    std::string name;
    friend bool operator==(const Var&, const Var&) = default;
};

using Term = std::variant<Var, AngleLit>;

/// Variables sort before literals; literals sort coordinate-wise.
bool term_less(const Term& a, const Term& b);
std::string to_string(const Term& t);

/// Finite multiset of terms, kept sorted so that equality is multiset
/// equality. The listed order in source text is not preserved.
class MultisetExpr {
public:
    MultisetExpr() = default;
    explicit MultisetExpr(std::vector<Term> terms);
    MultisetExpr(std::initializer_list<Term> terms)
        : MultisetExpr(std::vector<Term>(terms)) {}

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    std::size_t count(const Term& t) const;

    MultisetExpr plus(const Term& t) const;
    MultisetExpr plus(const MultisetExpr& other) const;

    /// The term t with *this == smaller.plus(t), if there is exactly one.
    std::optional<Term> extra_over(const MultisetExpr& smaller) const;

    bool literal_only() const;
    std::vector<AngleLit> literals() const;  // requires literal_only()

    friend bool operator==(const MultisetExpr&, const MultisetExpr&) = default;

private:
    std::vector<Term> terms_;
};

std::string to_string(const MultisetExpr& m);

//------------------------------------------------------------------------------
// Judgments

struct Eq {
    MultisetExpr lhs, rhs;
    friend bool operator==(const Eq&, const Eq&) = default;
};
struct Lt {
    MultisetExpr lhs, rhs;
    friend bool operator==(const Lt&, const Lt&) = default;
};
/// A ray splits `whole` into `part1` and `part2`.
struct Split {
    Term whole, part1, part2;
    friend bool operator==(const Split&, const Split&) = default;
};
/// The two angles coincide when applied to each other.
struct Congr {
    Term a, b;
    friend bool operator==(const Congr&, const Congr&) = default;
};
struct Falsum {
    friend bool operator==(const Falsum&, const Falsum&) = default;
};

using Judgment = std::variant<Eq, Lt, Split, Congr, Falsum>;

std::string to_string(const Judgment& j);

/// Every variable mentioned by the judgment, in first-mention order.
std::vector<std::string> variables_of(const Judgment& j);

//------------------------------------------------------------------------------
// Rules and derivations

enum class Rule {
    EqRefl,
    EqSym,
    EqTrans,
    SubstLeft,
    SubstRight,
    LtTrans,
    AddBoth,
    SingletonPos,
    WholePart,
    SplitEq,
    CongrEq,
    LtIrrefl,
    LtAsym,
    EqLtClash,
    Cases,
    Hypothesis,
    KernelEval,
};

inline constexpr Rule kAllRules[] = {
    Rule::EqRefl,    Rule::EqSym,        Rule::EqTrans,   Rule::SubstLeft,
    Rule::SubstRight, Rule::LtTrans,     Rule::AddBoth,   Rule::SingletonPos,
    Rule::WholePart, Rule::SplitEq,      Rule::CongrEq,   Rule::LtIrrefl,
    Rule::LtAsym,    Rule::EqLtClash,    Rule::Cases,     Rule::Hypothesis,
    Rule::KernelEval,
};

std::string_view rule_name(Rule r);
/// Case-insensitive; also accepts the short forms `split`, `congr`, `hyp`.
std::optional<Rule> rule_from_name(std::string_view name);

/// Reference to the implicit hypothesis of the innermost case branch.
inline constexpr std::string_view kCaseRef = "case";

struct SourceSpan {
    int line = 1;
    int column = 1;
    int length = 0;
    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

struct Step;

/// Trichotomy on (left, right): the branches assume Lt(left, right),
/// Eq(left, right) and Lt(right, left) respectively.
struct CaseSplit {
    MultisetExpr left, right;
    std::vector<Step> branches[3];

    Judgment branch_hypothesis(int i) const;
};

struct Step {
    std::string label;
    Judgment judgment;
    Rule rule = Rule::Hypothesis;
    std::vector<std::string> premises;
    std::optional<CaseSplit> cases;
    SourceSpan span;  // not part of structural equality
};

bool operator==(const CaseSplit& a, const CaseSplit& b);
bool operator==(const Step& a, const Step& b);

struct Hypothesis {
    std::string label;
    Judgment judgment;
    SourceSpan span;  // not part of structural equality
    friend bool operator==(const Hypothesis& a, const Hypothesis& b) {
        return a.label == b.label && a.judgment == b.judgment;
    }
};

struct Derivation {
    std::vector<std::string> vars;
    std::vector<Hypothesis> hypotheses;
    std::vector<Step> steps;
    friend bool operator==(const Derivation&, const Derivation&) = default;
};

struct StepError {
    std::string label;
    std::size_t ordinal = 0;  // 1-based, counting nested steps in source order
    SourceSpan span;
    std::string reason;
};

/// Facts visible to a step: hypotheses, earlier steps of enclosing blocks,
/// and the innermost case hypothesis.
class ProofContext {
public:
    /// Unrestricted: any variable name is accepted.
    ProofContext() = default;
    explicit ProofContext(std::set<std::string> declared_vars)
        : declared_(std::move(declared_vars)) {}

    void add(std::string label, Judgment j);
    const Judgment* find(std::string_view label) const;
    bool declared(const std::string& var) const {
        return !declared_ || declared_->count(var) > 0;
    }

    std::size_t mark() const { return facts_.size(); }
    void rewind(std::size_t mark) { facts_.resize(mark); }

private:
    std::optional<std::set<std::string>> declared_;
    std::vector<std::pair<std::string, Judgment>> facts_;
};

/// Checks one step against its context. Cases steps check their branches
/// recursively; the context is restored before returning.
std::optional<StepError> check_step(const Step& step, ProofContext& ctx);

/// First failing step, or nullopt when the whole derivation is accepted.
std::optional<StepError> check_derivation(const Derivation& d);

struct EmptyPart : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Steps proving Lt(m, m + n) from SingletonPos, AddBoth and LtTrans alone.
/// Labels are `<prefix>1`, `<prefix>2`, ...; the last step is the conclusion.
std::vector<Step> derive_whole_part(const MultisetExpr& m, const MultisetExpr& n,
                                    std::string_view label_prefix = "W");

}  // namespace eukleia

#endif  // EUKLEIA_CALCULUS_HPP
