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

#include "eukleia/calculus.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace eukleia {

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// Terms

bool term_less(const Term& a, const Term& b) {
    if (a.index() != b.index()) return a.index() < b.index();
    if (const Var* va = std::get_if<Var>(&a)) return va->name < std::get<Var>(b).name;
    return structural_less(std::get<AngleLit>(a), std::get<AngleLit>(b));
}

std::string to_string(const Term& t) {
    if (const Var* v = std::get_if<Var>(&t)) return v->name;
    const AngleLit& a = std::get<AngleLit>(t);
    if (a == AngleLit::right()) return "R";
    return to_string(a);
}

MultisetExpr::MultisetExpr(std::vector<Term> terms) : terms_(std::move(terms)) {
    std::stable_sort(terms_.begin(), terms_.end(), term_less);
}

std::size_t MultisetExpr::count(const Term& t) const {
    auto [lo, hi] = std::equal_range(terms_.begin(), terms_.end(), t, term_less);
    return static_cast<std::size_t>(hi - lo);
}

MultisetExpr MultisetExpr::plus(const Term& t) const {
    MultisetExpr r = *this;
    r.terms_.insert(std::upper_bound(r.terms_.begin(), r.terms_.end(), t, term_less), t);
    return r;
}

MultisetExpr MultisetExpr::plus(const MultisetExpr& other) const {
    MultisetExpr r;
    r.terms_.reserve(size() + other.size());
    std::merge(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
               std::back_inserter(r.terms_), term_less);
    return r;
}

std::optional<Term> MultisetExpr::extra_over(const MultisetExpr& smaller) const {
    if (size() != smaller.size() + 1) return std::nullopt;
    std::vector<Term> diff;
    std::set_difference(terms_.begin(), terms_.end(), smaller.terms_.begin(),
                        smaller.terms_.end(), std::back_inserter(diff), term_less);
    if (diff.size() != 1) return std::nullopt;
    return diff.front();
}

bool MultisetExpr::literal_only() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) {
        return std::holds_alternative<AngleLit>(t);
    });
}

std::vector<AngleLit> MultisetExpr::literals() const {
    std::vector<AngleLit> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) out.push_back(std::get<AngleLit>(t));
    return out;
}

std::string to_string(const MultisetExpr& m) {
    std::string s = "{";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += ", ";
        s += to_string(m.terms()[i]);
    }
    return s + "}";
}

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// Judgments

namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace

std::string to_string(const Judgment& j) {
    return std::visit(
        overloaded{
            [](const Eq& e) { return "Eq " + to_string(e.lhs) + " " + to_string(e.rhs); },
            [](const Lt& l) { return "Lt " + to_string(l.lhs) + " " + to_string(l.rhs); },
            [](const Split& s) {
                return "Split " + to_string(s.whole) + " " + to_string(s.part1) + " " +
                       to_string(s.part2);
            },
            [](const Congr& c) { return "Congr " + to_string(c.a) + " " + to_string(c.b); },
            [](const Falsum&) { return std::string("False"); },
        },
        j);
}

std::vector<std::string> variables_of(const Judgment& j) {
    std::vector<std::string> out;
    auto note = [&](const Term& t) {
        if (const Var* v = std::get_if<Var>(&t)) {
            if (std::find(out.begin(), out.end(), v->name) == out.end()) out.push_back(v->name);
        }
    };
    auto note_all = [&](const MultisetExpr& m) {
        for (const Term& t : m.terms()) note(t);
    };
    std::visit(overloaded{
                   [&](const Eq& e) { note_all(e.lhs), note_all(e.rhs); },
                   [&](const Lt& l) { note_all(l.lhs), note_all(l.rhs); },
                   [&](const Split& s) { note(s.whole), note(s.part1), note(s.part2); },
                   [&](const Congr& c) { note(c.a), note(c.b); },
                   [](const Falsum&) {},
               },
               j);
    return out;
}

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// Rules

namespace {

struct RuleName {
    Rule rule;
    std::string_view name;
};

constexpr RuleName kRuleNames[] = {
    {Rule::EqRefl, "EqRefl"},         {Rule::EqSym, "EqSym"},
    {Rule::EqTrans, "EqTrans"},       {Rule::SubstLeft, "SubstLeft"},
    {Rule::SubstRight, "SubstRight"}, {Rule::LtTrans, "LtTrans"},
    {Rule::AddBoth, "AddBoth"},       {Rule::SingletonPos, "SingletonPos"},
    {Rule::WholePart, "WholePart"},   {Rule::SplitEq, "SplitEq"},
    {Rule::CongrEq, "CongrEq"},       {Rule::LtIrrefl, "LtIrrefl"},
    {Rule::LtAsym, "LtAsym"},         {Rule::EqLtClash, "EqLtClash"},
    {Rule::Cases, "Cases"},           {Rule::Hypothesis, "Hypothesis"},
    {Rule::KernelEval, "KernelEval"},
    // short forms
    {Rule::SplitEq, "Split"},         {Rule::CongrEq, "Congr"},
    {Rule::Hypothesis, "Hyp"},
};

bool iequals(std::string_view a, std::string_view b) {
    return a.size() == b.size() &&
           std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
               return std::tolower(static_cast<unsigned char>(x)) ==
                      std::tolower(static_cast<unsigned char>(y));
           });
}

}  // namespace

std::string_view rule_name(Rule r) {
    for (const RuleName& rn : kRuleNames) {
        if (rn.rule == r) return rn.name;
    }
    return "?";
}

std::optional<Rule> rule_from_name(std::string_view name) {
    for (const RuleName& rn : kRuleNames) {
        if (iequals(rn.name, name)) return rn.rule;
    }
    return std::nullopt;
}

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// Derivation structure

Judgment CaseSplit::branch_hypothesis(int i) const {
    switch (i) {
        case 0: return Lt{left, right};
        case 1: return Eq{left, right};
        default: return Lt{right, left};
    }
}

bool operator==(const CaseSplit& a, const CaseSplit& b) {
    return a.left == b.left && a.right == b.right &&
           std::equal(std::begin(a.branches), std::end(a.branches), std::begin(b.branches));
}

bool operator==(const Step& a, const Step& b) {
    return a.label == b.label && a.judgment == b.judgment && a.rule == b.rule &&
           a.premises == b.premises && a.cases == b.cases;
}

void ProofContext::add(std::string label, Judgment j) {
    facts_.emplace_back(std::move(label), std::move(j));
}

const Judgment* ProofContext::find(std::string_view label) const {
    for (auto it = facts_.rbegin(); it != facts_.rend(); ++it) {
        if (it->first == label) return &it->second;
    }
    return nullptr;
}

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// Checking

namespace {

struct Reject {
    std::string reason;
};

template <class J>
const J& expect_kind(const Judgment& j, const char* what) {
    if (const J* p = std::get_if<J>(&j)) return *p;
    throw Reject{std::string(what) + ", found " + to_string(j)};
}

// Literal-only evaluation of a judgment in the angle kernel.
bool kernel_truth(const Judgment& j) {
    auto lit = [](const Term& t) -> const AngleLit& {
        if (const AngleLit* a = std::get_if<AngleLit>(&t)) return *a;
        throw Reject{"KernelEval needs literal-only terms, found variable " +
                     std::get<Var>(t).name};
    };
    auto lits = [](const MultisetExpr& m) {
        if (!m.literal_only()) {
            throw Reject{"KernelEval needs literal-only expressions, found " + to_string(m)};
        }
        return m.literals();
    };
    return std::visit(
        overloaded{
            [&](const Eq& e) {
                return compare_multisets(lits(e.lhs), lits(e.rhs)) == Ordering3::Equal;
            },
            [&](const Lt& l) {
                return compare_multisets(lits(l.lhs), lits(l.rhs)) == Ordering3::Less;
            },
            [&](const Split& s) {
                const AngleLit& whole = lit(s.whole);
                try {
                    return add_two(lit(s.part1), lit(s.part2)) == whole;
                } catch (const AngleOverflow&) {
                    return false;
                }
            },
            [&](const Congr& c) { return lit(c.a) == lit(c.b); },
            [](const Falsum&) -> bool { throw Reject{"KernelEval cannot conclude False"}; },
        },
        j);
}

std::size_t expected_premises(Rule r) {
    switch (r) {
        case Rule::EqRefl:
        case Rule::SingletonPos:
        case Rule::WholePart:
        case Rule::Cases:
        case Rule::KernelEval:
            return 0;
        case Rule::EqSym:
        case Rule::AddBoth:
        case Rule::SplitEq:
        case Rule::CongrEq:
        case Rule::LtIrrefl:
        case Rule::Hypothesis:
            return 1;
        default:
            return 2;
    }
}

// The lhs/rhs pair of an Eq or Lt judgment, with its kind.
struct Comparison {
    bool strict;
    const MultisetExpr* lhs;
    const MultisetExpr* rhs;
};

Comparison as_comparison(const Judgment& j, const char* what) {
    if (const Eq* e = std::get_if<Eq>(&j)) return {false, &e->lhs, &e->rhs};
    if (const Lt* l = std::get_if<Lt>(&j)) return {true, &l->lhs, &l->rhs};
    throw Reject{std::string(what) + " must be Eq or Lt, found " + to_string(j)};
}

Judgment make_comparison(bool strict, MultisetExpr lhs, MultisetExpr rhs) {
    if (strict) return Lt{std::move(lhs), std::move(rhs)};
    return Eq{std::move(lhs), std::move(rhs)};
}

void require_conclusion(const Judgment& got, const Judgment& want) {
    if (!(got == want)) {
        throw Reject{"conclusion " + to_string(got) + " does not follow; the rule yields " +
                     to_string(want)};
    }
}

void check_rule(const Step& step, const std::vector<const Judgment*>& p) {
    const Judgment& c = step.judgment;
    switch (step.rule) {
        case Rule::EqRefl: {
            const Eq& e = expect_kind<Eq>(c, "EqRefl concludes Eq");
            if (!(e.lhs == e.rhs)) throw Reject{"EqRefl needs identical sides"};
            return;
        }
        case Rule::EqSym: {
            const Eq& e = expect_kind<Eq>(*p[0], "EqSym premise must be Eq");
            require_conclusion(c, Eq{e.rhs, e.lhs});
            return;
        }
        case Rule::EqTrans: {
            const Eq& ab = expect_kind<Eq>(*p[0], "EqTrans first premise must be Eq");
            const Eq& bc = expect_kind<Eq>(*p[1], "EqTrans second premise must be Eq");
            if (!(ab.rhs == bc.lhs)) {
                throw Reject{"EqTrans premises do not chain: " + to_string(ab.rhs) +
                             " vs " + to_string(bc.lhs)};
            }
            require_conclusion(c, Eq{ab.lhs, bc.rhs});
            return;
        }
        case Rule::SubstLeft:
        case Rule::SubstRight: {
            // Eq(A,B) with J(B,C) gives J(A,C); with J(C,B) gives J(C,A).
            const Eq& eq = expect_kind<Eq>(*p[0], "substitution first premise must be Eq");
            Comparison target = as_comparison(*p[1], "substitution second premise");
            bool left = step.rule == Rule::SubstLeft;
            const MultisetExpr& replaced = left ? *target.lhs : *target.rhs;
            if (!(replaced == eq.rhs)) {
                throw Reject{std::string(left ? "left" : "right") + " side " +
                             to_string(replaced) + " is not the equality's right side " +
                             to_string(eq.rhs)};
            }
            require_conclusion(c, left ? make_comparison(target.strict, eq.lhs, *target.rhs)
                                       : make_comparison(target.strict, *target.lhs, eq.lhs));
            return;
        }
        case Rule::LtTrans: {
            const Lt& ab = expect_kind<Lt>(*p[0], "LtTrans first premise must be Lt");
            const Lt& bc = expect_kind<Lt>(*p[1], "LtTrans second premise must be Lt");
            if (!(ab.rhs == bc.lhs)) {
                throw Reject{"LtTrans premises do not chain: " + to_string(ab.rhs) +
                             " vs " + to_string(bc.lhs)};
            }
            require_conclusion(c, Lt{ab.lhs, bc.rhs});
            return;
        }
        case Rule::AddBoth: {
            Comparison prem = as_comparison(*p[0], "AddBoth premise");
            Comparison concl = as_comparison(c, "AddBoth conclusion");
            if (prem.strict != concl.strict) {
                throw Reject{"AddBoth must keep the relation of its premise"};
            }
            auto tl = concl.lhs->extra_over(*prem.lhs);
            auto tr = concl.rhs->extra_over(*prem.rhs);
            if (!tl || !tr) {
                throw Reject{"AddBoth must add exactly one term to each side of " +
                             to_string(*p[0])};
            }
            if (!(*tl == *tr)) {
                throw Reject{"AddBoth added different terms: " + to_string(*tl) + " vs " +
                             to_string(*tr)};
            }
            return;
        }
        case Rule::SingletonPos: {
            const Lt& l = expect_kind<Lt>(c, "SingletonPos concludes Lt");
            if (!l.lhs.empty() || l.rhs.size() != 1) {
                throw Reject{"SingletonPos concludes Lt {} {t} for a single term t"};
            }
            return;
        }
        case Rule::WholePart: {
            const Lt& l = expect_kind<Lt>(c, "WholePart concludes Lt");
            if (l.rhs.size() <= l.lhs.size() ||
                !std::includes(l.rhs.terms().begin(), l.rhs.terms().end(),
                               l.lhs.terms().begin(), l.lhs.terms().end(), term_less)) {
                throw Reject{"WholePart needs the right side to strictly contain the left"};
            }
            return;
        }
        case Rule::SplitEq: {
            const Split& s = expect_kind<Split>(*p[0], "SplitEq premise must be Split");
            require_conclusion(c, Eq{MultisetExpr{s.whole}, MultisetExpr{s.part1, s.part2}});
            return;
        }
        case Rule::CongrEq: {
            const Congr& k = expect_kind<Congr>(*p[0], "CongrEq premise must be Congr");
            require_conclusion(c, Eq{MultisetExpr{k.a}, MultisetExpr{k.b}});
            return;
        }
        case Rule::LtIrrefl: {
            expect_kind<Falsum>(c, "LtIrrefl concludes False");
            const Lt& l = expect_kind<Lt>(*p[0], "LtIrrefl premise must be Lt");
            if (!(l.lhs == l.rhs)) throw Reject{"LtIrrefl needs identical sides"};
            return;
        }
        case Rule::LtAsym: {
            expect_kind<Falsum>(c, "LtAsym concludes False");
            const Lt& ab = expect_kind<Lt>(*p[0], "LtAsym first premise must be Lt");
            const Lt& ba = expect_kind<Lt>(*p[1], "LtAsym second premise must be Lt");
            if (!(ab.lhs == ba.rhs && ab.rhs == ba.lhs)) {
                throw Reject{"LtAsym premises are not mirror images"};
            }
            return;
        }
        case Rule::EqLtClash: {
            expect_kind<Falsum>(c, "EqLtClash concludes False");
            const Eq& e = expect_kind<Eq>(*p[0], "EqLtClash first premise must be Eq");
            const Lt& l = expect_kind<Lt>(*p[1], "EqLtClash second premise must be Lt");
            bool same = e.lhs == l.lhs && e.rhs == l.rhs;
            bool mirrored = e.lhs == l.rhs && e.rhs == l.lhs;
            if (!same && !mirrored) throw Reject{"EqLtClash premises compare different sides"};
            return;
        }
        case Rule::Hypothesis: {
            if (std::holds_alternative<Falsum>(*p[0])) return;
            require_conclusion(c, *p[0]);
            return;
        }
        case Rule::KernelEval: {
            if (!kernel_truth(c)) throw Reject{to_string(c) + " is false in the angle kernel"};
            return;
        }
        case Rule::Cases:
            return;  // handled by the caller
    }
}

class Checker {
public:
    explicit Checker(ProofContext& ctx) : ctx_(ctx) {}

    std::optional<StepError> run(const std::vector<Step>& steps) {
        for (const Step& s : steps) {
            if (auto err = check(s)) return err;
            ctx_.add(s.label, s.judgment);
        }
        return std::nullopt;
    }

    std::optional<StepError> check(const Step& step) {
        std::size_t ordinal = ++ordinal_;
        auto fail = [&](std::string reason) {
            return StepError{step.label, ordinal, step.span, std::move(reason)};
        };
        try {
            if (step.label.empty() || step.label == kCaseRef) {
                throw Reject{"invalid step label '" + step.label + "'"};
            }
            if (ctx_.find(step.label)) throw Reject{"label " + step.label + " is already in use"};
            for (const std::string& v : variables_of(step.judgment)) {
                if (!ctx_.declared(v)) throw Reject{"undeclared variable " + v};
            }
            if (step.premises.size() != expected_premises(step.rule)) {
                throw Reject{std::string(rule_name(step.rule)) + " takes " +
                             std::to_string(expected_premises(step.rule)) + " premise(s), " +
                             std::to_string(step.premises.size()) + " cited"};
            }
            std::vector<const Judgment*> premises;
            for (const std::string& ref : step.premises) {
                const Judgment* j = ctx_.find(ref);
                if (!j) throw Reject{"premise " + ref + " is not an earlier step or hypothesis in scope"};
                premises.push_back(j);
            }
            if ((step.rule == Rule::Cases) != step.cases.has_value()) {
                throw Reject{step.cases ? "case blocks given without the Cases rule"
                                        : "Cases needs three case blocks"};
            }
            check_rule(step, premises);
        } catch (const Reject& r) {
            return fail(r.reason);
        }
        if (step.cases) return check_cases(step, fail);
        return std::nullopt;
    }

private:
    template <class Fail>
    std::optional<StepError> check_cases(const Step& step, Fail& fail) {
        const CaseSplit& cs = *step.cases;
        for (const MultisetExpr* side : {&cs.left, &cs.right}) {
            for (const Term& t : side->terms()) {
                if (const Var* v = std::get_if<Var>(&t); v && !ctx_.declared(v->name)) {
                    return fail("undeclared variable " + v->name);
                }
            }
        }
        static constexpr const char* kBranch[] = {"less", "equal", "greater"};
        for (int i = 0; i < 3; ++i) {
            const std::vector<Step>& branch = cs.branches[i];
            if (branch.empty()) return fail(std::string(kBranch[i]) + " branch is empty");
            std::size_t mark = ctx_.mark();
            ctx_.add(std::string(kCaseRef), cs.branch_hypothesis(i));
            auto err = run(branch);
            ctx_.rewind(mark);
            if (err) return err;
            if (!(branch.back().judgment == step.judgment)) {
                return fail(std::string(kBranch[i]) + " branch ends with " +
                            to_string(branch.back().judgment) + ", not the goal");
            }
        }
        return std::nullopt;
    }

    ProofContext& ctx_;
    std::size_t ordinal_ = 0;
};

}  // namespace

std::optional<StepError> check_step(const Step& step, ProofContext& ctx) {
    std::size_t mark = ctx.mark();
    auto err = Checker(ctx).check(step);
    ctx.rewind(mark);
    return err;
}

std::optional<StepError> check_derivation(const Derivation& d) {
    ProofContext ctx(std::set<std::string>(d.vars.begin(), d.vars.end()));
    for (const Hypothesis& h : d.hypotheses) {
        for (const std::string& v : variables_of(h.judgment)) {
            if (!ctx.declared(v)) {
                return StepError{h.label, 0, h.span, "undeclared variable " + v};
            }
        }
        if (ctx.find(h.label)) {
            return StepError{h.label, 0, h.span, "label " + h.label + " is already in use"};
        }
        ctx.add(h.label, h.judgment);
    }
    return Checker(ctx).run(d.steps);
}

//mmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmmm
// Derived rules

std::vector<Step> derive_whole_part(const MultisetExpr& m, const MultisetExpr& n,
                                    std::string_view label_prefix) {
    if (n.empty()) throw EmptyPart("the added part must be nonempty");
    std::vector<Step> out;
    auto emit = [&](Judgment j, Rule r, std::vector<std::string> premises) {
        Step s;
        s.label = std::string(label_prefix) + std::to_string(out.size() + 1);
        s.judgment = std::move(j);
        s.rule = r;
        s.premises = std::move(premises);
        out.push_back(std::move(s));
        return out.back().label;
    };

    MultisetExpr current = m;
    std::optional<std::string> so_far;  // proves Lt(m, current)
    for (const Term& extra : n.terms()) {
        // Lt(current, current + extra): grow {} < {extra} one term at a time.
        MultisetExpr acc;
        std::string last = emit(Lt{acc, MultisetExpr{extra}}, Rule::SingletonPos, {});
        for (const Term& t : current.terms()) {
            acc = acc.plus(t);
            last = emit(Lt{acc, acc.plus(extra)}, Rule::AddBoth, {last});
        }
        MultisetExpr next = current.plus(extra);
        if (so_far) last = emit(Lt{m, next}, Rule::LtTrans, {*so_far, last});
        so_far = last;
        current = std::move(next);
    }
    return out;
}

}  // namespace eukleia
