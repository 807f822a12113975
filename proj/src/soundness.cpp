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

#include "eukleia/soundness.hpp"

#include <utility>

namespace eukleia {

namespace {

constexpr int kPoolSize = 6;

// Random terms and multisets together with the valuation that gives them
// meaning. Partners are built from values, so Eq/Lt premises come out true
// most of the time.
class Gen {
public:
    Gen(Rng& rng, bool literal_only) : rng_(rng), literal_only_(literal_only) {
        for (int i = 0; i < kPoolSize; ++i) v_.emplace("x" + std::to_string(i), random_angle(rng_));
    }

    Valuation take_valuation() { return std::move(v_); }

    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Term term() {
        if (!literal_only_) {
            int roll = uniform(0, 99);
            if (roll < 65) return Var{"x" + std::to_string(uniform(0, kPoolSize - 1))};
            if (roll < 75) return AngleLit::right();
        }
        return random_angle(rng_);
    }

    MultisetExpr multiset(int lo, int hi) {
        std::vector<Term> ts;
        int n = uniform(lo, hi);
        for (int i = 0; i < n; ++i) ts.push_back(term());
        return MultisetExpr(std::move(ts));
    }

    // A term denoting the given value: a literal or a fresh variable.
    Term represent(const AngleLit& a) {
        if (literal_only_ || coin(0.4)) return a;
        std::string name = "y" + std::to_string(fresh_++);
        v_.emplace(name, a);
        return Var{name};
    }

    const AngleLit& value(const Term& t) const { return value_of(t, v_); }
    std::vector<AngleLit> values(const MultisetExpr& m) const { return value_of(m, v_); }

    Ordering3 cmp(const MultisetExpr& a, const MultisetExpr& b) const {
        return compare_multisets(values(a), values(b));
    }

    // Same total measure, rearranged by random splits and merges.
    MultisetExpr equal_partner(const MultisetExpr& m) {
        struct Item {
            std::optional<Term> original;
            AngleLit value;
        };
        std::vector<Item> items;
        for (const Term& t : m.terms()) items.push_back({t, value(t)});
        int ops = uniform(0, 3);
        for (int k = 0; k < ops && !items.empty(); ++k) {
            std::size_t i = static_cast<std::size_t>(uniform(0, static_cast<int>(items.size()) - 1));
            if (coin() || items.size() < 2) {
                AngleLit part = random_angle(rng_);
                if (auto rest = remainder_angle(items[i].value, part)) {
                    items[i] = {std::nullopt, part};
                    items.push_back({std::nullopt, *rest});
                }
            } else {
                std::size_t j = static_cast<std::size_t>(uniform(0, static_cast<int>(items.size()) - 2));
                if (j >= i) ++j;
                try {
                    AngleLit sum = add_two(items[i].value, items[j].value);
                    items[i] = {std::nullopt, sum};
                    items.erase(items.begin() + static_cast<std::ptrdiff_t>(j));
                } catch (const AngleOverflow&) {
                }
            }
        }
        std::vector<Term> out;
        for (Item& it : items) out.push_back(it.original ? *it.original : represent(it.value));
        return MultisetExpr(std::move(out));
    }

    MultisetExpr greater_than(const MultisetExpr& b) {
        if (coin()) {
            MultisetExpr c = multiset(0, 5);
            if (cmp(b, c) == Ordering3::Less) return c;
        }
        return equal_partner(b).plus(term());
    }

    std::optional<MultisetExpr> less_than(const MultisetExpr& b) {
        if (coin()) {
            MultisetExpr c = multiset(0, 4);
            if (cmp(c, b) == Ordering3::Less) return c;
        }
        if (b.empty()) return std::nullopt;
        std::vector<Term> ts = b.terms();
        ts.erase(ts.begin() + uniform(0, static_cast<int>(ts.size()) - 1));
        return equal_partner(MultisetExpr(std::move(ts)));
    }

    // Mostly-true comparison judgment.
    Judgment comparison() {
        MultisetExpr a = multiset(0, 4);
        if (coin()) return Eq{a, equal_partner(a)};
        return Lt{a, greater_than(a)};
    }

    Judgment any_judgment() {
        switch (uniform(0, 3)) {
            case 0: {
                Term b = term(), c = term();
                Term whole = term();
                try {
                    whole = represent(add_two(value(b), value(c)));
                } catch (const AngleOverflow&) {
                }
                return Split{whole, b, c};
            }
            case 1: {
                Term a = term();
                return Congr{a, represent(value(a))};
            }
            default:
                return comparison();
        }
    }

private:
    Rng& rng_;
    bool literal_only_;
    Valuation v_;
    int fresh_ = 0;
};

Judgment relation(bool strict, MultisetExpr l, MultisetExpr r) {
    if (strict) return Lt{std::move(l), std::move(r)};
    return Eq{std::move(l), std::move(r)};
}

}  // namespace

RuleInstance random_rule_instance(Rule rule, Rng& rng) {
    Gen g(rng, rule == Rule::KernelEval);
    RuleInstance in{rule, {}, Falsum{}, std::nullopt, {}};
    auto maybe_noise = [&](MultisetExpr m) { return g.coin(0.15) ? g.multiset(0, 4) : m; };

    switch (rule) {
        case Rule::EqRefl: {
            MultisetExpr m = g.multiset(0, 5);
            in.conclusion = Eq{m, m};
            break;
        }
        case Rule::EqSym: {
            MultisetExpr a = g.multiset(0, 4);
            MultisetExpr b = maybe_noise(g.equal_partner(a));
            in.premises = {Eq{a, b}};
            in.conclusion = Eq{b, a};
            break;
        }
        case Rule::EqTrans: {
            MultisetExpr a = g.multiset(0, 4);
            MultisetExpr b = g.equal_partner(a);
            MultisetExpr c = maybe_noise(g.equal_partner(b));
            in.premises = {Eq{a, b}, Eq{b, c}};
            in.conclusion = Eq{a, c};
            break;
        }
        case Rule::SubstLeft: {
            MultisetExpr a = g.multiset(0, 4);
            MultisetExpr b = g.equal_partner(a);
            bool strict = g.coin();
            MultisetExpr c = strict ? g.greater_than(b) : g.equal_partner(b);
            in.premises = {Eq{a, b}, relation(strict, b, c)};
            in.conclusion = relation(strict, a, c);
            break;
        }
        case Rule::SubstRight: {
            MultisetExpr a = g.multiset(0, 4);
            MultisetExpr b = g.equal_partner(a);
            bool strict = g.coin();
            std::optional<MultisetExpr> c = strict ? g.less_than(b) : std::nullopt;
            if (!c) {
                strict = false;
                c = g.equal_partner(b);
            }
            in.premises = {Eq{a, b}, relation(strict, *c, b)};
            in.conclusion = relation(strict, *c, a);
            break;
        }
        case Rule::LtTrans: {
            MultisetExpr a = g.multiset(0, 4);
            MultisetExpr b = g.greater_than(a);
            MultisetExpr c = g.greater_than(b);
            in.premises = {Lt{a, b}, Lt{b, c}};
            in.conclusion = Lt{a, c};
            break;
        }
        case Rule::AddBoth: {
            MultisetExpr a = g.multiset(0, 4);
            bool strict = g.coin();
            MultisetExpr b = strict ? g.greater_than(a) : g.equal_partner(a);
            Term t = g.term();
            in.premises = {relation(strict, a, b)};
            in.conclusion = relation(strict, a.plus(t), b.plus(t));
            break;
        }
        case Rule::SingletonPos:
            in.conclusion = Lt{MultisetExpr{}, MultisetExpr{g.term()}};
            break;
        case Rule::WholePart: {
            MultisetExpr m = g.multiset(0, 4);
            in.conclusion = Lt{m, m.plus(g.multiset(1, 3))};
            break;
        }
        case Rule::SplitEq: {
            Term b = g.term(), c = g.term();
            Term a = g.term();
            try {
                a = g.represent(add_two(g.value(b), g.value(c)));
            } catch (const AngleOverflow&) {
            }
            in.premises = {Split{a, b, c}};
            in.conclusion = Eq{MultisetExpr{a}, MultisetExpr{b, c}};
            break;
        }
        case Rule::CongrEq: {
            Term a = g.term();
            Term b = g.coin(0.8) ? g.represent(g.value(a)) : g.term();
            in.premises = {Congr{a, b}};
            in.conclusion = Eq{MultisetExpr{a}, MultisetExpr{b}};
            break;
        }
        case Rule::LtIrrefl: {
            MultisetExpr a = g.multiset(0, 4);
            in.premises = {Lt{a, a}};
            break;
        }
        case Rule::LtAsym: {
            MultisetExpr a = g.multiset(0, 4);
            MultisetExpr b = g.coin() ? g.equal_partner(a) : g.multiset(0, 4);
            in.premises = {Lt{a, b}, Lt{b, a}};
            break;
        }
        case Rule::EqLtClash: {
            MultisetExpr a = g.multiset(0, 4);
            MultisetExpr b = maybe_noise(g.equal_partner(a));
            in.premises = {Eq{a, b}, g.coin() ? Lt{a, b} : Lt{b, a}};
            break;
        }
        case Rule::Hypothesis: {
            if (g.coin(0.8)) {
                Judgment j = g.any_judgment();
                in.premises = {j};
                in.conclusion = j;
            } else {
                in.premises = {Falsum{}};
                in.conclusion = g.any_judgment();
            }
            break;
        }
        case Rule::KernelEval: {
            // The kernel decides literal judgments, so only true ones are
            // legal steps; redraw the few that come out false.
            for (int tries = 0; tries < 64; ++tries) {
                in.conclusion = g.coin(0.8) ? g.comparison() : g.any_judgment();
                if (eval_judgment(in.conclusion, {})) break;
                in.conclusion = Eq{MultisetExpr{}, MultisetExpr{}};
            }
            break;
        }
        case Rule::Cases: {
            MultisetExpr a = g.multiset(0, 4);
            MultisetExpr b;
            switch (g.uniform(0, 2)) {
                case 0: b = g.equal_partner(a); break;
                case 1: b = g.greater_than(a); break;
                default: b = g.multiset(0, 4); break;
            }
            in.cases = CaseSplit{a, b, {}};
            break;
        }
    }
    in.valuation = g.take_valuation();
    return in;
}

namespace {

struct InstanceOutcome {
    bool premises_true = false;
    bool rejected = false;
    bool counterexample = false;
    std::string detail;
};

std::string describe(const RuleInstance& in) {
    std::string s = std::string(rule_name(in.rule)) + ":";
    for (const Judgment& p : in.premises) s += " [" + to_string(p) + "]";
    if (in.cases) {
        s += " cases " + to_string(in.cases->left) + " " + to_string(in.cases->right);
    } else {
        s += " |- " + to_string(in.conclusion);
    }
    s += " under";
    for (const auto& [name, a] : in.valuation) s += " " + name + "=" + to_string(a);
    return s;
}

InstanceOutcome run_instance(const RuleInstance& in) {
    InstanceOutcome out;
    if (in.cases) {
        out.premises_true = true;
        bool some = false;
        for (int i = 0; i < 3; ++i) some = some || eval_judgment(in.cases->branch_hypothesis(i), in.valuation);
        if (!some) {
            out.counterexample = true;
            out.detail = "no case holds: " + describe(in);
        }
        return out;
    }

    ProofContext ctx;
    Step step;
    step.label = "C";
    step.judgment = in.conclusion;
    step.rule = in.rule;
    for (std::size_t i = 0; i < in.premises.size(); ++i) {
        std::string label = "P" + std::to_string(i + 1);
        ctx.add(label, in.premises[i]);
        step.premises.push_back(label);
    }
    if (auto err = check_step(step, ctx)) {
        out.rejected = true;
        out.detail = "checker rejected (" + err->reason + "): " + describe(in);
        return out;
    }

    out.premises_true = true;
    for (const Judgment& p : in.premises) {
        if (!eval_judgment(p, in.valuation)) {
            out.premises_true = false;
            break;
        }
    }
    if (out.premises_true && !eval_judgment(in.conclusion, in.valuation)) {
        out.counterexample = true;
        out.detail = "true premises, false conclusion: " + describe(in);
    }
    return out;
}

}  // namespace

RuleSoundnessReport check_rule_soundness(Rule rule, std::size_t instances, std::uint64_t seed,
                                         ExecPolicy policy) {
    std::vector<InstanceOutcome> outcomes(instances);
    const auto rule_salt = static_cast<std::uint64_t>(rule) << 40;
    for_each_index(instances, policy, [&](std::size_t i) {
        Rng rng(derive_seed(seed, rule_salt + i));
        outcomes[i] = run_instance(random_rule_instance(rule, rng));
    });

    RuleSoundnessReport report{rule, 0, 0, 0, 0, std::nullopt};
    report.instances = instances;
    for (const InstanceOutcome& o : outcomes) {
        report.premises_true += o.premises_true;
        report.rejected += o.rejected;
        report.counterexamples += o.counterexample;
        if ((o.rejected || o.counterexample) && !report.first_failure) report.first_failure = o.detail;
    }
    return report;
}

}  // namespace eukleia
