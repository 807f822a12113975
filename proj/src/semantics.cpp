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

#include "eukleia/semantics.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace eukleia {

const AngleLit& value_of(const Term& t, const Valuation& v) {
    if (const AngleLit* a = std::get_if<AngleLit>(&t)) return *a;
    const std::string& name = std::get<Var>(t).name;
    auto it = v.find(name);
    if (it == v.end()) throw UnboundVariable("no value for variable " + name);
    return it->second;
}

std::vector<AngleLit> value_of(const MultisetExpr& m, const Valuation& v) {
    std::vector<AngleLit> out;
    out.reserve(m.size());
    for (const Term& t : m.terms()) out.push_back(value_of(t, v));
    return out;
}

bool eval_judgment(const Judgment& j, const Valuation& v) {
    if (const Eq* e = std::get_if<Eq>(&j)) {
        return compare_multisets(value_of(e->lhs, v), value_of(e->rhs, v)) == Ordering3::Equal;
    }
    if (const Lt* l = std::get_if<Lt>(&j)) {
        return compare_multisets(value_of(l->lhs, v), value_of(l->rhs, v)) == Ordering3::Less;
    }
    if (const Split* s = std::get_if<Split>(&j)) {
        const AngleLit& whole = value_of(s->whole, v);
        try {
            return add_two(value_of(s->part1, v), value_of(s->part2, v)) == whole;
        } catch (const AngleOverflow&) {
            return false;
        }
    }
    if (const Congr* c = std::get_if<Congr>(&j)) {
        return value_of(c->a, v) == value_of(c->b, v);
    }
    return false;  // Falsum
}

AngleLit random_angle(Rng& rng, int coord_bound) {
    std::uniform_int_distribution<int> xs(-coord_bound, coord_bound);
    std::uniform_int_distribution<int> ys(1, coord_bound);
    int x = xs(rng);
    int y = ys(rng);
    return AngleLit::from_slope_vector(x, y);
}

std::optional<AngleLit> remainder_angle(const AngleLit& whole, const AngleLit& part) {
    // whole * conj(part); positive y iff part < whole
    BigInt x = whole.x() * part.x() + whole.y() * part.y();
    BigInt y = whole.y() * part.x() - whole.x() * part.y();
    if (y <= 0) return std::nullopt;
    return AngleLit::from_slope_vector(std::move(x), std::move(y));
}

namespace {

// Hypotheses compiled into angle classes: Congr merges classes, a literal
// pins its class, Split relates three classes.
class ValuationSampler {
public:
    ValuationSampler(const std::vector<std::string>& vars, const std::vector<Judgment>& hyps,
                     SamplerOptions opts)
        : opts_(opts), hyps_(hyps) {
        names_ = vars;
        for (const Judgment& h : hyps) {
            for (const std::string& n : variables_of(h)) {
                if (std::find(names_.begin(), names_.end(), n) == names_.end()) names_.push_back(n);
            }
        }
        parent_.resize(names_.size());
        std::iota(parent_.begin(), parent_.end(), 0);
        fixed_.resize(names_.size());

        for (const Judgment& h : hyps) {
            if (const Congr* c = std::get_if<Congr>(&h)) unite(class_of(c->a), class_of(c->b));
        }
        for (const Judgment& h : hyps) {
            if (const Split* s = std::get_if<Split>(&h)) {
                splits_.push_back({class_of(s->whole), class_of(s->part1), class_of(s->part2)});
            }
        }
        for (auto& sp : splits_) {
            for (int& c : sp) c = find(c);
        }
        for (const Judgment& h : hyps) {
            if (const Eq* e = std::get_if<Eq>(&h)) {
                EqConstraint ec;
                for (const Term& t : e->lhs.terms()) ec.sides[0].push_back(find(class_of(t)));
                for (const Term& t : e->rhs.terms()) ec.sides[1].push_back(find(class_of(t)));
                eqs_.push_back(std::move(ec));
            }
        }
    }

    std::optional<Valuation> sample(Rng& rng) const {
        if (impossible_) return std::nullopt;
        for (int attempt = 0; attempt < opts_.retry_budget; ++attempt) {
            if (auto v = attempt_once(rng)) return v;
        }
        return std::nullopt;
    }

private:
    struct EqConstraint {
        std::vector<int> sides[2];
    };

    int find(int c) const {
        while (parent_[static_cast<std::size_t>(c)] != c) c = parent_[static_cast<std::size_t>(c)];
        return c;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent_[static_cast<std::size_t>(b)] = a;
        auto& fa = fixed_[static_cast<std::size_t>(a)];
        auto& fb = fixed_[static_cast<std::size_t>(b)];
        if (fa && fb && !(*fa == *fb)) impossible_ = true;
        if (!fa) fa = fb;
    }

    int class_of(const Term& t) {
        if (const Var* v = std::get_if<Var>(&t)) {
            auto it = std::find(names_.begin(), names_.end(), v->name);
            return static_cast<int>(it - names_.begin());
        }
        parent_.push_back(static_cast<int>(parent_.size()));
        fixed_.push_back(std::get<AngleLit>(t));
        return parent_.back();
    }

    std::optional<Valuation> attempt_once(Rng& rng) const {
        std::vector<std::optional<AngleLit>> val(parent_.size());
        for (std::size_t c = 0; c < parent_.size(); ++c) {
            if (find(static_cast<int>(c)) == static_cast<int>(c)) val[c] = fixed_[c];
        }
        auto at = [&](int c) -> std::optional<AngleLit>& { return val[static_cast<std::size_t>(c)]; };

        for (;;) {
            // Propagate split constraints to a fixed point.
            for (bool changed = true; changed;) {
                changed = false;
                for (const auto& [whole, p1, p2] : splits_) {
                    if (at(p1) && at(p2) && !at(whole)) {
                        try {
                            at(whole) = add_two(*at(p1), *at(p2));
                        } catch (const AngleOverflow&) {
                            return std::nullopt;
                        }
                        changed = true;
                    } else if (at(whole) && (at(p1).has_value() != at(p2).has_value())) {
                        int known = at(p1) ? p1 : p2;
                        int unknown = at(p1) ? p2 : p1;
                        auto rest = remainder_angle(*at(whole), *at(known));
                        if (!rest) return std::nullopt;
                        at(unknown) = std::move(rest);
                        changed = true;
                    }
                }
                for (const EqConstraint& ec : eqs_) {
                    switch (solve_eq(ec, val)) {
                        case Solve::Failed: return std::nullopt;
                        case Solve::Assigned: changed = true; break;
                        case Solve::Idle: break;
                    }
                }
            }
            // Sample the first free class, in variable order.
            bool sampled = false;
            for (std::size_t i = 0; i < names_.size() && !sampled; ++i) {
                int c = find(static_cast<int>(i));
                if (!at(c)) {
                    at(c) = random_angle(rng, opts_.coord_bound);
                    sampled = true;
                }
            }
            if (!sampled) break;
        }

        Valuation v;
        for (std::size_t i = 0; i < names_.size(); ++i) v.emplace(names_[i], *at(find(static_cast<int>(i))));
        for (const Judgment& h : hyps_) {
            if (!eval_judgment(h, v)) return std::nullopt;
        }
        return v;
    }

    enum class Solve { Idle, Assigned, Failed };

    // When an Eq hypothesis has a single unknown occurrence, that angle is the
    // difference of the two known sums. The winding is not pinned here; the
    // final hypothesis check rejects a wrong one.
    static Solve solve_eq(const EqConstraint& ec, std::vector<std::optional<AngleLit>>& val) {
        int unknown_side = -1, unknown = -1, occurrences = 0;
        for (int s = 0; s < 2; ++s) {
            for (int c : ec.sides[s]) {
                if (!val[static_cast<std::size_t>(c)]) {
                    ++occurrences;
                    unknown_side = s;
                    unknown = c;
                }
            }
        }
        if (occurrences != 1) return Solve::Idle;
        std::vector<AngleLit> rest, other;
        bool skipped = false;
        for (int c : ec.sides[unknown_side]) {
            if (c == unknown && !skipped) {
                skipped = true;
                continue;
            }
            rest.push_back(*val[static_cast<std::size_t>(c)]);
        }
        for (int c : ec.sides[1 - unknown_side]) other.push_back(*val[static_cast<std::size_t>(c)]);
        PlaneVector o = sum_multiset(other).rep, r = sum_multiset(rest).rep;
        BigInt x = o.x() * r.x() + o.y() * r.y();
        BigInt y = o.y() * r.x() - o.x() * r.y();
        if (y <= 0) return Solve::Failed;
        val[static_cast<std::size_t>(unknown)] = AngleLit::from_slope_vector(std::move(x), std::move(y));
        return Solve::Assigned;
    }

    SamplerOptions opts_;
    std::vector<Judgment> hyps_;
    std::vector<std::string> names_;
    std::vector<int> parent_;                   // union-find over variables, then literals
    std::vector<std::optional<AngleLit>> fixed_;
    std::vector<std::array<int, 3>> splits_;    // (whole, part1, part2) class roots
    std::vector<EqConstraint> eqs_;
    bool impossible_ = false;
};

std::vector<Judgment> hypothesis_judgments(const Derivation& d) {
    std::vector<Judgment> out;
    out.reserve(d.hypotheses.size());
    for (const Hypothesis& h : d.hypotheses) out.push_back(h.judgment);
    return out;
}

const Step* first_false_step(const std::vector<Step>& steps, const Valuation& v) {
    for (const Step& s : steps) {
        if (s.cases) {
            for (int i = 0; i < 3; ++i) {
                if (!eval_judgment(s.cases->branch_hypothesis(i), v)) continue;
                if (const Step* bad = first_false_step(s.cases->branches[i], v)) return bad;
            }
        }
        if (!eval_judgment(s.judgment, v)) return &s;
    }
    return nullptr;
}

struct TrialOutcome {
    bool satisfied = false;
    const Step* bad = nullptr;
    Valuation valuation;
};

}  // namespace

std::optional<Valuation> random_valuation(const std::vector<std::string>& vars,
                                          const std::vector<Judgment>& hypotheses,
                                          std::uint64_t seed, SamplerOptions opts) {
    Rng rng(seed);
    return ValuationSampler(vars, hypotheses, opts).sample(rng);
}

ModelCheckReport model_check_derivation(const Derivation& d, std::size_t trials,
                                        std::uint64_t seed, ExecPolicy policy,
                                        SamplerOptions opts) {
    const ValuationSampler sampler(d.vars, hypothesis_judgments(d), opts);
    std::vector<TrialOutcome> outcomes(trials);
    for_each_index(trials, policy, [&](std::size_t t) {
        Rng rng(derive_seed(seed, t));
        auto v = sampler.sample(rng);
        if (!v) return;
        TrialOutcome& out = outcomes[t];
        out.satisfied = true;
        out.bad = first_false_step(d.steps, *v);
        if (out.bad) out.valuation = std::move(*v);
    });

    ModelCheckReport report;
    report.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
        const TrialOutcome& o = outcomes[t];
        if (!o.satisfied) continue;
        ++report.satisfied;
        if (!o.bad) continue;
        if (report.counterexamples++ == 0) {
            report.first = Counterexample{t, o.bad->label, o.bad->span, o.bad->judgment, o.valuation};
        }
    }
    return report;
}

}  // namespace eukleia
