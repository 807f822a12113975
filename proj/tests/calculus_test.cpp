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


#include <algorithm>
#include <filesystem>
#include <regex>
#include <set>

#include "doctest.h"
#include "eukleia/calculus.hpp"
#include "eukleia/proof_dsl.hpp"
#include "support.hpp"

namespace eukleia {
namespace {

MultisetExpr E(std::string_view text) { return parse_expr(text); }
Term V(const char* name) { return Var{name}; }

Step step(std::string label, Judgment j, Rule r, std::vector<std::string> premises = {}) {
    Step s;
    s.label = std::move(label);
    s.judgment = std::move(j);
    s.rule = r;
    s.premises = std::move(premises);
    return s;
}

// Label of the first rejected step, or "" when the script is accepted.
std::string first_error(const std::string& body) {
    auto err = check_derivation(parse_proof("vars a b c d e;\n" + body));
    return err ? err->label : "";
}

const char* const kCorpus[] = {"prop13.eap", "prop15.eap", "prop16_lemma.eap",
                               "prop25_trichotomy.eap", "postulate5.eap",
                               "four_right_angles.eap"};

std::vector<std::string> mutant_files() {
    std::vector<std::string> out;
    for (const auto& e : std::filesystem::directory_iterator(test::corpus_path("mutants"))) {
        if (e.path().extension() == ".eap") out.push_back(e.path().string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

TEST_CASE("check_step: transitivity with symmetry") {
    ProofContext ctx;
    ctx.add("P1", Eq{E("{a}"), E("{b, c}")});
    ctx.add("P2", Eq{E("{d}"), E("{b, c}")});
    Step sym = step("S1", Eq{E("{b, c}"), E("{d}")}, Rule::EqSym, {"P2"});
    CHECK_FALSE(check_step(sym, ctx));
    ctx.add("S1", sym.judgment);
    CHECK_FALSE(check_step(step("S2", Eq{E("{a}"), E("{d}")}, Rule::EqTrans, {"P1", "S1"}), ctx));
    // Without the symmetry step the middle terms do not line up.
    CHECK(check_step(step("S3", Eq{E("{a}"), E("{d}")}, Rule::EqTrans, {"P1", "P2"}), ctx));
}

TEST_CASE("check_step: AddBoth adds one term") {
    ProofContext ctx;
    ctx.add("P", Eq{E("{a}"), E("{b, c}")});
    CHECK_FALSE(check_step(step("S", Eq{E("{a, t}"), E("{b, c, t}")}, Rule::AddBoth, {"P"}), ctx));
    CHECK_FALSE(check_step(step("S", Eq{E("{a, a}"), E("{b, c, a}")}, Rule::AddBoth, {"P"}), ctx));
    CHECK(check_step(step("S", Eq{E("{a, t, u}"), E("{b, c, t, u}")}, Rule::AddBoth, {"P"}), ctx));
    CHECK(check_step(step("S", Eq{E("{a, t}"), E("{b, c, u}")}, Rule::AddBoth, {"P"}), ctx));
    CHECK(check_step(step("S", Lt{E("{a, t}"), E("{b, c, t}")}, Rule::AddBoth, {"P"}), ctx));
}

TEST_CASE("check_step: Lt {R} {R} is never derivable") {
    Judgment bad = Lt{E("{R}"), E("{R}")};
    ProofContext ctx;
    ctx.add("P", Eq{E("{R}"), E("{R}")});
    ctx.add("Q", Lt{E("{}"), E("{R}")});
    std::vector<std::string> refs[] = {{}, {"P"}, {"Q"}, {"P", "Q"}, {"Q", "P"}, {"Q", "Q"}};
    for (Rule r : kAllRules) {
        if (r == Rule::Cases) continue;
        for (const auto& premises : refs) {
            CAPTURE(rule_name(r));
            CHECK(check_step(step("S", bad, r, premises), ctx));
        }
    }
}

TEST_CASE("check_step rejects unknown premises and reports the step") {
    ProofContext ctx;
    auto err = check_step(step("S4", Eq{E("{a}"), E("{a}")}, Rule::EqSym, {"S9"}), ctx);
    REQUIRE(err);
    CHECK(err->label == "S4");
    CHECK(err->reason.find("S9") != std::string::npos);
}

TEST_CASE("KernelEval is literal-only") {
    ProofContext ctx;
    CHECK_FALSE(check_step(step("S", Lt{E("{ang(3/4), ang(1/1)}"), E("{R, R}")}, Rule::KernelEval), ctx));
    CHECK(check_step(step("S", Lt{E("{R, R}"), E("{ang(3/4), ang(1/1)}")}, Rule::KernelEval), ctx));
    CHECK(check_step(step("S", Lt{E("{x}"), E("{R, R}")}, Rule::KernelEval), ctx));
    CHECK_FALSE(check_step(step("S", Eq{E("{R, R, R, R}"), E("{ang(1/4), ang(-1/3), ang(1/13), R}")},
                                Rule::KernelEval), ctx));
    CHECK_FALSE(check_step(step("S", Split{AngleLit::right(), AngleLit::from_slope_vector(1, 1),
                                           AngleLit::from_slope_vector(1, 1)}, Rule::KernelEval), ctx));
    CHECK(check_step(step("S", Split{V("x"), AngleLit::right(), AngleLit::right()}, Rule::KernelEval), ctx));
    CHECK_FALSE(check_step(step("S", Congr{AngleLit::from_slope_vector(2, 2),
                                           AngleLit::from_slope_vector(1, 1)}, Rule::KernelEval), ctx));
}

struct RuleCase {
    const char* body;
    const char* fails_at;
};

const RuleCase kRuleCases[] = {
    {"S1: Eq {a, b} {b, a} by eqrefl;", ""},
    {"S1: Eq {a} {b} by eqrefl;", "S1"},
    {"S1: Eq {a, a} {a} by eqrefl;", "S1"},
    {"hyp H: Eq {a} {b, c};\nS1: Eq {c, b} {a} by eqsym H;", ""},
    {"hyp H: Lt {a} {b};\nS1: Lt {b} {a} by eqsym H;", "S1"},
    {"hyp H: Eq {a} {b};\nhyp K: Eq {b} {c};\nS1: Eq {a} {c} by eqtrans H K;", ""},
    {"hyp H: Eq {a} {b};\nhyp K: Eq {b} {c};\nS1: Eq {a} {c} by eqtrans K H;", "S1"},
    {"hyp H: Eq {a} {b};\nhyp K: Lt {b} {c};\nS1: Lt {a} {c} by substleft H K;", ""},
    {"hyp H: Eq {a} {b};\nhyp K: Eq {b} {c};\nS1: Eq {a} {c} by substleft H K;", ""},
    {"hyp H: Eq {a} {b};\nhyp K: Lt {c} {b};\nS1: Lt {c} {a} by substright H K;", ""},
    {"hyp H: Eq {a} {b};\nhyp K: Lt {c} {b};\nS1: Lt {c} {a} by substleft H K;", "S1"},
    {"hyp H: Eq {a} {b};\nhyp K: Lt {a} {c};\nS1: Lt {b} {c} by substleft H K;", "S1"},
    {"hyp H: Lt {a} {b};\nhyp K: Lt {b} {c};\nS1: Lt {a} {c} by lttrans H K;", ""},
    {"hyp H: Lt {a} {b};\nhyp K: Lt {c} {b};\nS1: Lt {a} {c} by lttrans H K;", "S1"},
    {"hyp H: Lt {a} {b};\nS1: Lt {a, c} {b, c} by addboth H;", ""},
    {"hyp H: Lt {a} {b};\nS1: Lt {a, c, c} {b, c, c} by addboth H;", "S1"},
    {"hyp H: Lt {a} {b};\nS1: Eq {a, c} {b, c} by addboth H;", "S1"},
    {"S1: Lt {} {a} by singletonpos;", ""},
    {"S1: Lt {} {a, b} by singletonpos;", "S1"},
    {"S1: Lt {a} {} by singletonpos;", "S1"},
    {"S1: Lt {a} {b, a} by wholepart;", ""},
    {"S1: Lt {a} {a} by wholepart;", "S1"},
    {"S1: Lt {a, b} {a} by wholepart;", "S1"},
    {"hyp H: Split a b c;\nS1: Eq {a} {c, b} by spliteq H;", ""},
    {"hyp H: Split a b c;\nS1: Eq {b} {a, c} by spliteq H;", "S1"},
    {"hyp H: Congr a b;\nS1: Eq {a} {b} by congreq H;", ""},
    {"hyp H: Congr a b;\nS1: Eq {a, c} {b, c} by congreq H;", "S1"},
    {"hyp H: Lt {a} {a};\nS1: False by ltirrefl H;", ""},
    {"hyp H: Lt {a} {b};\nS1: False by ltirrefl H;", "S1"},
    {"hyp H: Lt {a} {b};\nhyp K: Lt {b} {a};\nS1: False by ltasym H K;", ""},
    {"hyp H: Lt {a} {b};\nhyp K: Lt {a} {b};\nS1: False by ltasym H K;", "S1"},
    {"hyp H: Eq {a} {b};\nhyp K: Lt {a} {b};\nS1: False by eqltclash H K;", ""},
    {"hyp H: Eq {a} {b};\nhyp K: Lt {b} {a};\nS1: False by eqltclash H K;", ""},
    {"hyp H: Eq {a} {b};\nhyp K: Lt {a} {c};\nS1: False by eqltclash H K;", "S1"},
    {"hyp H: False;\nS1: Lt {a} {a} by hypothesis H;", ""},
    {"hyp H: Lt {a} {b};\nS1: Lt {a} {b} by hypothesis H;", ""},
    {"hyp H: Lt {a} {b};\nS1: Lt {b} {a} by hypothesis H;", "S1"},
    {"hyp H: Eq {a} {b};\nS1: Eq {a} {b} by eqsym H, H;", "S1"},
    {"S1: Eq {a} {a} by eqrefl;\nS2: Eq {a} {a} by eqsym S3;\nS3: Eq {a} {a} by eqrefl;", "S2"},
    // Cases: all three branches must end in the goal.
    {"S1: Eq {a} {a} by cases {a} {b} {X: Eq {a} {a} by eqrefl;} {Y: Eq {a} {a} by eqrefl;}"
     " {Z: Eq {a} {a} by eqrefl;};", ""},
    {"S1: Eq {a} {a} by cases {a} {b} {X: Eq {a} {a} by eqrefl;} {}"
     " {Z: Eq {a} {a} by eqrefl;};", "S1"},
    {"S1: Eq {a} {a} by cases {a} {b} {X: Eq {a} {a} by eqrefl;} {Y: Eq {b} {b} by eqrefl;}"
     " {Z: Eq {a} {a} by eqrefl;};", "S1"},
    {"S1: Lt {a} {b} by cases {a} {b} {X: Lt {a} {b} by hypothesis case;}"
     " {Y: Lt {a} {b} by hypothesis case;} {Z: Lt {a} {b} by hypothesis case;};", "Y"},
    {"S1: Eq {a} {a} by cases {a} {b} {X: Eq {a} {a} by eqrefl;} {Y: Eq {a} {a} by eqrefl;}"
     " {Z: Eq {a} {a} by eqrefl;};\nS2: Eq {a} {a} by eqsym X;", "S2"},
};

TEST_CASE("rule acceptance table") {
    for (const RuleCase& rc : kRuleCases) {
        CAPTURE(rc.body);
        CHECK(first_error(rc.body) == rc.fails_at);
    }
}

TEST_CASE("undeclared variables are rejected") {
    Derivation d;
    d.vars = {"a"};
    d.steps.push_back(step("S1", Eq{E("{a}"), E("{b}")}, Rule::EqRefl));
    auto err = check_derivation(d);
    REQUIRE(err);
    CHECK(err->label == "S1");
}

TEST_CASE("duplicate labels are rejected") {
    Derivation d;
    d.vars = {"a"};
    d.steps.push_back(step("S1", Eq{E("{a}"), E("{a}")}, Rule::EqRefl));
    d.steps.push_back(step("S1", Eq{E("{a}"), E("{a}")}, Rule::EqRefl));
    auto err = check_derivation(d);
    REQUIRE(err);
    CHECK(err->ordinal == 2);
}

TEST_CASE("check_derivation on the corpus") {
    for (const char* name : kCorpus) {
        CAPTURE(name);
        Derivation d = parse_proof(test::read_file(test::corpus_path(name)));
        auto err = check_derivation(d);
        CHECK_FALSE(err);
    }
    CHECK_FALSE(check_derivation(Derivation{}));
}

TEST_CASE("prop13 without its AddBoth step fails at the first dependent step") {
    Derivation d = parse_proof(test::read_file(test::corpus_path("prop13.eap")));
    auto it = std::find_if(d.steps.begin(), d.steps.end(),
                           [](const Step& s) { return s.rule == Rule::AddBoth; });
    REQUIRE(it != d.steps.end());
    std::string removed = it->label;
    d.steps.erase(it);
    auto dependent = std::find_if(d.steps.begin(), d.steps.end(), [&](const Step& s) {
        return std::count(s.premises.begin(), s.premises.end(), removed) > 0;
    });
    REQUIRE(dependent != d.steps.end());
    auto err = check_derivation(d);
    REQUIRE(err);
    CHECK(err->label == dependent->label);
}

TEST_CASE("mutants are rejected at the annotated step") {
    auto files = mutant_files();
    CHECK(files.size() >= 10);
    std::regex expect("# expect: (\\S+)");
    for (const auto& path : files) {
        CAPTURE(path);
        std::string text = test::read_file(path);
        std::smatch m;
        REQUIRE(std::regex_search(text, m, expect));
        auto err = check_derivation(parse_proof(text));
        REQUIRE(err);
        CHECK(err->label == m[1].str());
        CHECK(err->span.line >= 1);
        CHECK_FALSE(err->reason.empty());
    }
}

TEST_CASE("derive_whole_part") {
    auto one = derive_whole_part(E("{}"), E("{a}"));
    REQUIRE(one.size() == 1);
    CHECK(one[0].rule == Rule::SingletonPos);
    CHECK(one[0].judgment == Judgment{Lt{E("{}"), E("{a}")}});

    auto two = derive_whole_part(E("{a}"), E("{b}"));
    REQUIRE(two.size() == 2);
    CHECK(two[0].rule == Rule::SingletonPos);
    CHECK(two[1].rule == Rule::AddBoth);
    CHECK(two[1].judgment == Judgment{Lt{E("{a}"), E("{a, b}")}});

    CHECK_THROWS_AS(derive_whole_part(E("{}"), E("{}")), EmptyPart);
}

TEST_CASE("property: derive_whole_part output always checks") {
    test::Gen g(53);
    const char* names[] = {"a", "b", "c", "d"};
    for (int i = 0; i < 500; ++i) {
        auto random_expr = [&](int lo, int hi) {
            std::vector<Term> terms;
            int n = g.uniform(lo, hi);
            for (int k = 0; k < n; ++k) {
                if (g.chance(0.3)) terms.push_back(g.angle(20));
                else terms.push_back(Var{names[g.uniform(0, 3)]});
            }
            return MultisetExpr(terms);
        };
        MultisetExpr m = random_expr(0, 5), n = random_expr(1, 5);
        auto steps = derive_whole_part(m, n, "P");
        ProofContext ctx;
        for (const Step& s : steps) {
            CHECK(s.rule != Rule::WholePart);
            auto err = check_step(s, ctx);
            CHECK_FALSE(err);
            ctx.add(s.label, s.judgment);
        }
        CHECK(steps.back().judgment == Judgment{Lt{m, m.plus(n)}});
    }
}

TEST_CASE("property: determinism") {
    std::vector<Derivation> all;
    for (const auto& path : mutant_files()) all.push_back(parse_proof(test::read_file(path)));
    std::vector<std::string> first;
    for (const auto& d : all) {
        auto err = check_derivation(d);
        first.push_back(err ? err->label + "|" + err->reason : "");
    }
    for (int round = 0; round < 3; ++round) {
        for (std::size_t i = all.size(); i-- > 0;) {
            auto err = check_derivation(all[i]);
            CHECK((err ? err->label + "|" + err->reason : "") == first[i]);
        }
    }
}

// Labels cited by any step, including steps nested in case blocks.
void collect_refs(const std::vector<Step>& steps, std::set<std::string>& out) {
    for (const Step& s : steps) {
        out.insert(s.premises.begin(), s.premises.end());
        if (s.cases) for (const auto& b : s.cases->branches) collect_refs(b, out);
    }
}

bool contains_label(const Step& s, const std::string& label) {
    if (s.label == label) return true;
    if (!s.cases) return false;
    for (const auto& b : s.cases->branches) {
        for (const Step& inner : b) {
            if (contains_label(inner, label)) return true;
        }
    }
    return false;
}

TEST_CASE("property: deleting an unreferenced step is local") {
    std::vector<std::string> paths;
    for (const char* name : kCorpus) paths.push_back(test::corpus_path(name));
    for (const auto& p : mutant_files()) paths.push_back(p);
    for (const auto& path : paths) {
        CAPTURE(path);
        Derivation d = parse_proof(test::read_file(path));
        auto base = check_derivation(d);
        std::set<std::string> refs;
        collect_refs(d.steps, refs);
        for (std::size_t i = 0; i < d.steps.size(); ++i) {
            if (refs.count(d.steps[i].label)) continue;
            if (base && contains_label(d.steps[i], base->label)) continue;
            Derivation cut = d;
            cut.steps.erase(cut.steps.begin() + static_cast<std::ptrdiff_t>(i));
            auto err = check_derivation(cut);
            CHECK(err.has_value() == base.has_value());
            if (err && base) CHECK(err->label == base->label);
        }
    }
}

TEST_CASE("property: term order inside expressions is irrelevant") {
    test::Gen g(59);
    std::regex expr("\\{([^{}:;]*,[^{}:;]*)\\}");
    std::vector<std::string> paths;
    for (const char* name : kCorpus) paths.push_back(test::corpus_path(name));
    for (const auto& p : mutant_files()) paths.push_back(p);
    for (const auto& path : paths) {
        std::string text = test::read_file(path);
        Derivation d = parse_proof(text);
        auto base = check_derivation(d);
        for (int round = 0; round < 5; ++round) {
            std::string shuffled;
            auto begin = std::sregex_iterator(text.begin(), text.end(), expr);
            std::size_t last = 0;
            for (auto it = begin; it != std::sregex_iterator(); ++it) {
                std::vector<std::string> terms;
                std::string inner = (*it)[1].str(), cur;
                std::stringstream ss(inner);
                while (std::getline(ss, cur, ',')) terms.push_back(cur);
                std::shuffle(terms.begin(), terms.end(), g.engine());
                shuffled += text.substr(last, static_cast<std::size_t>(it->position()) - last) + "{";
                for (std::size_t k = 0; k < terms.size(); ++k) shuffled += (k ? "," : "") + terms[k];
                shuffled += "}";
                last = static_cast<std::size_t>(it->position() + it->length());
            }
            shuffled += text.substr(last);
            CAPTURE(shuffled);
            Derivation p = parse_proof(shuffled);
            CHECK(p == d);
            auto err = check_derivation(p);
            CHECK(err.has_value() == base.has_value());
            if (err && base) CHECK(err->label == base->label);
        }
    }
}

TEST_CASE("rule names") {
    for (Rule r : kAllRules) {
        CHECK(rule_from_name(rule_name(r)) == r);
        std::string lower(rule_name(r));
        std::transform(lower.begin(), lower.end(), lower.begin(), ::tolower);
        CHECK(rule_from_name(lower) == r);
    }
    CHECK(rule_from_name("split") == Rule::SplitEq);
    CHECK(rule_from_name("congr") == Rule::CongrEq);
    CHECK(rule_from_name("hyp") == Rule::Hypothesis);
    CHECK_FALSE(rule_from_name("modusponens"));
}

}  // namespace
}  // namespace eukleia
