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


// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numbers>
#include <regex>
#include <sstream>

#include "eukleia/cli.hpp"
#include "eukleia/proof_dsl.hpp"
#include "eukleia/soundness.hpp"
#include "json.hpp"
#include "support.hpp"

namespace eukleia {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& why) {
        if (!ok && pass) {
            pass = false;
            detail = why;
        }
    }
};

struct Criterion {
    int id;
    const char* name;
    double limit_ms;  // 0: no time limit
    std::function<Verdict()> run;
};

struct CliResult {
    int code;
    std::string out;
};

CliResult cli_run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str()};
}

std::vector<std::string> corpus_files() {
    std::vector<std::string> out;
    for (const auto& e : fs::directory_iterator(EUKLEIA_CORPUS_DIR)) {
        if (e.path().extension() == ".eap") out.push_back(e.path().string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

Verdict four_right_angles() {
    Verdict v;
    CliResult r = cli_run({"eval", "{R,R,R,R}"});
    v.require(r.code == cli::kOk, "eval exited " + std::to_string(r.code));
    v.require(r.out == "turns=1, rep=(1,0)\n", "eval printed " + r.out);
    std::vector<AngleLit> rights(4, AngleLit::right());
    AngleSum s = sum_multiset(rights);
    v.require(s.windings == 1 && s.rep == PlaneVector::unit(), "kernel sum " + to_string(s));
    return v;
}

Verdict adjacent_angles() {
    Verdict v;
    std::string good = test::corpus_path("prop13.eap");
    v.require(cli_run({"check", good}).code == cli::kOk, "prop13.eap rejected");

    Derivation d = parse_proof(test::read_file(good));
    auto addboth = std::find_if(d.steps.begin(), d.steps.end(),
                                [](const Step& s) { return s.rule == Rule::AddBoth; });
    v.require(addboth != d.steps.end(), "no AddBoth step");
    if (!v.pass) return v;
    // The transitivity step must rest on the AddBoth step.
    bool chained = std::any_of(d.steps.begin(), d.steps.end(), [&](const Step& s) {
        return s.rule == Rule::EqTrans &&
               std::count(s.premises.begin(), s.premises.end(), addboth->label) > 0;
    });
    v.require(chained, "EqTrans does not cite the AddBoth step");

    CliResult broken = cli_run({"check", test::corpus_path("prop13_broken.eap"), "--json"});
    v.require(broken.code == cli::kStepError,
              "prop13_broken.eap exited " + std::to_string(broken.code));

    Derivation cut = d;
    std::string removed = addboth->label;
    cut.steps.erase(cut.steps.begin() + (addboth - d.steps.begin()));
    auto err = check_derivation(cut);
    auto dependent = std::find_if(cut.steps.begin(), cut.steps.end(), [&](const Step& s) {
        return std::count(s.premises.begin(), s.premises.end(), removed) > 0;
    });
    v.require(err && dependent != cut.steps.end() && err->label == dependent->label,
              "deleting the AddBoth step was not caught at its first dependent");
    return v;
}

Verdict fifth_postulate() {
    Verdict v;
    CliResult r = cli_run({"compare", "{ang(3/4), ang(1/1)}", "{R,R}"});
    v.require(r.code == cli::kOk, "compare exited " + std::to_string(r.code));
    v.require(r.out.rfind("LESS\n", 0) == 0, "compare printed " + r.out);

    double oracle = std::atan2(4.0, 3.0) + std::numbers::pi / 4;
    v.require(oracle < std::numbers::pi - 1e-9, "float oracle disagrees");
    std::vector<AngleLit> m{AngleLit::from_slope_vector(3, 4), AngleLit::from_slope_vector(1, 1)};
    v.require(std::abs(test::measure(sum_multiset(m)) - oracle) < 1e-9,
              "exact sum differs from the float oracle");
    return v;
}

Verdict order_laws() {
    Verdict v;
    test::Gen g(20260101);
    for (int i = 0; i < 10000 && v.pass; ++i) {
        auto a = g.multiset(6, 50), b = g.multiset(6, 50), c = g.multiset(6, 50);
        Ordering3 ab = compare_multisets(a, b), ba = compare_multisets(b, a);
        Ordering3 bc = compare_multisets(b, c), ac = compare_multisets(a, c);
        v.require(compare_multisets(a, a) == Ordering3::Equal, "reflexivity, case " + std::to_string(i));
        v.require(ba == reversed(ab), "antisymmetry, case " + std::to_string(i));
        if (ab != Ordering3::Greater && bc != Ordering3::Greater) {
            Ordering3 want = (ab == Ordering3::Equal && bc == Ordering3::Equal) ? Ordering3::Equal
                                                                                : Ordering3::Less;
            v.require(ac == want, "transitivity, case " + std::to_string(i));
        }
        if (ab != Ordering3::Less && bc != Ordering3::Less) {
            Ordering3 want = (ab == Ordering3::Equal && bc == Ordering3::Equal) ? Ordering3::Equal
                                                                                : Ordering3::Greater;
            v.require(ac == want, "transitivity, case " + std::to_string(i));
        }
    }
    return v;
}

Verdict rule_soundness() {
    Verdict v;
    for (Rule r : kAllRules) {
        RuleSoundnessReport rep = check_rule_soundness(r, 10000, 7);
        v.require(rep.instances == 10000 && rep.ok(),
                  std::string(rule_name(r)) + ": " + rep.first_failure.value_or("?"));
    }
    return v;
}

Verdict split_duality() {
    Verdict v;
    test::Gen g(606);
    int found = 0;
    while (found < 10000 && v.pass) {
        AngleLit b = g.angle(50), c = g.angle(50);
        AngleLit a = AngleLit::right();
        try {
            a = add_two(b, c);
        } catch (const AngleOverflow&) {
            continue;
        }
        ++found;
        std::vector<AngleLit> whole{a}, parts{b, c};
        v.require(compare_multisets(whole, parts) == Ordering3::Equal,
                  to_string(b) + " + " + to_string(c));
    }
    return v;
}

Verdict winding_agreement() {
    Verdict v;
    test::Gen g(707);
    for (int i = 0; i < 1000 && v.pass; ++i) {
        std::vector<AngleLit> m;
        int n = g.uniform(0, 20);
        for (int k = 0; k < n; ++k) m.push_back(g.angle(1000));
        double err = std::abs(test::measure(sum_multiset(m)) - test::float_sum(m));
        v.require(err < 1e-9, "case " + std::to_string(i) + " off by " + std::to_string(err));
    }
    return v;
}

Verdict mutation_resistance() {
    Verdict v;
    std::regex expect("# expect: (\\S+)");
    int count = 0;
    for (const auto& e : fs::directory_iterator(test::corpus_path("mutants"))) {
        std::string text = test::read_file(e.path().string());
        std::string name = e.path().filename().string();
        std::smatch m;
        v.require(std::regex_search(text, m, expect), name + " has no expect line");
        if (!v.pass) break;
        ++count;
        auto err = check_derivation(parse_proof(text));
        v.require(err.has_value(), name + " was accepted");
        if (!err) break;
        v.require(err->label == m[1].str(), name + " rejected at " + err->label);
        // The reported span must point at the label of the failing step.
        std::istringstream lines(text);
        std::string line;
        for (int k = 0; k < err->span.line; ++k) std::getline(lines, line);
        v.require(line.compare(static_cast<std::size_t>(err->span.column - 1),
                               err->label.size() + 1, err->label + ":") == 0,
                  name + " span does not point at " + err->label);
    }
    v.require(count >= 10, "only " + std::to_string(count) + " mutants");
    return v;
}

Verdict determinism() {
    Verdict v;
    for (const std::string& path : corpus_files()) {
        std::vector<std::string> args{"modelcheck", path, "--trials", "1000", "--seed", "7", "--json"};
        CliResult first = cli_run(args);
        CliResult second = cli_run(args);
        v.require(!first.out.empty() && first.out == second.out,
                  fs::path(path).filename().string() + " differs between runs");
        // A single worker must agree with the default; only the echo differs.
        std::vector<std::string> single = args;
        single.insert(single.begin(), {"--threads", "1"});
        auto strip = [](const std::string& out) {
            nlohmann::ordered_json j = nlohmann::ordered_json::parse(out);
            j.erase("command");
            return j.dump();
        };
        v.require(strip(cli_run(single).out) == strip(first.out),
                  fs::path(path).filename().string() + " differs with one worker");
    }
    return v;
}

}  // namespace
}  // namespace eukleia

int main() {
    using namespace eukleia;
    const Criterion criteria[] = {
        {1, "four right angles compose one full turn", 10, four_right_angles},
        {2, "adjacent-angles proof and its mutant", 50, adjacent_angles},
        {3, "fifth-postulate comparison", 10, fifth_postulate},
        {4, "order laws on 10000 random triples", 5000, order_laws},
        {5, "rule soundness, 10000 instances per rule", 30000, rule_soundness},
        {6, "split/compose duality on 10000 pairs", 5000, split_duality},
        {7, "winding-measure agreement on 1000 multisets", 5000, winding_agreement},
        {8, "mutation resistance", 1000, mutation_resistance},
        {9, "byte-identical modelcheck reports", 0, determinism},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        auto start = Clock::now();
        Verdict v = c.run();
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        if (c.limit_ms > 0 && ms >= c.limit_ms) {
            v.require(false, "took " + std::to_string(ms) + " ms");
        }
        std::printf("[%s] %d. %s (%.2f ms", v.pass ? "PASS" : "FAIL", c.id, c.name, ms);
        if (c.limit_ms > 0) std::printf(", limit %.0f ms", c.limit_ms);
        std::printf(")%s%s\n", v.pass ? "" : ": ", v.detail.c_str());
        if (!v.pass) ++failures;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures,
                std::size(criteria));
    return failures == 0 ? 0 : 1;
}
