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


// Serial reference against the OpenMP path: wall time and agreement.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "eukleia/cli.hpp"
#include "eukleia/proof_dsl.hpp"
#include "eukleia/soundness.hpp"

namespace {

using namespace eukleia;
using Clock = std::chrono::steady_clock;

template <class F>
double time_ms(F&& f) {
    auto start = Clock::now();
    f();
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool same(const ModelCheckReport& a, const ModelCheckReport& b) {
    return a.trials == b.trials && a.satisfied == b.satisfied &&
           a.counterexamples == b.counterexamples && a.first.has_value() == b.first.has_value() &&
           (!a.first || (a.first->trial == b.first->trial && a.first->valuation == b.first->valuation));
}

bool same(const RuleSoundnessReport& a, const RuleSoundnessReport& b) {
    return a.premises_true == b.premises_true && a.rejected == b.rejected &&
           a.counterexamples == b.counterexamples && a.first_failure == b.first_failure;
}

void row(const std::string& what, double serial, double parallel, bool agree) {
    std::printf("%-32s %10.1f %10.1f %8.2fx  %s\n", what.c_str(), serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, agree ? "agree" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"serial vs parallel timings"};
    std::size_t trials = 5000, instances = 5000;
    int threads = 0;
    app.add_option("--trials", trials, "model-check trials per corpus script");
    app.add_option("--instances", instances, "instances per rule");
    app.add_option("--threads", threads, "OpenMP threads (0: default)");
    CLI11_PARSE(app, argc, argv);
    set_worker_threads(threads);

    std::printf("worker threads: %d\n", worker_threads());
    std::printf("%-32s %10s %10s %9s\n", "workload", "serial ms", "parallel ms", "speedup");
    bool all_agree = true;

    std::vector<std::filesystem::path> scripts;
    for (const auto& e : std::filesystem::directory_iterator(cli::corpus_dir())) {
        std::string stem = e.path().stem().string();
        if (e.path().extension() == ".eap" && !stem.ends_with("_broken")) scripts.push_back(e.path());
    }
    std::sort(scripts.begin(), scripts.end());
    for (const auto& path : scripts) {
        std::ifstream in(path);
        std::stringstream ss;
        ss << in.rdbuf();
        Derivation d = parse_proof(ss.str());
        ModelCheckReport s, p;
        double ts = time_ms([&] { s = model_check_derivation(d, trials, 7, ExecPolicy::Serial); });
        double tp = time_ms([&] { p = model_check_derivation(d, trials, 7, ExecPolicy::Parallel); });
        bool agree = same(s, p);
        all_agree = all_agree && agree;
        row("modelcheck " + path.filename().string(), ts, tp, agree);
    }

    double total_s = 0, total_p = 0;
    bool rules_agree = true;
    for (Rule r : kAllRules) {
        RuleSoundnessReport s{r}, p{r};
        total_s += time_ms([&] { s = check_rule_soundness(r, instances, 7, ExecPolicy::Serial); });
        total_p += time_ms([&] { p = check_rule_soundness(r, instances, 7, ExecPolicy::Parallel); });
        rules_agree = rules_agree && same(s, p);
    }
    all_agree = all_agree && rules_agree;
    row("rule soundness (all rules)", total_s, total_p, rules_agree);
    return all_agree ? 0 : 1;
}
