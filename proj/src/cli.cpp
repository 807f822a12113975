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

#include "eukleia/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "eukleia/proof_dsl.hpp"
#include "eukleia/semantics.hpp"

#ifndef EUKLEIA_DEFAULT_CORPUS_DIR
#define EUKLEIA_DEFAULT_CORPUS_DIR "corpus"
#endif

namespace eukleia::cli {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

struct Options {
    bool json = false;
    bool timing = false;
    bool approx = false;
    bool unchecked = false;
    std::size_t trials = 1000;
    std::uint64_t seed = 7;
    int threads = 0;
};

using Clock = std::chrono::steady_clock;

class Stopwatch {
public:
    json elapsed(bool enabled) const {
        if (!enabled) return nullptr;
        auto us = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start_);
        return static_cast<double>(us.count()) / 1000.0;
    }

private:
    Clock::time_point start_ = Clock::now();
};

// Every report carries the same core fields; unused ones are null.
json make_report(const std::string& command, const std::string& status) {
    json r;
    r["command"] = command;
    r["status"] = status;
    r["file"] = nullptr;
    r["step"] = nullptr;
    r["span"] = nullptr;
    r["valuation"] = nullptr;
    r["elapsed_ms"] = nullptr;
    return r;
}

json span_json(const SourceSpan& s) {
    return json{{"line", s.line}, {"column", s.column}, {"length", s.length}};
}

json valuation_json(const Valuation& v) {
    json o = json::object();
    for (const auto& [name, a] : v) o[name] = to_string(a);
    return o;
}

std::string valuation_text(const Valuation& v) {
    std::string s;
    for (const auto& [name, a] : v) {
        if (!s.empty()) s += ", ";
        s += name + "=" + to_string(a);
    }
    return s;
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) return std::nullopt;
    return ss.str();
}

std::size_t count_steps(const std::vector<Step>& steps) {
    std::size_t n = 0;
    for (const Step& s : steps) {
        ++n;
        if (s.cases) {
            for (const auto& b : s.cases->branches) n += count_steps(b);
        }
    }
    return n;
}

// Radians for human reference only. Big coordinates are scaled down first.
double approx_radians(const AngleSum& s) {
    BigInt x = s.rep.x(), y = s.rep.y();
    auto bits = [](const BigInt& v) -> long { return v == 0 ? 0 : static_cast<long>(msb(abs(v))); };
    long shift = std::max(bits(x), bits(y)) - 60;
    if (shift > 0) {
        x >>= static_cast<unsigned>(shift);
        y >>= static_cast<unsigned>(shift);
    }
    double a = std::atan2(y.convert_to<double>(), x.convert_to<double>());
    if (a < 0) a += 2 * std::numbers::pi;
    return 2 * std::numbers::pi * static_cast<double>(s.windings) + a;
}

//------------------------------------------------------------------------------
// check / modelcheck share the load-and-check path

struct Loaded {
    int code = kOk;
    json report;
    std::string human;
    std::optional<Derivation> derivation;
};

Loaded load_and_check(const std::string& command, const std::string& path, bool run_checker = true) {
    Loaded l;
    auto text = read_file(path);
    if (!text) {
        l.code = kIoError;
        l.report = make_report(command, "io-error");
        l.report["file"] = path;
        l.report["message"] = "cannot read " + path;
        l.human = path + ": error: cannot read file";
        return l;
    }
    try {
        l.derivation = parse_proof(*text);
    } catch (const ParseError& e) {
        l.code = kParseError;
        l.report = make_report(command, "parse-error");
        l.report["file"] = path;
        l.report["span"] = span_json(e.span());
        l.report["message"] = e.message();
        l.report["expected"] = e.expected();
        l.human = path + ":" + std::to_string(e.span().line) + ":" +
                  std::to_string(e.span().column) + ": parse error: " + e.message();
        return l;
    }
    if (auto err = run_checker ? check_derivation(*l.derivation) : std::nullopt) {
        l.code = kStepError;
        l.report = make_report(command, "step-error");
        l.report["file"] = path;
        l.report["step"] = err->label;
        l.report["span"] = span_json(err->span);
        l.report["message"] = err->reason;
        l.human = path + ":" + std::to_string(err->span.line) + ":" +
                  std::to_string(err->span.column) + ": step " + err->label +
                  " rejected: " + err->reason;
        return l;
    }
    l.report = make_report(command, "ok");
    l.report["file"] = path;
    l.report["steps"] = count_steps(l.derivation->steps);
    l.human = path + ": ok (" + std::to_string(count_steps(l.derivation->steps)) + " steps)";
    return l;
}

struct Outcome {
    int code;
    json report;
    std::string human;
};

Outcome do_check(const std::string& command, const std::string& path, const Options& o) {
    Stopwatch sw;
    Loaded l = load_and_check(command, path);
    l.report["elapsed_ms"] = sw.elapsed(o.timing);
    return {l.code, std::move(l.report), std::move(l.human)};
}

Outcome do_modelcheck(const std::string& command, const std::string& path, const Options& o) {
    Stopwatch sw;
    Loaded l = load_and_check(command, path, !o.unchecked);
    if (l.code != kOk) {
        l.report["elapsed_ms"] = sw.elapsed(o.timing);
        return {l.code, std::move(l.report), std::move(l.human)};
    }
    ModelCheckReport mc = model_check_derivation(*l.derivation, o.trials, o.seed);
    json r = make_report(command, mc.ok() ? "ok" : "counterexample");
    r["file"] = path;
    r["trials"] = mc.trials;
    r["satisfied"] = mc.satisfied;
    r["counterexamples"] = mc.counterexamples;
    r["seed"] = o.seed;
    std::ostringstream h;
    h << path << ": " << (mc.ok() ? "ok" : "COUNTEREXAMPLE") << ", " << mc.trials << " trials, "
      << mc.satisfied << " satisfied, " << mc.counterexamples << " counterexamples";
    if (mc.trials == 0) h << " (zero trials requested)";
    if (mc.first) {
        r["step"] = mc.first->step;
        r["span"] = span_json(mc.first->span);
        r["valuation"] = valuation_json(mc.first->valuation);
        r["trial"] = mc.first->trial;
        r["message"] = to_string(mc.first->judgment) + " is false in the model";
        h << "\n  trial " << mc.first->trial << ", step " << mc.first->step << ": "
          << to_string(mc.first->judgment) << " is false under "
          << valuation_text(mc.first->valuation);
    }
    r["elapsed_ms"] = sw.elapsed(o.timing);
    return {mc.ok() ? kOk : kCounterexample, std::move(r), h.str()};
}

//------------------------------------------------------------------------------
// expression commands

std::optional<std::vector<AngleLit>> literal_expr(const std::string& command,
                                                  const std::string& text, json& report,
                                                  std::string& human) {
    try {
        MultisetExpr m = parse_expr(text);
        if (!m.literal_only()) {
            for (const Term& t : m.terms()) {
                if (const Var* v = std::get_if<Var>(&t)) {
                    report = make_report(command, "parse-error");
                    report["message"] = "variable " + v->name + " in a literal-only expression";
                    human = "error: variable " + v->name + " in a literal-only expression: " + text;
                    return std::nullopt;
                }
            }
        }
        return m.literals();
    } catch (const ParseError& e) {
        report = make_report(command, "parse-error");
        report["span"] = span_json(e.span());
        report["message"] = e.message();
        human = "error: " + std::string(e.what()) + " in " + text;
        return std::nullopt;
    }
}

Outcome do_compare(const std::string& command, const std::string& a, const std::string& b,
                   const Options& o) {
    Stopwatch sw;
    json r;
    std::string human;
    auto left = literal_expr(command, a, r, human);
    auto right = left ? literal_expr(command, b, r, human) : std::nullopt;
    if (!left || !right) {
        r["elapsed_ms"] = sw.elapsed(o.timing);
        return {kParseError, std::move(r), std::move(human)};
    }
    AngleSum sa = sum_multiset(*left), sb = sum_multiset(*right);
    Ordering3 ord = compare_sums(sa, sb);
    r = make_report(command, "ok");
    r["result"] = to_string(ord);
    r["left"] = to_string(sa);
    r["right"] = to_string(sb);
    r["elapsed_ms"] = sw.elapsed(o.timing);
    human = std::string(to_string(ord)) + "\nleft:  " + to_string(sa) + "\nright: " + to_string(sb);
    return {kOk, std::move(r), std::move(human)};
}

Outcome do_eval(const std::string& command, const std::string& text, const Options& o) {
    Stopwatch sw;
    json r;
    std::string human;
    auto lits = literal_expr(command, text, r, human);
    if (!lits) {
        r["elapsed_ms"] = sw.elapsed(o.timing);
        return {kParseError, std::move(r), std::move(human)};
    }
    AngleSum s = sum_multiset(*lits);
    r = make_report(command, "ok");
    r["turns"] = s.windings;
    r["rep"] = {s.rep.x().str(), s.rep.y().str()};
    r["sum"] = to_string(s);
    human = to_string(s);
    if (o.approx) {
        double rad = approx_radians(s);
        r["approx"] = rad;
        std::ostringstream os;
        os << std::fixed << std::setprecision(10) << rad;
        human += "\napprox=" + os.str();
    }
    r["elapsed_ms"] = sw.elapsed(o.timing);
    return {kOk, std::move(r), std::move(human)};
}

//------------------------------------------------------------------------------
// corpus

bool is_negative_fixture(const fs::path& p) {
    std::string stem = p.stem().string();
    return stem.size() > 7 && stem.compare(stem.size() - 7, 7, "_broken") == 0;
}

int run_corpus(const std::string& command, const Options& o, std::ostream& out,
               std::ostream& err) {
    fs::path dir = corpus_dir();
    std::vector<fs::path> files;
    std::error_code ec;
    for (fs::directory_iterator it(dir, ec), end; !ec && it != end; it.increment(ec)) {
        if (it->is_regular_file() && it->path().extension() == ".eap" &&
            !is_negative_fixture(it->path())) {
            files.push_back(it->path());
        }
    }
    if (ec) {
        err << "error: cannot read corpus directory " << dir.string() << "\n";
        if (o.json) {
            json r = make_report(command, "io-error");
            r["file"] = dir.string();
            out << r.dump() << "\n";
        }
        return kIoError;
    }
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });

    int first_failure = kOk;
    std::size_t passed = 0;
    if (!o.json) {
        out << std::left << std::setw(28) << "file" << std::setw(14) << "status" << std::setw(8)
            << "trials" << "satisfied\n";
    }
    for (const fs::path& f : files) {
        Outcome res = do_modelcheck(command, f.string(), o);
        res.report["file"] = f.filename().string();
        if (res.code == kOk) ++passed;
        if (res.code != kOk && first_failure == kOk) first_failure = res.code;
        if (o.json) {
            out << res.report.dump() << "\n";
        } else {
            out << std::left << std::setw(28) << f.filename().string() << std::setw(14)
                << res.report["status"].get<std::string>() << std::setw(8)
                << (res.report.contains("trials") ? std::to_string(res.report["trials"].get<std::size_t>()) : "-")
                << (res.report.contains("satisfied")
                        ? std::to_string(res.report["satisfied"].get<std::size_t>())
                        : "-")
                << "\n";
            if (res.code != kOk) out << "  " << res.human << "\n";
        }
    }
    if (!o.json) out << passed << "/" << files.size() << " corpus files passed\n";
    return first_failure;
}

std::string joined(const std::vector<std::string>& args) {
    std::string s;
    for (const std::string& a : args) {
        if (!s.empty()) s += ' ';
        s += a;
    }
    return s;
}

}  // namespace

std::string corpus_dir() {
    if (const char* env = std::getenv("EUKLEIA_CORPUS_DIR"); env && *env) return env;
    return EUKLEIA_DEFAULT_CORPUS_DIR;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact comparison of angle multisets and a checker for Euclid-style proofs",
                 "eukleia"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--threads", o.threads, "worker threads for model checking (0: default)")
        ->check(CLI::NonNegativeNumber);

    std::string path, expr_a, expr_b;

    auto* check = app.add_subcommand("check", "parse and check a proof script");
    check->add_option("path", path, "proof script (.eap)")->required();

    auto* compare = app.add_subcommand("compare", "compare two literal multisets");
    compare->add_option("left", expr_a, "e.g. \"{ang(3/4), R}\"")->required();
    compare->add_option("right", expr_b)->required();

    auto* eval = app.add_subcommand("eval", "total measure of a literal multiset");
    eval->add_option("expr", expr_a)->required();
    eval->add_flag("--approx", o.approx, "also print a float radian value");

    auto* modelcheck = app.add_subcommand("modelcheck", "check, then test the proof in the angle model");
    modelcheck->add_option("path", path, "proof script (.eap)")->required();
    modelcheck->add_flag("--unchecked", o.unchecked, "skip the checker and go straight to the model");

    auto* corpus = app.add_subcommand("corpus", "check and model-check the bundled corpus");

    for (CLI::App* sub : {check, compare, eval, modelcheck, corpus}) {
        sub->add_flag("--json", o.json, "print the report as JSON");
        sub->add_flag("--timing", o.timing, "fill elapsed_ms with the measured wall time");
    }
    for (CLI::App* sub : {modelcheck, corpus}) {
        sub->add_option("--trials", o.trials, "number of sampled valuations");
        sub->add_option("--seed", o.seed, "sampling seed");
    }

    std::vector<std::string> argv_store;
    argv_store.push_back("eukleia");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (std::string& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kParseError;
    }

    set_worker_threads(o.threads);
    const std::string command = joined(args);
    if (corpus->parsed()) return run_corpus(command, o, out, err);

    Outcome res{kOk, {}, {}};
    if (check->parsed()) {
        res = do_check(command, path, o);
    } else if (modelcheck->parsed()) {
        res = do_modelcheck(command, path, o);
    } else if (compare->parsed()) {
        res = do_compare(command, expr_a, expr_b, o);
    } else {
        res = do_eval(command, expr_a, o);
    }
    if (o.json) {
        out << res.report.dump() << "\n";
    } else {
        (res.code == kOk || res.code == kStepError || res.code == kCounterexample ? out : err)
            << res.human << "\n";
    }
    return res.code;
}

}  // namespace eukleia::cli
