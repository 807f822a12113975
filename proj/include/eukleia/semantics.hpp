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

// The angle model of the calculus: proof variables are read as concrete
// rational-slope angles and multisets are compared by total measure, the way
// a balance compares two pans of weights.

#ifndef EUKLEIA_SEMANTICS_HPP
#define EUKLEIA_SEMANTICS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "eukleia/calculus.hpp"
#include "eukleia/exec.hpp"

namespace eukleia {

using Valuation = std::map<std::string, AngleLit>;

struct UnboundVariable : std::out_of_range {
    using std::out_of_range::out_of_range;
};

const AngleLit& value_of(const Term& t, const Valuation& v);
std::vector<AngleLit> value_of(const MultisetExpr& m, const Valuation& v);

/// Truth of a judgment in the angle model. Throws UnboundVariable.
bool eval_judgment(const Judgment& j, const Valuation& v);

struct SamplerOptions {
    int coord_bound = 20;      // literal coordinates drawn from [-bound, bound]
    int retry_budget = 10000;  // attempts before giving up
};

using Rng = std::mt19937_64;

/// The angle that makes {part, result} equal to {whole}, when part < whole.
/// A sampling aid only; the calculus has no subtraction.
std::optional<AngleLit> remainder_angle(const AngleLit& whole, const AngleLit& part);

/// Uniform x in [-bound, bound], y in [1, bound], canonicalized.
AngleLit random_angle(Rng& rng, int coord_bound = 20);

/// A valuation of `vars` (plus any variable the hypotheses mention) under
/// which every hypothesis holds. Split hypotheses are met by construction,
/// Congr by aliasing, an Eq with one unknown angle by solving for it, and
/// everything else by rejection. nullopt means the retry budget ran out,
/// which does not prove the hypotheses unsatisfiable.
std::optional<Valuation> random_valuation(const std::vector<std::string>& vars,
                                          const std::vector<Judgment>& hypotheses,
                                          std::uint64_t seed, SamplerOptions opts = {});

struct Counterexample {
    std::size_t trial = 0;
    std::string step;
    SourceSpan span;
    Judgment judgment;
    Valuation valuation;
};

struct ModelCheckReport {
    std::size_t trials = 0;
    std::size_t satisfied = 0;        // trials whose hypotheses could be sampled
    std::size_t counterexamples = 0;  // trials with some false step
    std::optional<Counterexample> first;  // lowest trial index

    bool ok() const { return counterexamples == 0; }
};

/// Samples `trials` valuations satisfying the hypotheses and evaluates every
/// step; steps inside a case branch are evaluated only when that branch's
/// hypothesis holds. Does not run the checker: callers check first.
ModelCheckReport model_check_derivation(const Derivation& d, std::size_t trials,
                                        std::uint64_t seed,
                                        ExecPolicy policy = ExecPolicy::Parallel,
                                        SamplerOptions opts = {});

}  // namespace eukleia

#endif  // EUKLEIA_SEMANTICS_HPP
