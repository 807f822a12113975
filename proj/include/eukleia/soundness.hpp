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

#ifndef EUKLEIA_SOUNDNESS_HPP
#define EUKLEIA_SOUNDNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eukleia/semantics.hpp"

namespace eukleia {

/// One randomized use of a rule: premises, the conclusion the rule licenses,
/// and a valuation of every variable involved. Generators bias premises
/// toward being true so that the implication is exercised, not vacuous.
struct RuleInstance {
    Rule rule;
    std::vector<Judgment> premises;
    Judgment conclusion;
    std::optional<CaseSplit> cases;  // Cases only: left/right, branches empty
    Valuation valuation;
};

RuleInstance random_rule_instance(Rule rule, Rng& rng);

struct RuleSoundnessReport {
    Rule rule;
    std::size_t instances = 0;
    std::size_t premises_true = 0;  // instances where the implication was live
    std::size_t rejected = 0;       // instances the checker refused (generator defect)
    std::size_t counterexamples = 0;
    std::optional<std::string> first_failure;  // lowest instance index

    bool ok() const { return counterexamples == 0 && rejected == 0; }
};

/// For every instance: the checker must accept the step, and whenever all
/// premises hold in the model the conclusion must hold too. For Cases the
/// model obligation is that at least one branch hypothesis holds.
RuleSoundnessReport check_rule_soundness(Rule rule, std::size_t instances, std::uint64_t seed,
                                         ExecPolicy policy = ExecPolicy::Parallel);

}  // namespace eukleia

#endif  // EUKLEIA_SOUNDNESS_HPP
