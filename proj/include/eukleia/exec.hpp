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

#ifndef EUKLEIA_EXEC_HPP
#define EUKLEIA_EXEC_HPP

#include <cstddef>
#include <cstdint>
#include <functional>

namespace eukleia {

/// Serial is the reference path; Parallel must produce identical results.
enum class ExecPolicy { Serial, Parallel };

/// Calls body(i) for every i in [0, n). Under Parallel the calls are spread
/// over OpenMP threads in no particular order; body must only write to
/// per-index state. The first exception (lowest index) is rethrown.
void for_each_index(std::size_t n, ExecPolicy policy,
                    const std::function<void(std::size_t)>& body);

/// 0 restores the OpenMP default.
void set_worker_threads(int n);
int worker_threads();

/// Independent 64-bit stream seed for item `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace eukleia

#endif  // EUKLEIA_EXEC_HPP
