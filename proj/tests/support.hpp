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


// Generators and float oracles shared by the test binaries. Floats never
// enter the library; they appear here only as an independent check.

#ifndef EUKLEIA_TESTS_SUPPORT_HPP
#define EUKLEIA_TESTS_SUPPORT_HPP

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "eukleia/angle.hpp"

namespace eukleia::test {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

    // Coordinates in [-bound, bound]; vectors with y <= 0 are redrawn.
    AngleLit angle(int bound) {
        for (;;) {
            int x = uniform(-bound, bound);
            int y = uniform(-bound, bound);
            if (y > 0) return AngleLit::from_slope_vector(x, y);
        }
    }

    std::vector<AngleLit> multiset(int max_size, int bound) {
        std::vector<AngleLit> out;
        int n = uniform(0, max_size);
        for (int i = 0; i < n; ++i) out.push_back(angle(bound));
        return out;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }

inline double arg(const AngleLit& a) { return std::atan2(to_double(a.y()), to_double(a.x())); }

// Argument in [0, 2pi).
inline double arg(const PlaneVector& v) {
    double t = std::atan2(to_double(v.y()), to_double(v.x()));
    return t < 0 ? t + 2 * std::numbers::pi : t;
}

inline double measure(const AngleSum& s) {
    return 2 * std::numbers::pi * static_cast<double>(s.windings) + arg(s.rep);
}

inline double float_sum(const std::vector<AngleLit>& m) {
    double total = 0;
    for (const AngleLit& a : m) total += arg(a);
    return total;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string corpus_path(const std::string& name) {
    return std::string(EUKLEIA_CORPUS_DIR) + "/" + name;
}

}  // namespace eukleia::test

#endif  // EUKLEIA_TESTS_SUPPORT_HPP
