// Copyright 2026 The qtime Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Reproducible random states.
 *
 * The stream is SplitMix64 (Steele, Lea, Flood 2014); doubles take the top 53
 * bits; Gaussian pairs come from the Box-Muller transform. Coefficient j uses
 * the pair (re, im) = (g_{2j}, g_{2j+1}).
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

#include "galapon_operator.hpp"
#include "spectral_core.hpp"

namespace qtime {

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform on (0, 1).
    double uniform() {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Two independent standard normals.
    std::pair<double, double> gaussian_pair() {
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double phi = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(phi), r * std::sin(phi)};
    }

  private:
    std::uint64_t state_;
};

/// Normalized complex Gaussian vector of length n.
inline QuantumState random_state(std::size_t n, SplitMix64 &rng) {
    std::vector<complex_t> c(n);
    for (auto &x : c) {
        auto [re, im] = rng.gaussian_pair();
        x = complex_t{re, im};
    }
    return QuantumState::normalized(std::move(c));
}

/// Random state projected onto S_n.
inline QuantumState random_s_state(std::size_t n, SplitMix64 &rng) {
    return project_onto_s(random_state(n, rng));
}

/// Uniform double in [lo, hi).
inline double random_uniform(SplitMix64 &rng, double lo, double hi) {
    return lo + (hi - lo) * rng.uniform();
}

} // namespace qtime
