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
 * Continued-fraction convergents of a real number.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

namespace qtime {

struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    [[nodiscard]] double value() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }
    friend bool operator==(const Fraction &, const Fraction &) = default;
};

/**
 * Successive convergents p_k/q_k of x with q_k <= max_den.
 *
 * The expansion runs in long double. It stops early once a convergent
 * reproduces x to working precision, so a rational input such as 3.0 or
 * 0.75 yields a finite list ending in its exact value.
 */
inline std::vector<Fraction> convergents(double x, std::int64_t max_den) {
    std::vector<Fraction> out;
    if (!std::isfinite(x) || max_den < 1) {
        return out;
    }
    const long double target = x;
    long double y = target;
    // (p, q) holds the latest convergent, (p_prev, q_prev) the one before;
    // seeded with the formal convergents 1/0 and 0/1.
    std::int64_t p_prev = 0, q_prev = 1;
    std::int64_t p = 1, q = 0;
    for (int depth = 0; depth < 64; ++depth) {
        const long double a_ld = std::floor(y);
        if (std::fabs(a_ld) > 9.0e18L) {
            break;
        }
        const auto a = static_cast<std::int64_t>(a_ld);
        // Overflow-checked p_new = a p + p_prev, q_new = a q + q_prev.
        __int128 p_new = static_cast<__int128>(a) * p + p_prev;
        __int128 q_new = static_cast<__int128>(a) * q + q_prev;
        if (q_new > max_den || p_new > INT64_MAX || p_new < INT64_MIN) {
            break;
        }
        p_prev = p;
        q_prev = q;
        p = static_cast<std::int64_t>(p_new);
        q = static_cast<std::int64_t>(q_new);
        out.push_back({p, q});

        const long double err = std::fabs(target * q - p);
        if (err <= 4.0L * std::numeric_limits<double>::epsilon() *
                       std::fabs(target) * q) {
            break;
        }
        const long double frac = y - a_ld;
        if (frac <= 0.0L) {
            break;
        }
        y = 1.0L / frac;
    }
    return out;
}

/// lcm(a, b), or 0 if the result would exceed `cap`.
inline std::int64_t capped_lcm(std::int64_t a, std::int64_t b, std::int64_t cap) {
    const std::int64_t g = std::gcd(a, b);
    const __int128 l = static_cast<__int128>(a / g) * b;
    return l > cap ? 0 : static_cast<std::int64_t>(l);
}

} // namespace qtime
