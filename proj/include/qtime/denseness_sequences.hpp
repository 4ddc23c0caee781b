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
 * Explicit Cauchy sequences in S converging to an energy eigenstate.
 *
 * With h(N) = sum_{j=1}^N 1/j, sigma(N) = sum_{j=1}^N 1/j^2 and
 * D = sqrt(sigma + h^2), the N-th state has N+1 coefficients
 *
 *     c_0 = h / D,    c_j = -(1/j) / D   (j = 1..N).
 *
 * The tail sums to -h/D, so every state lies in S; its norm is
 * (h^2 + sigma)/D^2 = 1. Since h diverges while sigma stays bounded,
 * c_0 -> 1 and the sequence approaches |E_0>. Convergence to |E_k> uses the
 * same coefficients with indices 0 and k exchanged.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "galapon_operator.hpp"
#include "linalg.hpp"
#include "spectral_core.hpp"
#include "summation.hpp"

namespace qtime {

struct PartialSums {
    double h = 0.0;     ///< sum_{j=1}^n 1/j
    double sigma = 0.0; ///< sum_{j=1}^n 1/j^2
};

/// Forward compensated summation of the harmonic and Basel partial sums.
inline PartialSums harmonic_partial_sums(std::size_t n) {
    CompensatedSum<double> h;
    CompensatedSum<double> sigma;
    for (std::size_t j = 1; j <= n; ++j) {
        const double x = static_cast<double>(j);
        h += 1.0 / x;
        sigma += 1.0 / (x * x);
    }
    return {h.value(), sigma.value()};
}

struct CauchyStep {
    std::size_t n = 0;
    std::size_t target = 0;
    double h = 0.0;
    double sigma = 0.0;
    QuantumState state;
};

inline CauchyStep cauchy_state(std::size_t n, std::size_t target = 0) {
    if (n < 1) {
        throw PreconditionError("cauchy_state: n must be >= 1");
    }
    if (target >= n + 1) {
        throw IndexError("cauchy_state: target " + std::to_string(target) +
                         " out of range for N = " + std::to_string(n) +
                         " (state has " + std::to_string(n + 1) + " levels)");
    }
    const auto sums = harmonic_partial_sums(n);
    const double d = std::sqrt(sums.sigma + sums.h * sums.h);
    std::vector<complex_t> c(n + 1);
    c[0] = sums.h / d;
    for (std::size_t j = 1; j <= n; ++j) {
        c[j] = -1.0 / (static_cast<double>(j) * d);
    }
    std::swap(c[0], c[target]);

    CauchyStep step{n, target, sums.h, sums.sigma, QuantumState(std::move(c), 1e-13)};
    if (std::abs(coefficient_sum(step.state)) > 1e-13) {
        throw Error("cauchy_state: constructed state left S");
    }
    return step;
}

/// ||psi_N - |E_target>|| = sqrt(2 - 2 Re c_target).
inline double distance_to_eigenstate(const CauchyStep &step, std::size_t target) {
    if (target >= step.state.size()) {
        throw IndexError("distance_to_eigenstate: target out of range");
    }
    return std::sqrt(std::max(0.0, 2.0 - 2.0 * step.state[target].real()));
}

/**
 * 1 - c_0(N) for the groundstate sequence, written as sigma / (D (D + h)) so
 * no cancellation occurs when c_0 is close to 1.
 */
inline double groundstate_gap(std::size_t n) {
    if (n < 1) {
        throw PreconditionError("groundstate_gap: n must be >= 1");
    }
    const auto sums = harmonic_partial_sums(n);
    const double d = std::sqrt(sums.sigma + sums.h * sums.h);
    return sums.sigma / (d * (d + sums.h));
}

/// Euclidean distance between coefficient vectors, the shorter one
/// zero-padded.
inline double padded_distance(const QuantumState &a, const QuantumState &b) {
    const std::size_t n = std::max(a.size(), b.size());
    CompensatedSum<double> acc;
    for (std::size_t j = 0; j < n; ++j) {
        const complex_t x = j < a.size() ? a[j] : complex_t{};
        const complex_t y = j < b.size() ? b[j] : complex_t{};
        acc += std::norm(x - y);
    }
    return std::sqrt(acc.value());
}

/**
 * Orthonormal (Helmert) basis of S_n: for k = 1..n-1 the vector with k
 * entries 1, one entry -k, rest 0, scaled by 1/sqrt(k(k+1)).
 */
inline std::vector<std::vector<double>> s_basis(std::size_t n) {
    std::vector<std::vector<double>> basis;
    basis.reserve(n > 0 ? n - 1 : 0);
    for (std::size_t k = 1; k < n; ++k) {
        const double kk = static_cast<double>(k);
        const double scale = 1.0 / std::sqrt(kk * (kk + 1.0));
        std::vector<double> v(n, 0.0);
        for (std::size_t j = 0; j < k; ++j) {
            v[j] = scale;
        }
        v[k] = -kk * scale;
        basis.push_back(std::move(v));
    }
    return basis;
}

struct OrthogonalityReport {
    double max_overlap = 0.0;       ///< max |<uniform|b>| over the S_n basis
    std::size_t projector_rank = 0; ///< rank of I - J/n
};

inline OrthogonalityReport uniform_vector_orthogonality(std::size_t n) {
    if (n < 2) {
        throw DimensionError("uniform_vector_orthogonality: n must be >= 2");
    }
    const double u = 1.0 / std::sqrt(static_cast<double>(n));
    OrthogonalityReport report;
    for (const auto &b : s_basis(n)) {
        CompensatedSum<double> acc;
        for (double x : b) {
            acc += u * x;
        }
        report.max_overlap = std::max(report.max_overlap, std::abs(acc.value()));
    }
    report.projector_rank = hermitian_rank(projector_onto_s(n), 1e-10);
    return report;
}

} // namespace qtime
