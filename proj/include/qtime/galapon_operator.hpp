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
 * The truncated Galapon operator
 *
 *     T_G = i hbar sum_{j != k} (E_j - E_k)^{-1} |E_j><E_k|,
 *
 * the Hamiltonian, their commutator (exact and weak forms) and the scans
 * showing that T_G statistics do not shift covariantly and that S is not
 * invariant under time evolution.
 *
 * At finite N the commutator is exactly i hbar (I - J), with J the all-ones
 * matrix. On S_N (coefficients summing to zero) J annihilates every vector,
 * which is where [T_G, H] = i hbar holds.
 */

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "spectral_core.hpp"
#include "summation.hpp"

namespace qtime {

/// Values sampled on a strictly increasing time grid.
struct DeviationSeries {
    std::vector<double> taus;
    std::vector<double> values;

    void validate() const {
        if (taus.size() != values.size()) {
            throw DimensionError("DeviationSeries: taus/values length mismatch");
        }
        for (std::size_t i = 1; i < taus.size(); ++i) {
            if (!(taus[i - 1] < taus[i])) {
                throw PreconditionError(
                    "DeviationSeries: taus must be strictly increasing");
            }
        }
    }

    [[nodiscard]] double max_abs() const {
        double worst = 0.0;
        for (double v : values) {
            worst = std::max(worst, std::abs(v));
        }
        return worst;
    }
};

namespace detail {
inline void require_time_grid(std::span<const double> taus, const char *op) {
    if (taus.empty()) {
        throw PreconditionError(std::string(op) + ": empty time grid");
    }
    for (std::size_t i = 1; i < taus.size(); ++i) {
        if (!(taus[i - 1] < taus[i])) {
            throw PreconditionError(std::string(op) +
                                    ": time grid must be strictly increasing");
        }
    }
}
} // namespace detail

/// Entries i hbar / (E_j - E_k) off the diagonal, zero on it.
inline OperatorMatrix build_t_g(const EnergySpectrum &spectrum) {
    const std::size_t n = spectrum.size();
    const double hbar = spectrum.hbar();
    std::vector<complex_t> entries(n * n, complex_t{0.0, 0.0});
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            if (j != k) {
                entries[j * n + k] = complex_t{0.0, hbar / (spectrum[j] - spectrum[k])};
            }
        }
    }
    return OperatorMatrix(n, std::move(entries), true);
}

inline OperatorMatrix build_hamiltonian(const EnergySpectrum &spectrum) {
    return OperatorMatrix::diagonal(spectrum.levels());
}

/// ab - ba.
inline OperatorMatrix commutator(const OperatorMatrix &a, const OperatorMatrix &b) {
    detail::require_same_size(a, b, "commutator");
    return matmul(a, b) - matmul(b, a);
}

/// i hbar (delta_jk - 1): the matrix of i hbar (1 - |chi><chi|) with
/// |chi> = sum_j |E_j>.
inline OperatorMatrix weak_commutator(const EnergySpectrum &spectrum) {
    const std::size_t n = spectrum.size();
    const double hbar = spectrum.hbar();
    OperatorMatrix m(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            m(j, k) = j == k ? complex_t{0.0, 0.0} : complex_t{0.0, -hbar};
        }
    }
    return m;
}

/// <psi|A|psi> = sum_jk conj(c_j) A_jk c_k.
inline complex_t expectation(const OperatorMatrix &op, const QuantumState &state) {
    if (op.size() != state.size()) {
        throw DimensionError("expectation: operator size " +
                             std::to_string(op.size()) + " vs state length " +
                             std::to_string(state.size()));
    }
    const auto av = matvec(op, state.coeffs());
    CompensatedSum<complex_t> acc;
    for (std::size_t j = 0; j < av.size(); ++j) {
        acc += std::conj(state[j]) * av[j];
    }
    return acc.value();
}

/**
 * Re<T_G>_tau - Re<T_G>_0 - tau on each grid time.
 *
 * A covariant time observable would give zero everywhere. Since
 * |<T_G>_tau| <= ||T_G|| while tau grows without bound, the deviation
 * eventually exceeds any multiple of ||T_G||.
 */
inline DeviationSeries covariance_deviation(const EnergySpectrum &spectrum,
                                            const QuantumState &state,
                                            std::span<const double> taus) {
    detail::require_time_grid(taus, "covariance_deviation");
    const OperatorMatrix tg = build_t_g(spectrum);
    const double t0 = expectation(tg, state).real();
    DeviationSeries out;
    out.taus.assign(taus.begin(), taus.end());
    out.values.reserve(taus.size());
    for (double tau : taus) {
        const double tt = expectation(tg, evolve(state, spectrum, tau)).real();
        out.values.push_back(tt - t0 - tau);
    }
    return out;
}

/**
 * |sum_j c_j exp(-i E_j tau / hbar)| on each grid time, for a state that
 * starts in S.
 */
inline DeviationSeries s_membership_decay(const EnergySpectrum &spectrum,
                                          const QuantumState &state,
                                          std::span<const double> taus,
                                          const PhysicsConfig &config = {}) {
    detail::require_time_grid(taus, "s_membership_decay");
    if (state.size() != spectrum.size()) {
        throw DimensionError("s_membership_decay: state/spectrum size mismatch");
    }
    if (!in_s(state, config)) {
        throw PreconditionError(
            "s_membership_decay: initial state is not in S (|sum c_j| = " +
            std::to_string(std::abs(coefficient_sum(state))) + ")");
    }
    DeviationSeries out;
    out.taus.assign(taus.begin(), taus.end());
    out.values.reserve(taus.size());
    for (double tau : taus) {
        out.values.push_back(std::abs(coefficient_sum(evolve(state, spectrum, tau))));
    }
    return out;
}

/// I - J/N: orthogonal projector onto S_N.
inline OperatorMatrix projector_onto_s(std::size_t n) {
    if (n < 1) {
        throw DimensionError("projector_onto_s: n must be positive");
    }
    OperatorMatrix p(n);
    const double inv = 1.0 / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            p(j, k) = (j == k ? 1.0 : 0.0) - inv;
        }
    }
    return OperatorMatrix(n, {p.entries().begin(), p.entries().end()}, true);
}

/**
 * Removes the component along the uniform vector and renormalizes.
 *
 * Throws ZeroProjectionError when the state is (numerically) parallel to the
 * uniform vector.
 */
inline QuantumState project_onto_s(const QuantumState &state) {
    const std::size_t n = state.size();
    const complex_t mean = coefficient_sum(state) / static_cast<double>(n);
    std::vector<complex_t> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        out[j] = state[j] - mean;
    }
    const double norm = vector_norm(out);
    if (norm <= 1e-12) {
        throw ZeroProjectionError(
            "project_onto_s: state is parallel to the uniform vector");
    }
    // Already in S: hand back the input untouched.
    if (std::abs(mean) == 0.0) {
        return state;
    }
    for (auto &c : out) {
        c /= norm;
    }
    // One more pass removes the O(eps) residue left by the first subtraction.
    const complex_t residue = coefficient_sum(out) / static_cast<double>(n);
    for (auto &c : out) {
        c -= residue;
    }
    return QuantumState::normalized(std::move(out));
}

} // namespace qtime
