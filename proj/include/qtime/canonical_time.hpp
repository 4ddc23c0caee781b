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
 * Canonical time probability density for a nondegenerate discrete spectrum.
 *
 * With time kets <E_j|t> = gamma^{-1/2} exp(-i E_j t / hbar),
 *
 *     p(t|psi) = |<t|psi>|^2 = |sum_j c_j exp(+i E_j t / hbar)|^2 / gamma.
 *
 * gamma is fixed so that the long-time (Bohr) mean of p is 1. The density is
 * covariant: p(t|psi_tau) = p(t - tau|psi_0).
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "spectral_core.hpp"
#include "summation.hpp"

namespace qtime {

/// Bohr mean of |sum_j c_j e^{i E_j t}|^2, i.e. sum_j |c_j|^2.
inline double normalize_gamma(std::span<const complex_t> amplitudes) {
    CompensatedSum<double> acc;
    for (const auto &c : amplitudes) {
        acc += std::norm(c);
    }
    return acc.value();
}

class CanonicalDensity {
  public:
    CanonicalDensity(EnergySpectrum spectrum, std::vector<complex_t> amplitudes,
                     double gamma)
        : spectrum_(std::move(spectrum)), amplitudes_(std::move(amplitudes)),
          gamma_(gamma) {
        if (amplitudes_.size() != spectrum_.size()) {
            throw DimensionError("CanonicalDensity: amplitude count does not "
                                 "match spectrum size");
        }
        if (!(gamma_ > 0.0)) {
            throw PreconditionError("CanonicalDensity: gamma must be positive");
        }
    }

    /// Density of a state with gamma chosen so the Bohr mean is 1.
    CanonicalDensity(EnergySpectrum spectrum, const QuantumState &state)
        : CanonicalDensity(std::move(spectrum),
                           {state.coeffs().begin(), state.coeffs().end()},
                           normalize_gamma(state.coeffs())) {}

    [[nodiscard]] const EnergySpectrum &spectrum() const { return spectrum_; }
    [[nodiscard]] std::span<const complex_t> amplitudes() const { return amplitudes_; }
    [[nodiscard]] double gamma() const { return gamma_; }

  private:
    EnergySpectrum spectrum_;
    std::vector<complex_t> amplitudes_;
    double gamma_;
};

inline double density_at(const CanonicalDensity &d, double t) {
    const auto &spec = d.spectrum();
    const auto amps = d.amplitudes();
    CompensatedSum<complex_t> acc;
    for (std::size_t j = 0; j < amps.size(); ++j) {
        acc += amps[j] * std::polar(1.0, spec[j] * t / spec.hbar());
    }
    return std::norm(acc.value()) / d.gamma();
}

/**
 * max_t |p(t|psi_tau) - p(t - tau|psi_0)| over the grid. The left side is
 * evaluated from the evolved state and the right side from the shifted time,
 * so the two routes share no intermediate values.
 */
inline double verify_covariance(const EnergySpectrum &spectrum,
                                const QuantumState &state, double tau,
                                std::span<const double> t_grid) {
    if (t_grid.empty()) {
        throw PreconditionError("verify_covariance: empty grid");
    }
    const CanonicalDensity initial(spectrum, state);
    const CanonicalDensity evolved(spectrum, evolve(state, spectrum, tau));
    double worst = 0.0;
    for (double t : t_grid) {
        worst = std::max(worst,
                         std::abs(density_at(evolved, t) - density_at(initial, t - tau)));
    }
    return worst;
}

/**
 * Average of p over [0, window] by the trapezoidal rule on `samples` points.
 * Over a whole number of periods of a commensurate spectrum the rule is exact
 * for the trigonometric polynomial p.
 */
inline double bohr_mean_density(const CanonicalDensity &d, double window,
                                std::size_t samples) {
    if (!(window > 0.0)) {
        throw PreconditionError("bohr_mean_density: window must be positive");
    }
    if (samples < 2) {
        throw PreconditionError("bohr_mean_density: need at least 2 samples");
    }
    const double h = window / static_cast<double>(samples - 1);
    CompensatedSum<double> acc;
    for (std::size_t i = 0; i < samples; ++i) {
        const double w = (i == 0 || i + 1 == samples) ? 0.5 : 1.0;
        acc += w * density_at(d, h * static_cast<double>(i));
    }
    return acc.value() * h / window;
}

} // namespace qtime
