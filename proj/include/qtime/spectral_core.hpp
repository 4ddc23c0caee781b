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
 * Energy spectra, states in the energy eigenbasis, Schrödinger phase
 * evolution and the coefficient-sum test for membership in S.
 *
 * S is the set of states whose energy-basis coefficients sum to zero. All
 * times are in units of hbar/energy.
 */

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "summation.hpp"

namespace qtime {

using complex_t = std::complex<double>;

/// hbar and the numeric tolerances shared by the verification routines.
struct PhysicsConfig {
    double hbar = 1.0;
    double norm_tolerance = 1e-12;
    double membership_tolerance = 1e-10;

    void validate() const {
        if (!(hbar > 0.0) || !(norm_tolerance > 0.0) ||
            !(membership_tolerance > 0.0)) {
            throw PreconditionError(
                "PhysicsConfig: hbar and tolerances must be positive");
        }
    }
};

/**
 * Finite, strictly increasing list of energy levels E_0 < E_1 < ... together
 * with hbar.
 */
class EnergySpectrum {
  public:
    EnergySpectrum(std::vector<double> levels, double hbar = 1.0,
                   std::string label = "custom")
        : levels_(std::move(levels)), hbar_(hbar), label_(std::move(label)) {
        if (levels_.size() < 2) {
            throw DimensionError("EnergySpectrum: need at least 2 levels, got " +
                                 std::to_string(levels_.size()));
        }
        if (!(hbar_ > 0.0)) {
            throw PreconditionError("EnergySpectrum: hbar must be positive");
        }
        for (std::size_t j = 0; j < levels_.size(); ++j) {
            if (!std::isfinite(levels_[j])) {
                throw PreconditionError("EnergySpectrum: non-finite level");
            }
            if (j > 0 && !(levels_[j - 1] < levels_[j])) {
                throw DegeneracyError(
                    "EnergySpectrum: levels must be strictly increasing "
                    "(degenerate or unordered at index " +
                    std::to_string(j) + ")");
            }
        }
    }

    [[nodiscard]] std::span<const double> levels() const { return levels_; }
    [[nodiscard]] double operator[](std::size_t j) const { return levels_[j]; }
    [[nodiscard]] std::size_t size() const { return levels_.size(); }
    [[nodiscard]] double hbar() const { return hbar_; }
    [[nodiscard]] const std::string &label() const { return label_; }

    /// E_j / hbar.
    [[nodiscard]] std::vector<double> angular_frequencies() const {
        std::vector<double> out(levels_.size());
        for (std::size_t j = 0; j < levels_.size(); ++j) {
            out[j] = levels_[j] / hbar_;
        }
        return out;
    }

    friend bool operator==(const EnergySpectrum &,
                           const EnergySpectrum &) = default;

  private:
    std::vector<double> levels_;
    double hbar_;
    std::string label_;
};

/// Unit-norm coefficient vector over the energy eigenbasis.
class QuantumState {
  public:
    explicit QuantumState(std::vector<complex_t> coeffs,
                          double norm_tolerance = 1e-12)
        : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) {
            throw DimensionError("QuantumState: empty coefficient vector");
        }
        const double n2 = norm_squared();
        if (!(std::abs(n2 - 1.0) <= norm_tolerance)) {
            throw PreconditionError("QuantumState: norm^2 = " +
                                    std::to_string(n2) + " is not 1");
        }
    }

    /// Rescales an arbitrary nonzero vector to unit norm.
    static QuantumState normalized(std::vector<complex_t> raw) {
        CompensatedSum<double> acc;
        for (const auto &c : raw) {
            acc += std::norm(c);
        }
        const double norm = std::sqrt(acc.value());
        if (!(norm > 0.0) || !std::isfinite(norm)) {
            throw PreconditionError("QuantumState: cannot normalize zero vector");
        }
        for (auto &c : raw) {
            c /= norm;
        }
        return QuantumState(std::move(raw));
    }

    /// Energy eigenstate |E_j> in an n-level basis.
    static QuantumState eigenstate(std::size_t n, std::size_t j) {
        if (j >= n) {
            throw IndexError("eigenstate index " + std::to_string(j) +
                             " out of range for " + std::to_string(n) +
                             " levels");
        }
        std::vector<complex_t> c(n, complex_t{0.0, 0.0});
        c[j] = 1.0;
        return QuantumState(std::move(c));
    }

    [[nodiscard]] std::span<const complex_t> coeffs() const { return coeffs_; }
    [[nodiscard]] complex_t operator[](std::size_t j) const { return coeffs_[j]; }
    [[nodiscard]] std::size_t size() const { return coeffs_.size(); }

    [[nodiscard]] double norm_squared() const {
        CompensatedSum<double> acc;
        for (const auto &c : coeffs_) {
            acc += std::norm(c);
        }
        return acc.value();
    }

    friend bool operator==(const QuantumState &,
                           const QuantumState &) = default;

  private:
    std::vector<complex_t> coeffs_;
};

enum class SpectrumKind { Harmonic, Box, Custom };

inline SpectrumKind parse_spectrum_kind(std::string_view name) {
    if (name == "harmonic") {
        return SpectrumKind::Harmonic;
    }
    if (name == "box") {
        return SpectrumKind::Box;
    }
    if (name == "custom") {
        return SpectrumKind::Custom;
    }
    throw PreconditionError("unknown spectrum kind '" + std::string(name) + "'");
}

inline std::string_view to_string(SpectrumKind kind) {
    switch (kind) {
    case SpectrumKind::Harmonic:
        return "harmonic";
    case SpectrumKind::Box:
        return "box";
    case SpectrumKind::Custom:
        return "custom";
    }
    return "custom";
}

/// Family parameters for build_spectrum. Only the fields relevant to the
/// requested kind are read.
struct SpectrumParams {
    double omega = 1.0;          ///< harmonic: E_j = hbar*omega*(j + 1/2)
    double scale = 1.0;          ///< box: E_j = scale*(j + 1)^2
    std::vector<double> levels;  ///< custom
    double hbar = 1.0;
};

inline EnergySpectrum build_spectrum(SpectrumKind kind, std::size_t n_levels,
                                     const SpectrumParams &params = {}) {
    if (n_levels < 2) {
        throw DimensionError("build_spectrum: n_levels must be >= 2");
    }
    std::vector<double> levels(n_levels);
    switch (kind) {
    case SpectrumKind::Harmonic:
        if (!(params.omega > 0.0)) {
            throw PreconditionError("build_spectrum: harmonic needs omega > 0");
        }
        for (std::size_t j = 0; j < n_levels; ++j) {
            levels[j] = params.hbar * params.omega * (static_cast<double>(j) + 0.5);
        }
        break;
    case SpectrumKind::Box:
        if (!(params.scale > 0.0)) {
            throw PreconditionError("build_spectrum: box needs scale > 0");
        }
        for (std::size_t j = 0; j < n_levels; ++j) {
            const double k = static_cast<double>(j + 1);
            levels[j] = params.scale * k * k;
        }
        break;
    case SpectrumKind::Custom:
        if (params.levels.size() != n_levels) {
            throw DimensionError("build_spectrum: custom level list has " +
                                 std::to_string(params.levels.size()) +
                                 " entries, expected " +
                                 std::to_string(n_levels));
        }
        levels = params.levels;
        break;
    }
    return EnergySpectrum(std::move(levels), params.hbar,
                          std::string(to_string(kind)));
}

/// c_j -> c_j exp(-i E_j tau / hbar).
inline QuantumState evolve(const QuantumState &state,
                           const EnergySpectrum &spectrum, double tau) {
    if (state.size() != spectrum.size()) {
        throw DimensionError("evolve: state has " + std::to_string(state.size()) +
                             " coefficients, spectrum has " +
                             std::to_string(spectrum.size()) + " levels");
    }
    std::vector<complex_t> out(state.size());
    for (std::size_t j = 0; j < state.size(); ++j) {
        out[j] = state[j] * std::polar(1.0, -spectrum[j] * tau / spectrum.hbar());
    }
    return QuantumState(std::move(out));
}

/// Sum of the coefficients of an arbitrary (not necessarily normalized)
/// vector.
inline complex_t coefficient_sum(std::span<const complex_t> coeffs) {
    CompensatedSum<complex_t> acc;
    for (const auto &c : coeffs) {
        acc += c;
    }
    return acc.value();
}

inline complex_t coefficient_sum(const QuantumState &state) {
    return coefficient_sum(state.coeffs());
}

/// `count` equally spaced points covering [first, last] inclusive.
inline std::vector<double> linspace(double first, double last, std::size_t count) {
    if (count < 2) {
        throw DimensionError("linspace: need at least 2 points");
    }
    std::vector<double> out(count);
    const double step = (last - first) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = first + step * static_cast<double>(i);
    }
    out.back() = last;
    return out;
}

/// |sum_j c_j| <= membership_tolerance.
inline bool in_s(const QuantumState &state, const PhysicsConfig &config = {}) {
    return std::abs(coefficient_sum(state)) <= config.membership_tolerance;
}

} // namespace qtime
