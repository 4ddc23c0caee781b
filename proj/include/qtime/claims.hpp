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
 * Checks that T_G fails as a time observable, packaged for the CLI and the
 * acceptance suite:
 *
 *  (i)   <T_G>_tau does not track tau (no covariance);
 *  (ii)  S is not invariant under time evolution;
 *  (iii) the times at which a state lies in S have measure zero, seen as
 *        vanishing sublevel measure of |f| and a finite mean of |log|f||.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "galapon_operator.hpp"
#include "linalg.hpp"
#include "spectral_core.hpp"
#include "zero_set_analysis.hpp"

namespace qtime {

struct CovarianceFailure {
    double tg_norm = 0.0;   ///< spectral norm of T_G
    double tau = 0.0;       ///< 4 ||T_G||
    double deviation = 0.0; ///< Re<T_G>_tau - Re<T_G>_0 - tau
    double threshold = 0.0; ///< 2 ||T_G||
    bool demonstrated = false;
};

inline CovarianceFailure check_covariance_failure(const EnergySpectrum &spectrum,
                                                  const QuantumState &state) {
    CovarianceFailure r;
    r.tg_norm = spectral_norm(build_t_g(spectrum));
    r.tau = 4.0 * r.tg_norm;
    r.threshold = 2.0 * r.tg_norm;
    const double taus[] = {0.0, r.tau};
    r.deviation = covariance_deviation(spectrum, state, taus).values.back();
    r.demonstrated = std::abs(r.deviation) > r.threshold;
    return r;
}

struct NoninvarianceCheck {
    DeviationSeries series;
    double max_value = 0.0;
    double tau_at_max = 0.0;
    double threshold = 0.0; ///< 10 x membership tolerance
    bool demonstrated = false;
};

inline NoninvarianceCheck check_noninvariance(const EnergySpectrum &spectrum,
                                              const QuantumState &s_state,
                                              std::span<const double> taus,
                                              const PhysicsConfig &config = {}) {
    NoninvarianceCheck r;
    r.series = s_membership_decay(spectrum, s_state, taus, config);
    for (std::size_t i = 0; i < r.series.values.size(); ++i) {
        if (r.series.values[i] > r.max_value) {
            r.max_value = r.series.values[i];
            r.tau_at_max = r.series.taus[i];
        }
    }
    r.threshold = 10.0 * config.membership_tolerance;
    r.demonstrated = r.max_value > r.threshold;
    return r;
}

struct MeasureZeroCheck {
    std::vector<MeasureReport> reports; ///< in the order of `epsilons`
    bool monotone = false;              ///< measure nonincreasing as eps shrinks
    MeasureReport floor_report;         ///< at eps = 1e-6 sum|c_j|
    double floor_fraction = 0.0;        ///< floor measure / window
    PaleyWienerReport paley_wiener;
    bool demonstrated = false;
};

/**
 * Sublevel measures over `epsilons` (any order), the measure at
 * 1e-6 * sum|c_j|, and the window mean of |log|f||. Demonstrated when the
 * measures shrink with eps, the floor fraction is <= 1e-4 and the log mean
 * is finite and stable under panel doubling.
 */
inline MeasureZeroCheck check_measure_zero(const TrigSignal &sig,
                                           std::vector<double> epsilons,
                                           double window, std::size_t base_grid,
                                           std::size_t panels) {
    MeasureZeroCheck r;
    std::sort(epsilons.begin(), epsilons.end(), std::greater<>());
    r.monotone = true;
    for (double eps : epsilons) {
        r.reports.push_back(sublevel_measure(sig, eps, window, base_grid));
        if (r.reports.size() > 1 &&
            r.reports.back().measure > r.reports[r.reports.size() - 2].measure) {
            r.monotone = false;
        }
    }
    r.floor_report =
        sublevel_measure(sig, 1e-6 * sig.amplitude_bound(), window, base_grid);
    r.floor_fraction = r.floor_report.measure / window;
    r.paley_wiener = paley_wiener_report(sig, window, panels);
    r.demonstrated = r.monotone && r.floor_fraction <= 1e-4 &&
                     r.paley_wiener.converged && std::isfinite(r.paley_wiener.value);
    return r;
}

} // namespace qtime
