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
 * The almost-periodic signal f(t) = sum_j c_j exp(-i E_j t / hbar) of a state,
 * the measure of its sublevel sets {t : |f(t)| < eps}, the window mean of
 * |log|f||, and periodic approximants built by simultaneous rational
 * approximation of the frequencies.
 *
 * A state lies in S at time t exactly when f(t) = 0.
 *
 * Zero and crossing searches share one structure: the critical points of
 * |f|^2 (sign changes of d|f|^2/dt on a dense grid, refined by bisection) cut
 * the window into pieces on which |f| is monotone. Every level crossing is
 * then a single bisection per piece.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "quadrature.hpp"
#include "rational.hpp"
#include "spectral_core.hpp"
#include "summation.hpp"

namespace qtime {

/// Finite trigonometric sum t -> sum_j amps_j exp(-i freqs_j t).
class TrigSignal {
  public:
    TrigSignal(std::vector<double> freqs, std::vector<complex_t> amps)
        : freqs_(std::move(freqs)), amps_(std::move(amps)) {
        if (freqs_.size() != amps_.size()) {
            throw DimensionError("TrigSignal: frequency and amplitude counts differ");
        }
        if (freqs_.empty()) {
            throw DimensionError("TrigSignal: no terms");
        }
        for (std::size_t j = 1; j < freqs_.size(); ++j) {
            if (!(freqs_[j - 1] < freqs_[j])) {
                throw DegeneracyError(
                    "TrigSignal: frequencies must be strictly increasing");
            }
        }
    }

    /// f(t) of a state: frequencies E_j / hbar, amplitudes c_j.
    static TrigSignal from_state(const EnergySpectrum &spectrum,
                                 const QuantumState &state) {
        if (spectrum.size() != state.size()) {
            throw DimensionError("TrigSignal::from_state: size mismatch");
        }
        return {spectrum.angular_frequencies(),
                {state.coeffs().begin(), state.coeffs().end()}};
    }

    [[nodiscard]] std::span<const double> freqs() const { return freqs_; }
    [[nodiscard]] std::span<const complex_t> amps() const { return amps_; }
    [[nodiscard]] std::size_t count() const { return freqs_.size(); }

    /// sum_j |c_j|, an upper bound for |f|.
    [[nodiscard]] double amplitude_bound() const {
        CompensatedSum<double> acc;
        for (const auto &c : amps_) {
            acc += std::abs(c);
        }
        return acc.value();
    }

    /// Largest frequency scale of f and |f|^2.
    [[nodiscard]] double bandwidth() const {
        const double span = freqs_.back() - freqs_.front();
        return std::max({span, std::abs(freqs_.front()), std::abs(freqs_.back())});
    }

  private:
    std::vector<double> freqs_;
    std::vector<complex_t> amps_;
};

inline complex_t eval_f(const TrigSignal &sig, double t) {
    const auto w = sig.freqs();
    const auto c = sig.amps();
    complex_t acc{0.0, 0.0};
    for (std::size_t j = 0; j < c.size(); ++j) {
        acc += c[j] * std::polar(1.0, -w[j] * t);
    }
    return acc;
}

/// df/dt = sum_j (-i w_j) c_j exp(-i w_j t).
inline complex_t eval_df(const TrigSignal &sig, double t) {
    const auto w = sig.freqs();
    const auto c = sig.amps();
    complex_t acc{0.0, 0.0};
    for (std::size_t j = 0; j < c.size(); ++j) {
        acc += complex_t{0.0, -w[j]} * c[j] * std::polar(1.0, -w[j] * t);
    }
    return acc;
}

/// d|f|^2/dt = 2 Re(conj(f) f').
inline double abs_sq_slope(const TrigSignal &sig, double t) {
    return 2.0 * (std::conj(eval_f(sig, t)) * eval_df(sig, t)).real();
}

namespace detail {

/// Bisection until the bracket is below `tol`; returns the midpoint and the
/// number of halvings performed.
template <typename Pred>
std::pair<double, int> bisect(Pred &&below_at, double lo, double hi, double tol) {
    // Invariant: below_at(lo) != below_at(hi).
    const bool lo_below = below_at(lo);
    int steps = 0;
    while (hi - lo > tol && steps < 200) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        if (below_at(mid) == lo_below) {
            lo = mid;
        } else {
            hi = mid;
        }
        ++steps;
    }
    return {0.5 * (lo + hi), steps};
}

inline std::size_t grid_cells(const TrigSignal &sig, double a, double b,
                              std::size_t base_grid) {
    // At least 20 samples per shortest period of f and |f|^2.
    const double bw = sig.bandwidth();
    const double needed = std::ceil(20.0 * (b - a) * bw / (2.0 * std::numbers::pi));
    return std::max<std::size_t>(base_grid, static_cast<std::size_t>(needed));
}

} // namespace detail

/// A critical point of |f|^2.
struct CriticalPoint {
    double t = 0.0;
    bool minimum = false;
};

/**
 * Interior critical points of |f|^2 on (a, b), sorted, located by bisection
 * of d|f|^2/dt to about 1e-15 relative.
 */
inline std::vector<CriticalPoint> critical_points(const TrigSignal &sig, double a,
                                                  double b, std::size_t base_grid) {
    const std::size_t cells = detail::grid_cells(sig, a, b, base_grid);
    const double h = (b - a) / static_cast<double>(cells);
    std::vector<CriticalPoint> out;
    double t_prev = a;
    double d_prev = abs_sq_slope(sig, a);
    for (std::size_t i = 1; i <= cells; ++i) {
        const double t = i == cells ? b : a + h * static_cast<double>(i);
        const double d = abs_sq_slope(sig, t);
        const bool min_here = d_prev < 0.0 && d >= 0.0;
        const bool max_here = d_prev > 0.0 && d <= 0.0;
        if (min_here || max_here) {
            const double tol = 1e-15 * std::max(1.0, std::abs(t));
            auto [tc, steps] = detail::bisect(
                [&](double x) { return abs_sq_slope(sig, x) < 0.0; }, t_prev, t, tol);
            (void)steps;
            if (tc > a && tc < b) {
                out.push_back({tc, min_here});
            }
        }
        t_prev = t;
        d_prev = d;
    }
    return out;
}

/// Times in [0, window] where |f| is a local minimum below `tolerance`.
inline std::vector<double> find_zeros(const TrigSignal &sig, double window,
                                      std::size_t base_grid = 1000,
                                      double tolerance = 1e-9) {
    std::vector<double> zeros;
    if (std::abs(eval_f(sig, 0.0)) <= tolerance && abs_sq_slope(sig, 0.0) >= 0.0) {
        zeros.push_back(0.0);
    }
    for (const auto &cp : critical_points(sig, 0.0, window, base_grid)) {
        if (cp.minimum && std::abs(eval_f(sig, cp.t)) <= tolerance) {
            zeros.push_back(cp.t);
        }
    }
    if (std::abs(eval_f(sig, window)) <= tolerance &&
        abs_sq_slope(sig, window) <= 0.0) {
        zeros.push_back(window);
    }
    return zeros;
}

namespace detail {

/// [a, b] cut at every critical point of |f|^2 and at the base grid, so
/// that |f| is monotone between consecutive entries.
inline std::vector<double> monotone_breakpoints(const TrigSignal &sig, double a,
                                                double b, std::size_t base_grid) {
    const std::size_t cells = grid_cells(sig, a, b, base_grid);
    std::vector<double> pts;
    pts.reserve(cells + 1);
    for (std::size_t i = 0; i <= cells; ++i) {
        pts.push_back(i == cells ? b
                                 : a + (b - a) * static_cast<double>(i) /
                                           static_cast<double>(cells));
    }
    for (const auto &cp : critical_points(sig, a, b, base_grid)) {
        pts.push_back(cp.t);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

/// Times in (a, b) where |f| crosses `level`, sorted.
inline std::vector<double> level_crossings(const TrigSignal &sig, double level,
                                           double a, double b,
                                           std::size_t base_grid) {
    const auto pts = monotone_breakpoints(sig, a, b, base_grid);
    std::vector<double> out;
    auto below = [&](double x) { return std::abs(eval_f(sig, x)) < level; };
    bool prev = below(pts.front());
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const bool cur = below(pts[i]);
        if (cur != prev) {
            out.push_back(bisect(below, pts[i - 1], pts[i], 1e-14).first);
        }
        prev = cur;
    }
    return out;
}

} // namespace detail

/// Estimate of the Lebesgue measure of {t in [0, window] : |f(t)| < epsilon}.
struct MeasureReport {
    double epsilon = 0.0;
    double window = 0.0;
    double measure = 0.0;
    int refinement_depth = 0;    ///< most bisection halvings used on a crossing
    double error_bound = 0.0;
    std::size_t crossings = 0;
    bool saturated = false;      ///< epsilon >= sum |c_j|: whole window
};

/**
 * Sublevel-set measure by monotone-piece decomposition.
 *
 * On each piece where |f| is monotone the sublevel set is empty, the whole
 * piece, or an interval ending at the single crossing, which is refined by
 * bisection to 1e-12 in t. Each refined crossing contributes at most 1e-12
 * to `error_bound`; a crossing whose bisection stalls contributes its
 * unrefined bracket width instead.
 */
inline MeasureReport sublevel_measure(const TrigSignal &sig, double epsilon,
                                      double window, std::size_t base_grid = 1000) {
    if (!(epsilon > 0.0)) {
        throw PreconditionError("sublevel_measure: epsilon must be positive");
    }
    if (!(window > 0.0)) {
        throw PreconditionError("sublevel_measure: window must be positive");
    }
    if (base_grid < 1000) {
        throw PreconditionError("sublevel_measure: base_grid must be >= 1000");
    }
    MeasureReport report;
    report.epsilon = epsilon;
    report.window = window;
    if (epsilon >= sig.amplitude_bound()) {
        report.measure = window;
        report.saturated = true;
        return report;
    }

    constexpr double kCrossingTolerance = 1e-12;
    const auto pts = detail::monotone_breakpoints(sig, 0.0, window, base_grid);
    auto below = [&](double x) { return std::abs(eval_f(sig, x)) < epsilon; };

    std::vector<double> lengths;
    lengths.reserve(pts.size());
    bool prev = below(pts.front());
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const double lo = pts[i - 1];
        const double hi = pts[i];
        const bool cur = below(hi);
        if (prev && cur) {
            lengths.push_back(hi - lo);
        } else if (prev != cur) {
            auto [x, steps] = detail::bisect(below, lo, hi, kCrossingTolerance);
            report.refinement_depth = std::max(report.refinement_depth, steps);
            ++report.crossings;
            const double bracket = (hi - lo) / std::ldexp(1.0, steps);
            report.error_bound += std::max(kCrossingTolerance, bracket);
            lengths.push_back(prev ? x - lo : hi - x);
        }
        prev = cur;
    }
    // Pieces are visited in time order, so the sum is deterministic.
    CompensatedSum<double> acc;
    for (double l : lengths) {
        acc += l;
    }
    report.measure = std::min(acc.value(), window);
    return report;
}

enum class LogIntegrand {
    Absolute, ///< |log|f||
    Signed,   ///< log|f|
};

namespace detail {

template <typename G>
double dyadic_toward(G &&g, double regular, double singular, double threshold) {
    // Integrates g from `regular` to `singular` (either order) on intervals
    // halving toward `singular`, then closes the gap with a midpoint rule.
    const double sign = singular > regular ? 1.0 : -1.0;
    double far = regular;
    double len = std::abs(singular - regular);
    CompensatedSum<double> acc;
    for (int level = 0; level < 200; ++level) {
        len *= 0.5;
        const double near = singular - sign * len;
        const double piece = sign > 0 ? integrate_gl(g, far, near)
                                      : integrate_gl(g, near, far);
        acc += piece;
        far = near;
        if (level >= 3 && std::abs(piece) < threshold) {
            break;
        }
        if (len < 1e-300) {
            break;
        }
    }
    acc += len * g(singular - sign * 0.5 * len);
    return acc.value();
}

} // namespace detail

/**
 * (1/window) * integral over [0, window] of |log|f|| (or log|f|).
 *
 * The window is split into `panels` equal panels, further cut at every
 * critical point of |f|^2 and, for the absolute integrand, at every crossing
 * of |f| = 1. Each piece is integrated with 12-point Gauss-Legendre; pieces
 * adjacent to a minimum of |f| are integrated on dyadically shrinking
 * subintervals toward the minimum until a subinterval contributes less than
 * 1e-9.
 */
inline double paley_wiener_integral(const TrigSignal &sig, double window,
                                    std::size_t panels,
                                    LogIntegrand integrand = LogIntegrand::Absolute) {
    if (!(window > 0.0)) {
        throw PreconditionError("paley_wiener_integral: window must be positive");
    }
    if (panels < 100) {
        throw PreconditionError("paley_wiener_integral: panels must be >= 100");
    }
    if (sig.amplitude_bound() == 0.0) {
        throw DivergenceError(
            "paley_wiener_integral: f vanishes identically, log|f| diverges");
    }

    auto g = [&](double t) {
        const double v = std::log(std::abs(eval_f(sig, t)));
        if (!std::isfinite(v)) {
            // An exact floating-point zero; its measure is zero.
            return 0.0;
        }
        return integrand == LogIntegrand::Absolute ? std::abs(v) : v;
    };

    const std::size_t base_grid = std::max<std::size_t>(1000, 4 * panels);
    const auto crit = critical_points(sig, 0.0, window, base_grid);

    std::vector<double> pts;
    std::vector<double> minima;
    for (std::size_t i = 0; i <= panels; ++i) {
        pts.push_back(i == panels ? window
                                  : window * static_cast<double>(i) /
                                        static_cast<double>(panels));
    }
    for (const auto &cp : crit) {
        pts.push_back(cp.t);
        if (cp.minimum) {
            minima.push_back(cp.t);
        }
    }
    // Window ends at which |f| grows inward are boundary minima.
    if (abs_sq_slope(sig, 0.0) >= 0.0) {
        minima.push_back(0.0);
    }
    if (abs_sq_slope(sig, window) <= 0.0) {
        minima.push_back(window);
    }
    if (integrand == LogIntegrand::Absolute) {
        for (double x : detail::level_crossings(sig, 1.0, 0.0, window, base_grid)) {
            pts.push_back(x);
        }
    }
    std::sort(minima.begin(), minima.end());
    // A panel edge that falls on top of a minimum would leave a sliver whose
    // far end carries the singularity; let the minimum own that point.
    const double merge = 1e-6 * window / static_cast<double>(panels);
    std::erase_if(pts, [&](double x) {
        const auto it = std::lower_bound(minima.begin(), minima.end(), x - merge);
        return it != minima.end() && *it <= x + merge && *it != x;
    });
    pts.insert(pts.end(), minima.begin(), minima.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    auto is_min = [&](double x) {
        return std::binary_search(minima.begin(), minima.end(), x);
    };

    constexpr double kPanelThreshold = 1e-9;
    CompensatedSum<double> acc;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const double a = pts[i - 1];
        const double b = pts[i];
        if (!(b > a)) {
            continue;
        }
        const bool sa = is_min(a);
        const bool sb = is_min(b);
        if (sa && sb) {
            const double m = 0.5 * (a + b);
            acc += detail::dyadic_toward(g, m, a, kPanelThreshold);
            acc += detail::dyadic_toward(g, m, b, kPanelThreshold);
        } else if (sa) {
            acc += detail::dyadic_toward(g, b, a, kPanelThreshold);
        } else if (sb) {
            acc += detail::dyadic_toward(g, a, b, kPanelThreshold);
        } else {
            acc += integrate_gl(g, a, b);
        }
    }
    return acc.value() / window;
}

struct PaleyWienerReport {
    double window = 0.0;
    std::size_t panels = 0;
    double value = 0.0;         ///< at `panels`
    double refined_value = 0.0; ///< at 2 * `panels`
    bool converged = false;     ///< relative change <= 1e-5
};

inline PaleyWienerReport paley_wiener_report(const TrigSignal &sig, double window,
                                             std::size_t panels) {
    PaleyWienerReport r;
    r.window = window;
    r.panels = panels;
    r.value = paley_wiener_integral(sig, window, panels);
    r.refined_value = paley_wiener_integral(sig, window, 2 * panels);
    const double scale = std::max(std::abs(r.refined_value), 1e-300);
    r.converged = std::isfinite(r.value) &&
                  std::abs(r.refined_value - r.value) <= 1e-5 * scale;
    return r;
}

/// (1/window) * integral of g over [0, window], composite 12-point
/// Gauss-Legendre on `panels` panels.
template <typename G>
double bohr_mean(G &&g, double window, std::size_t panels = 1024) {
    if (!(window > 0.0)) {
        throw PreconditionError("bohr_mean: window must be positive");
    }
    if (panels < 1) {
        throw PreconditionError("bohr_mean: need at least one panel");
    }
    const double h = window / static_cast<double>(panels);
    CompensatedSum<double> acc;
    for (std::size_t i = 0; i < panels; ++i) {
        const double a = h * static_cast<double>(i);
        acc += integrate_gl(g, a, i + 1 == panels ? window : a + h);
    }
    return acc.value() / window;
}

/**
 * Periodic approximant of f: every frequency replaced by an integer multiple
 * k_j of a common base frequency.
 *
 * `drift_bound` = horizon * sum_j |c_j| |w_j - w~_j| bounds
 * sup_{[0, horizon]} |f - f~|.
 */
struct PeriodicApproximant {
    TrigSignal signal;
    double base_period = 0.0;
    std::vector<std::int64_t> harmonics;
    std::vector<Fraction> ratios; ///< w~_j / w_anchor
    std::size_t anchor = 0;
    double drift_bound = 0.0;
};

/**
 * Builds a periodic approximant whose drift bound is at most tol / 10, so
 * sup |f - f~| <= tol on [0, horizon].
 *
 * The anchor is w_0 (or w_1 if w_0 = 0); every ratio r_j = w_j / w_anchor is
 * replaced by a rational p_j / q_j and the base period is 2 pi L / |w_anchor|
 * with L the least common denominator, capped at 1e9. Terms are processed
 * from the largest weight |c_j| |w_anchor| horizon down, each with an equal
 * share of the drift budget. A term first tries round(L r_j) / L, which keeps
 * L; failing that it takes whichever of its continued-fraction convergents
 * or round(mL r_j) / (mL), m = 2..64, meets the budget with the smallest new
 * L. A candidate must also stay within half the gap to neighbouring
 * frequencies so the order of the terms is preserved.
 */
inline PeriodicApproximant periodic_approximation(const TrigSignal &sig, double tol,
                                                  double horizon) {
    if (!(tol > 0.0) || !(horizon > 0.0)) {
        throw PreconditionError(
            "periodic_approximation: tol and horizon must be positive");
    }
    constexpr std::int64_t kDenominatorCap = 1'000'000'000;
    constexpr double kDriftFraction = 0.1;
    constexpr std::int64_t kMaxMultiplier = 64;

    const auto w = sig.freqs();
    const auto c = sig.amps();
    const std::size_t n = sig.count();
    if (n == 1 && w[0] == 0.0) {
        return {sig, std::numeric_limits<double>::infinity(), {0}, {{0, 1}}, 0, 0.0};
    }
    const std::size_t anchor = w[0] != 0.0 ? 0 : 1;
    const double wa = w[anchor];

    std::vector<double> ratio(n);
    std::vector<double> weight(n);
    std::vector<double> slack(n, std::numeric_limits<double>::infinity());
    for (std::size_t j = 0; j < n; ++j) {
        ratio[j] = w[j] / wa;
        weight[j] = std::abs(c[j]) * std::abs(wa) * horizon;
        if (j > 0) {
            slack[j] = std::min(slack[j], 0.5 * std::abs(w[j] - w[j - 1]));
        }
        if (j + 1 < n) {
            slack[j] = std::min(slack[j], 0.5 * std::abs(w[j + 1] - w[j]));
        }
    }

    // Terms whose ratio is an exact small rational cost no drift.
    std::vector<Fraction> chosen(n);
    std::int64_t lcd = 1;
    std::vector<std::size_t> pending;
    for (std::size_t j = 0; j < n; ++j) {
        const auto conv = convergents(ratio[j], kDenominatorCap);
        if (!conv.empty() && conv.back().value() == ratio[j]) {
            chosen[j] = conv.back();
            lcd = capped_lcm(lcd, chosen[j].den, kDenominatorCap);
            if (lcd == 0) {
                throw ApproximationError(
                    "periodic_approximation: exact denominators exceed 1e9", 0.0);
            }
        } else {
            pending.push_back(j);
        }
    }
    std::stable_sort(pending.begin(), pending.end(),
                     [&](std::size_t a, std::size_t b) { return weight[a] > weight[b]; });

    const double target = kDriftFraction * tol;
    const double budget = pending.empty() ? 0.0 : target / static_cast<double>(pending.size());
    double drift_so_far = 0.0;

    for (std::size_t j : pending) {
        auto drift = [&](double num, double den) {
            return weight[j] * std::abs(ratio[j] - num / den);
        };
        auto feasible = [&](double num, double den) {
            return drift(num, den) <= budget &&
                   std::abs(w[j] - wa * num / den) < slack[j];
        };

        // Candidate denominators: keep L, multiples of L, or lcm with a
        // convergent denominator.
        std::int64_t best_l = 0;
        Fraction best{};
        const double keep = std::round(static_cast<double>(lcd) * ratio[j]);
        if (feasible(keep, static_cast<double>(lcd))) {
            best_l = lcd;
            best = {static_cast<std::int64_t>(keep), lcd};
        } else {
            for (std::int64_t m = 2; m <= kMaxMultiplier; ++m) {
                const __int128 q128 = static_cast<__int128>(lcd) * m;
                if (q128 > kDenominatorCap) {
                    break;
                }
                const auto q = static_cast<std::int64_t>(q128);
                const double num = std::round(static_cast<double>(q) * ratio[j]);
                if (feasible(num, static_cast<double>(q))) {
                    best_l = q;
                    best = {static_cast<std::int64_t>(num), q};
                    break;
                }
            }
            for (const Fraction &f : convergents(ratio[j], kDenominatorCap)) {
                if (!feasible(static_cast<double>(f.num), static_cast<double>(f.den))) {
                    continue;
                }
                const std::int64_t l = capped_lcm(lcd, f.den, kDenominatorCap);
                if (l != 0 && (best_l == 0 || l < best_l)) {
                    best_l = l;
                    best = f;
                }
                break;
            }
        }
        if (best_l == 0) {
            double closest = std::abs(ratio[j]) * weight[j];
            for (const Fraction &f : convergents(ratio[j], kDenominatorCap)) {
                closest = std::min(closest, drift(static_cast<double>(f.num),
                                                  static_cast<double>(f.den)));
            }
            const double achieved = drift_so_far + closest;
            throw ApproximationError(
                "periodic_approximation: tolerance unreachable within the "
                "denominator cap of 1e9 (achieved drift bound " +
                    std::to_string(achieved) + ")",
                achieved);
        }
        const std::int64_t g = std::gcd(best.num, best.den);
        chosen[j] = {best.num / g, best.den / g};
        lcd = best_l;
        drift_so_far += drift(static_cast<double>(best.num), static_cast<double>(best.den));
    }

    const double base_freq = wa / static_cast<double>(lcd);
    std::vector<double> freqs(n);
    std::vector<std::int64_t> harmonics(n);
    CompensatedSum<double> achieved;
    for (std::size_t j = 0; j < n; ++j) {
        harmonics[j] = chosen[j].num * (lcd / chosen[j].den);
        freqs[j] = static_cast<double>(harmonics[j]) * base_freq;
        achieved += std::abs(c[j]) * std::abs(w[j] - freqs[j]) * horizon;
    }
    if (base_freq < 0.0) {
        // Negative anchor: report k_j against the positive base frequency.
        for (auto &k : harmonics) {
            k = -k;
        }
    }
    return {TrigSignal(std::move(freqs), {c.begin(), c.end()}),
            2.0 * std::numbers::pi / std::abs(base_freq),
            std::move(harmonics),
            std::move(chosen),
            anchor,
            achieved.value()};
}

} // namespace qtime
