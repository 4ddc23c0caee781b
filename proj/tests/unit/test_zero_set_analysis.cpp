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

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "test_helpers.hpp"

#include "qtime/canonical_time.hpp"
#include "qtime/galapon_operator.hpp"
#include "qtime/random.hpp"
#include "qtime/rational.hpp"
#include "qtime/zero_set_analysis.hpp"

using namespace qtime;
using namespace qtime::test;
using Catch::Approx;

namespace {

const double r2 = 1.0 / std::sqrt(2.0);

/// (e^{-i t/2} + e^{-3i t/2}) / sqrt 2, |f| = sqrt2 |cos(t/2)|.
TrigSignal two_level_signal() { return TrigSignal({0.5, 1.5}, {r2, r2}); }

std::vector<TrigSignal> measure_zero_signals() {
    SplitMix64 rng(606);
    std::vector<TrigSignal> out;
    out.push_back(two_level_signal());
    const auto h5 = harmonic(5);
    out.push_back(TrigSignal::from_state(h5, random_s_state(5, rng)));
    const auto b5 = box(5, 0.25);
    out.push_back(TrigSignal::from_state(b5, random_state(5, rng)));
    const EnergySpectrum irr({0.0, 1.0, std::sqrt(2.0), std::sqrt(3.0), pi});
    out.push_back(TrigSignal::from_state(irr, random_s_state(5, rng)));
    return out;
}

/// Brute-force grid count of {t : |f(t)| < eps} on [0, window).
double grid_measure(const TrigSignal &sig, double eps, double window, std::size_t n) {
    const double h = window / static_cast<double>(n);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(eval_f(sig, (static_cast<double>(i) + 0.5) * h)) < eps) {
            ++hits;
        }
    }
    return static_cast<double>(hits) * h;
}

double sup_difference(const TrigSignal &a, const TrigSignal &b, double horizon,
                      std::size_t points) {
    double worst = 0.0;
    for (std::size_t i = 0; i <= points; ++i) {
        const double t = horizon * static_cast<double>(i) / static_cast<double>(points);
        worst = std::max(worst, std::abs(eval_f(a, t) - eval_f(b, t)));
    }
    return worst;
}

} // namespace

TEST_CASE("TrigSignal validation", "[zeroset]") {
    CHECK_THROWS_AS(TrigSignal({1.0, 2.0}, {1.0}), DimensionError);
    CHECK_THROWS_AS(TrigSignal({}, {}), DimensionError);
    CHECK_THROWS_AS(TrigSignal({2.0, 1.0}, {0.6, 0.8}), DegeneracyError);
    const auto sig = TrigSignal::from_state(harmonic(3, 2.0, 0.5), QuantumState::eigenstate(3, 1));
    CHECK(sig.freqs()[1] == Approx(3.0));
    CHECK(sig.amplitude_bound() == 1.0);
}

TEST_CASE("eval_f", "[zeroset]") {
    SplitMix64 rng(12);
    const auto spec = box(6);
    const auto psi = random_state(6, rng);
    const auto sig = TrigSignal::from_state(spec, psi);
    CHECK(near(eval_f(sig, 0.0), coefficient_sum(psi), 1e-15));

    const auto two = two_level_signal();
    CHECK(std::abs(eval_f(two, pi)) <= 1e-16);
    for (double t : linspace(-9.0, 9.0, 91)) {
        CHECK(std::norm(eval_f(two, t)) == Approx(1.0 + std::cos(t)).margin(1e-14));
        CHECK(std::abs(eval_f(sig, t)) <= sig.amplitude_bound() + 1e-15);
    }
}

TEST_CASE("eval_df matches central differences", "[zeroset]") {
    SplitMix64 rng(13);
    const auto sig = TrigSignal::from_state(harmonic(7), random_state(7, rng));
    const double h = 1e-5;
    for (double t : linspace(0.0, 10.0, 21)) {
        const complex_t fd = (eval_f(sig, t + h) - eval_f(sig, t - h)) / (2.0 * h);
        CHECK(near(eval_df(sig, t), fd, 1e-8));
        const double sd = (std::norm(eval_f(sig, t + h)) - std::norm(eval_f(sig, t - h))) / (2 * h);
        CHECK(abs_sq_slope(sig, t) == Approx(sd).margin(1e-8));
    }
}

TEST_CASE("evolved state's coefficient sum is f(t)", "[zeroset]") {
    SplitMix64 rng(14);
    const auto spec = box(4, 0.3);
    const auto psi = random_s_state(4, rng);
    const auto sig = TrigSignal::from_state(spec, psi);
    const auto taus = linspace(0.0, 12.0, 25);
    const auto decay = s_membership_decay(spec, psi, taus);
    for (std::size_t i = 0; i < taus.size(); ++i) {
        CHECK(decay.values[i] == Approx(std::abs(eval_f(sig, taus[i]))).margin(1e-14));
    }
}

TEST_CASE("|f| agrees with the canonical density of the conjugate state",
          "[zeroset][canonical]") {
    SplitMix64 rng(15);
    const auto spec = harmonic(6, 1.1);
    const auto psi = random_state(6, rng);
    std::vector<complex_t> conj(psi.coeffs().begin(), psi.coeffs().end());
    for (auto &c : conj) {
        c = std::conj(c);
    }
    const TrigSignal sig(spec.angular_frequencies(), conj);
    const CanonicalDensity d(spec, psi);
    for (double t : linspace(-6.0, 6.0, 121)) {
        CHECK(std::abs(eval_f(sig, t)) ==
              Approx(std::sqrt(d.gamma() * density_at(d, t))).margin(1e-12));
    }
}

TEST_CASE("sublevel_measure of the two-level signal", "[zeroset]") {
    const auto sig = two_level_signal();
    const double window = 2.0 * pi;

    SECTION("closed form and brute-force grid") {
        const auto rep = sublevel_measure(sig, 0.1, window, 1000);
        const double closed = 4.0 * std::asin(0.1 / std::sqrt(2.0));
        CHECK(rep.measure == Approx(closed).margin(1e-10));
        CHECK(rep.measure == Approx(grid_measure(sig, 0.1, window, 10'000'000)).margin(2e-6));
        CHECK(rep.crossings == 2);
        CHECK(rep.error_bound >= 0.0);
        CHECK(rep.error_bound <= 1e-11);
        CHECK(rep.refinement_depth > 0);
        CHECK_FALSE(rep.saturated);
    }
    SECTION("threshold above max |f| covers the window") {
        const auto rep = sublevel_measure(sig, std::sqrt(2.0), window, 1000);
        CHECK(rep.saturated);
        CHECK(rep.measure == window);
    }
    SECTION("measure / eps tends to 2 sqrt 2") {
        std::vector<double> eps{1e-2, 1e-3, 1e-4};
        double num = 0.0, den = 0.0;
        for (double e : eps) {
            const double m = sublevel_measure(sig, e, window, 1000).measure;
            CHECK(m == Approx(4.0 * std::asin(e / std::sqrt(2.0))).epsilon(1e-8));
            num += e * m;
            den += e * e;
        }
        CHECK(num / den == Approx(2.0 * std::sqrt(2.0)).epsilon(0.02));
    }
    SECTION("preconditions") {
        CHECK_THROWS_AS(sublevel_measure(sig, 0.0, window, 1000), PreconditionError);
        CHECK_THROWS_AS(sublevel_measure(sig, 0.1, -1.0, 1000), PreconditionError);
        CHECK_THROWS_AS(sublevel_measure(sig, 0.1, window, 999), PreconditionError);
    }
}

TEST_CASE("sublevel measure matches a brute-force grid on general signals",
          "[zeroset]") {
    for (const auto &sig : measure_zero_signals()) {
        for (double eps : {0.3, 0.1}) {
            const double window = 2.0 * pi;
            const auto rep = sublevel_measure(sig, eps, window, 1000);
            CHECK(rep.measure <= window);
            CHECK(rep.measure == Approx(grid_measure(sig, eps, window, 2'000'000)).margin(2e-5));
        }
    }
}

TEST_CASE("sublevel measure vanishes with eps", "[zeroset][property]") {
    for (const auto &sig : measure_zero_signals()) {
        const double window = 2.0 * pi;
        double prev = window;
        for (double eps : {1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6}) {
            const double m = sublevel_measure(sig, eps, window, 1000).measure;
            CHECK(m <= prev);
            prev = m;
        }
        const double floor =
            sublevel_measure(sig, 1e-6 * sig.amplitude_bound(), window, 1000).measure;
        CHECK(floor / window < 1e-4);
    }
}

TEST_CASE("zeros of f are times of S membership", "[zeroset]") {
    SECTION("two-level") {
        const auto z = find_zeros(two_level_signal(), 4.0 * pi);
        REQUIRE(z.size() == 2);
        CHECK(z[0] == Approx(pi).margin(1e-12));
        CHECK(z[1] == Approx(3.0 * pi).margin(1e-12));
    }
    SECTION("symmetric three-level state, zeros at cos t = -b / 2a") {
        const double a = 0.6, b = std::sqrt(1.0 - 2.0 * a * a);
        const auto spec = harmonic(3);
        const QuantumState psi({a, b, a});
        const auto z = find_zeros(TrigSignal::from_state(spec, psi), 2.0 * pi);
        REQUIRE(z.size() == 2);
        CHECK(z[0] == Approx(std::acos(-b / (2.0 * a))).margin(1e-10));
        CHECK(z[1] == Approx(2.0 * pi - std::acos(-b / (2.0 * a))).margin(1e-10));
        for (double t : z) {
            CHECK(std::abs(coefficient_sum(evolve(psi, spec, t))) <= 1e-9);
        }
    }
    SECTION("a state in S has a zero at t = 0") {
        const QuantumState psi({r2, -r2});
        const auto spec = box(2);
        const auto z = find_zeros(TrigSignal::from_state(spec, psi), 3.0);
        REQUIRE_FALSE(z.empty());
        CHECK(z.front() == 0.0);
        for (double t : z) {
            CHECK(std::abs(coefficient_sum(evolve(psi, spec, t))) <= 1e-9);
        }
    }
}

TEST_CASE("paley_wiener_integral", "[zeroset]") {
    SECTION("single term: |f| = 1") {
        const TrigSignal sig({2.0}, {complex_t{0.0, 1.0}});
        CHECK(paley_wiener_integral(sig, 10.0, 100) == Approx(0.0).margin(1e-15));
    }
    SECTION("two-level signed mean is -log(2)/2") {
        const double v = paley_wiener_integral(two_level_signal(), 2.0 * pi, 100,
                                               LogIntegrand::Signed);
        CHECK(v == Approx(-0.5 * std::log(2.0)).margin(1e-9));
    }
    SECTION("two-level absolute mean") {
        // 30-digit adaptive quadrature of |log(sqrt2 |cos(t/2)|)| over
        // [0, 2pi], split at pi/2, pi, 3pi/2.
        const double oracle = 0.583121808061637560;
        const auto rep = paley_wiener_report(two_level_signal(), 2.0 * pi, 100);
        CHECK(rep.value == Approx(oracle).margin(1e-9));
        CHECK(rep.converged);
        CHECK(std::abs(rep.refined_value - rep.value) <= 1e-6);
    }
    SECTION("a zero at the window start") {
        const QuantumState psi({r2, -r2});
        const auto sig = TrigSignal::from_state(harmonic(2), psi);
        // |f| = sqrt2 |sin(t/2)|: same mean as the cosine case over a period.
        const double v = paley_wiener_integral(sig, 2.0 * pi, 100, LogIntegrand::Signed);
        CHECK(v == Approx(-0.5 * std::log(2.0)).margin(1e-9));
    }
    SECTION("errors") {
        CHECK_THROWS_AS(paley_wiener_integral(TrigSignal({1.0, 2.0}, {0.0, 0.0}), 1.0, 100),
                        DivergenceError);
        CHECK_THROWS_AS(paley_wiener_integral(two_level_signal(), 1.0, 99),
                        PreconditionError);
        CHECK_THROWS_AS(paley_wiener_integral(two_level_signal(), 0.0, 100),
                        PreconditionError);
    }
}

TEST_CASE("log mean is stable under panel doubling", "[zeroset][property]") {
    for (const auto &sig : measure_zero_signals()) {
        for (double window : {2.0 * pi, 30.0}) {
            double prev = paley_wiener_integral(sig, window, 100);
            REQUIRE(std::isfinite(prev));
            for (std::size_t panels : {200u, 400u}) {
                const double v = paley_wiener_integral(sig, window, panels);
                CHECK(std::abs(v - prev) <= 1e-5 * std::abs(v));
                prev = v;
            }
        }
    }
}

TEST_CASE("bohr_mean", "[zeroset]") {
    CHECK(bohr_mean([](double) { return 1.0; }, 3.7) == Approx(1.0).margin(1e-15));
    for (int m : {1, 3, 10}) {
        CHECK(std::abs(bohr_mean([](double t) { return std::cos(t); }, 2.0 * pi * m)) <= 1e-13);
    }
    SECTION("|f|^2 averages to 1 for incommensurate frequencies") {
        SplitMix64 rng(16);
        const EnergySpectrum spec({0.0, 1.0, std::sqrt(2.0), std::sqrt(7.0)});
        const auto psi = random_state(4, rng);
        const auto sig = TrigSignal::from_state(spec, psi);
        double prev_err = 1.0;
        for (double window : {10.0, 100.0, 1000.0, 10000.0}) {
            double bound = 0.0;
            for (std::size_t j = 0; j < 4; ++j) {
                for (std::size_t k = 0; k < 4; ++k) {
                    if (j != k) {
                        bound += 2.0 * std::abs(psi[j] * psi[k]) /
                                 (std::abs(spec[j] - spec[k]) * window);
                    }
                }
            }
            const double mean = bohr_mean(
                [&](double t) { return std::norm(eval_f(sig, t)); }, window,
                static_cast<std::size_t>(window) + 16);
            const double err = std::abs(mean - 1.0);
            CHECK(err <= bound + 1e-12);
            prev_err = std::min(prev_err, err);
        }
        CHECK(prev_err < 1e-3);
    }
    CHECK_THROWS_AS(bohr_mean([](double) { return 1.0; }, 0.0), PreconditionError);
}

TEST_CASE("continued-fraction convergents", "[rational]") {
    const auto sq2 = convergents(std::sqrt(2.0), 1'000'000'000);
    const std::vector<Fraction> head{{1, 1}, {3, 2}, {7, 5}, {17, 12}, {41, 29},
                                     {99, 70}, {239, 169}, {577, 408}, {1393, 985}};
    REQUIRE(sq2.size() > head.size());
    for (std::size_t i = 0; i < head.size(); ++i) {
        CHECK(sq2[i] == head[i]);
    }
    CHECK(std::abs(std::sqrt(2.0) - 1393.0 / 985.0) == Approx(3.644e-7).epsilon(0.001));

    const auto three = convergents(3.0, 100);
    REQUIRE(three.size() == 1);
    CHECK(three[0] == Fraction{3, 1});
    const auto q = convergents(0.75, 100);
    CHECK(q.back() == Fraction{3, 4});
    const auto neg = convergents(-2.5, 100);
    CHECK(neg.back() == Fraction{-5, 2});
    CHECK(capped_lcm(4, 6, 100) == 12);
    CHECK(capped_lcm(999983, 999979, 1000) == 0);
}

TEST_CASE("periodic_approximation", "[zeroset]") {
    SECTION("commensurate harmonic signal is returned unchanged") {
        const auto sig = two_level_signal();
        const auto ap = periodic_approximation(sig, 1e-6, 100.0);
        CHECK(ap.signal.freqs()[0] == 0.5);
        CHECK(ap.signal.freqs()[1] == 1.5);
        CHECK(ap.base_period == Approx(4.0 * pi).margin(1e-14));
        CHECK(ap.harmonics == std::vector<std::int64_t>{1, 3});
        CHECK(ap.drift_bound == 0.0);
    }
    SECTION("(1, sqrt 2) at tol 1e-3, horizon 100") {
        const TrigSignal sig({1.0, std::sqrt(2.0)}, {r2, r2});
        const auto ap = periodic_approximation(sig, 1e-3, 100.0);
        CHECK(ap.ratios[1].den >= 985);
        CHECK(ap.drift_bound <= 1e-3);
        CHECK(sup_difference(sig, ap.signal, 100.0, 100'000) <= 1e-3);
        // Same amplitudes: the approximant keeps f's one-sided support.
        CHECK(ap.signal.amps()[0] == sig.amps()[0]);
        CHECK(ap.signal.amps()[1] == sig.amps()[1]);
        // Periodic with the reported base period.
        for (double t : {0.3, 2.0, 17.0}) {
            CHECK(near(eval_f(ap.signal, t), eval_f(ap.signal, t + ap.base_period), 1e-8));
        }
    }
    SECTION("sup-norm contract on random incommensurate signals") {
        SplitMix64 rng(18);
        for (int trial = 0; trial < 6; ++trial) {
            const EnergySpectrum spec({0.3, 1.0, std::sqrt(2.0), std::sqrt(3.0) + 0.1, pi});
            const auto sig = TrigSignal::from_state(spec, random_state(5, rng));
            for (double tol : {1e-2, 1e-3, 1e-4}) {
                const auto ap = periodic_approximation(sig, tol, 50.0);
                CHECK(ap.drift_bound <= tol);
                CHECK(sup_difference(sig, ap.signal, 50.0, 100'000) <= tol);
            }
        }
    }
    SECTION("zero anchor frequency") {
        const TrigSignal sig({0.0, std::sqrt(3.0), pi}, {0.6, 0.6, complex_t{0.0, 0.52915}});
        const auto ap = periodic_approximation(sig, 1e-4, 20.0);
        CHECK(ap.anchor == 1);
        CHECK(ap.signal.freqs()[0] == 0.0);
        CHECK(sup_difference(sig, ap.signal, 20.0, 20'000) <= 1e-4);
    }
    SECTION("unreachable tolerance") {
        const TrigSignal sig({1.0, std::sqrt(2.0), std::sqrt(3.0)}, {0.5, 0.5, r2});
        CHECK_THROWS_AS(periodic_approximation(sig, 1e-12, 1e6), ApproximationError);
        try {
            periodic_approximation(sig, 1e-12, 1e6);
        } catch (const ApproximationError &e) {
            CHECK(e.achieved_bound > 1e-13);
        }
        CHECK_THROWS_AS(periodic_approximation(sig, 0.0, 1.0), PreconditionError);
    }
}

TEST_CASE("log mean of periodic approximants converges to that of f",
          "[zeroset][property]") {
    // Dominant first term keeps |f| >= 0.8 - 0.45 - 0.3 - 0.25 > 0 with margin.
    const TrigSignal sig({0.0, 1.0, std::sqrt(2.0), std::sqrt(5.0)},
                         {0.8, 0.45 * r2 * complex_t{1.0, 1.0}, -0.3, complex_t{0.0, 0.25}});
    double min_abs = 1e9;
    const double window = 40.0;
    for (double t : linspace(0.0, window, 40001)) {
        min_abs = std::min(min_abs, std::abs(eval_f(sig, t)));
    }
    REQUIRE(min_abs > 0.0);
    const double exact = paley_wiener_integral(sig, window, 400);
    double prev = 1e9;
    for (double tol : {1e-2, 1e-3, 1e-4, 1e-5}) {
        const auto ap = periodic_approximation(sig, tol, window);
        const double diff = std::abs(paley_wiener_integral(ap.signal, window, 400) - exact);
        CHECK(diff <= 10.0 * tol / min_abs);
        CHECK(diff <= prev * 1.0001 + 1e-12);
        prev = diff;
    }
}
