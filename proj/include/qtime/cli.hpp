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
 * Command runner behind the `qtime` executable.
 *
 * Each command reads a problem document (see io.hpp), writes its results into
 * the output directory and returns an exit status: 0 on success, 2 for
 * unreadable or malformed input, 3 when a physics precondition fails.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "canonical_time.hpp"
#include "claims.hpp"
#include "denseness_sequences.hpp"
#include "errors.hpp"
#include "galapon_operator.hpp"
#include "io.hpp"
#include "random.hpp"
#include "spectral_core.hpp"
#include "zero_set_analysis.hpp"

namespace qtime {

enum class Command { Tg, Canonical, Cauchy, Zeroset, Claims };

inline Command parse_command(const std::string &name) {
    if (name == "tg") return Command::Tg;
    if (name == "canonical") return Command::Canonical;
    if (name == "cauchy") return Command::Cauchy;
    if (name == "zeroset") return Command::Zeroset;
    if (name == "claims") return Command::Claims;
    throw ParseError("unknown command '" + name + "'");
}

struct RunConfig {
    Command command = Command::Claims;
    std::string input_path;
    std::string output_path = ".";
    std::size_t grid = 1000;
    double tau_max = 50.0;
    std::vector<double> epsilons{1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
    std::uint64_t seed = 1;
    std::size_t target = 0;
    double tau = 1.0;          ///< shift used by the canonical covariance record
    std::size_t panels = 256;  ///< quadrature panels for the log mean

    void validate() const {
        if (grid < 2) {
            throw ParseError("--grid must be >= 2");
        }
        if (!(tau_max > 0.0)) {
            throw ParseError("--tau-max must be positive");
        }
        for (double e : epsilons) {
            if (!(e > 0.0)) {
                throw ParseError("--eps values must be positive");
            }
        }
        if (panels < 100) {
            throw ParseError("--panels must be >= 100");
        }
    }
};

namespace detail {

inline std::ofstream open_output(const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ParseError("cannot write output file '" + path.string() + "'");
    }
    return out;
}

inline void write_json_file(const std::filesystem::path &path, const json &j) {
    auto out = open_output(path);
    out << j.dump(2) << '\n';
}

/// The input state, or a random state in S drawn from the seed.
inline QuantumState state_or_random(const Problem &p, std::uint64_t seed) {
    if (p.state) {
        return *p.state;
    }
    SplitMix64 rng(seed);
    return random_s_state(p.spectrum.size(), rng);
}

inline void run_tg(const RunConfig &cfg, const std::filesystem::path &out) {
    const Problem p = load_problem(cfg.input_path);
    const auto tg = build_t_g(p.spectrum);
    const auto h = build_hamiltonian(p.spectrum);
    const auto comm = commutator(tg, h);
    const auto weak = weak_commutator(p.spectrum);

    double diag = 0.0;
    for (std::size_t j = 0; j < comm.size(); ++j) {
        diag = std::max(diag, std::abs(comm(j, j)));
    }

    const QuantumState psi = project_onto_s(state_or_random(p, cfg.seed));
    const auto lhs = matvec(comm, psi.coeffs());
    std::vector<complex_t> resid(lhs.size());
    for (std::size_t j = 0; j < lhs.size(); ++j) {
        resid[j] = lhs[j] - complex_t{0.0, p.spectrum.hbar()} * psi[j];
    }

    const json matrix = matrix_to_json(tg);
    write_json_file(out / "t_g.json", matrix);

    // Re-read what was written and compare.
    const auto reread = matrix_from_json(
        parse_json_text(read_text_file((out / "t_g.json").string())), true);

    json diag_json;
    diag_json["n"] = tg.size();
    diag_json["hermiticity_defect"] = tg.hermiticity_defect();
    diag_json["spectral_norm"] = spectral_norm(tg);
    diag_json["commutator_vs_weak_max_diff"] = max_abs_difference(comm, weak);
    diag_json["commutator_diagonal_max"] = diag;
    diag_json["commutator_on_s_residual"] = vector_norm(resid);
    diag_json["round_trip_exact"] = reread == tg;
    write_json_file(out / "tg_diagnostics.json", diag_json);
}

inline void run_canonical(const RunConfig &cfg, const std::filesystem::path &out) {
    const Problem p = load_problem(cfg.input_path);
    const QuantumState psi = state_or_random(p, cfg.seed);
    const CanonicalDensity d(p.spectrum, psi);
    const auto ts = linspace(0.0, cfg.tau_max, cfg.grid);
    std::vector<double> ps(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        ps[i] = density_at(d, ts[i]);
    }
    {
        auto f = open_output(out / "density.csv");
        write_csv(f, {"t", "p"}, {ts, ps});
    }
    json rec;
    rec["tau"] = cfg.tau;
    rec["max_deviation"] = verify_covariance(p.spectrum, psi, cfg.tau, ts);
    rec["grid_points"] = ts.size();
    write_json_file(out / "covariance.json", rec);
}

inline void run_cauchy(const RunConfig &cfg, const std::filesystem::path &out) {
    std::vector<double> ns, c0s, dists;
    for (std::size_t n = std::max<std::size_t>(1, cfg.target); n <= cfg.grid; ++n) {
        const auto step = cauchy_state(n, cfg.target);
        ns.push_back(static_cast<double>(n));
        c0s.push_back(step.state[cfg.target].real());
        dists.push_back(distance_to_eigenstate(step, cfg.target));
    }
    auto f = open_output(out / "cauchy.csv");
    write_csv(f, {"N", "c0", "distance"}, {ns, c0s, dists});
}

inline json measure_rows_json(const std::vector<MeasureReport> &reports) {
    json rows = json::array();
    for (const auto &r : reports) {
        rows.push_back({{"epsilon", r.epsilon},
                        {"measure", r.measure},
                        {"error_bound", r.error_bound}});
    }
    return rows;
}

inline void write_measure_csv(const std::filesystem::path &path,
                              const std::vector<MeasureReport> &reports) {
    std::vector<double> eps, meas, err;
    for (const auto &r : reports) {
        eps.push_back(r.epsilon);
        meas.push_back(r.measure);
        err.push_back(r.error_bound);
    }
    auto f = open_output(path);
    write_csv(f, {"epsilon", "measure", "error_bound"}, {eps, meas, err});
}

inline json paley_wiener_json(const PaleyWienerReport &pw) {
    return {{"window", pw.window},
            {"panels", pw.panels},
            {"value", pw.value},
            {"converged", pw.converged}};
}

inline void run_zeroset(const RunConfig &cfg, const std::filesystem::path &out) {
    const Problem p = load_problem(cfg.input_path);
    const auto sig = TrigSignal::from_state(p.spectrum, state_or_random(p, cfg.seed));
    const std::size_t base_grid = std::max<std::size_t>(1000, cfg.grid);
    std::vector<MeasureReport> reports;
    for (double eps : cfg.epsilons) {
        reports.push_back(sublevel_measure(sig, eps, cfg.tau_max, base_grid));
    }
    write_measure_csv(out / "measure.csv", reports);
    write_json_file(out / "paley_wiener.json",
                    paley_wiener_json(paley_wiener_report(sig, cfg.tau_max, cfg.panels)));
}

inline void run_claims(const RunConfig &cfg, const std::filesystem::path &out) {
    const Problem p = load_problem(cfg.input_path);
    const QuantumState raw = state_or_random(p, cfg.seed);
    const PhysicsConfig physics{p.spectrum.hbar()};
    const bool projected = !in_s(raw, physics);
    const QuantumState psi = projected ? project_onto_s(raw) : raw;
    const auto taus = linspace(0.0, cfg.tau_max, cfg.grid);

    const auto one = check_covariance_failure(p.spectrum, psi);
    const auto two = check_noninvariance(p.spectrum, psi, taus, physics);
    const auto sig = TrigSignal::from_state(p.spectrum, psi);
    const auto three = check_measure_zero(sig, cfg.epsilons, cfg.tau_max,
                                          std::max<std::size_t>(1000, cfg.grid),
                                          cfg.panels);

    {
        auto f = open_output(out / "covariance_deviation.csv");
        write_deviation_csv(f, covariance_deviation(p.spectrum, psi, taus));
    }
    {
        auto f = open_output(out / "s_membership.csv");
        write_deviation_csv(f, two.series);
    }
    write_measure_csv(out / "measure.csv", three.reports);

    json summary;
    summary["seed"] = cfg.seed;
    summary["n"] = p.spectrum.size();
    summary["spectrum"] = descriptor_to_json(p.descriptor);
    summary["state_projected_onto_s"] = projected;
    summary["claims"]["covariance_failure"] = {
        {"tg_norm", one.tg_norm},
        {"tau", one.tau},
        {"deviation", one.deviation},
        {"threshold", one.threshold},
        {"demonstrated", one.demonstrated}};
    summary["claims"]["s_noninvariance"] = {
        {"max_value", two.max_value},
        {"tau_at_max", two.tau_at_max},
        {"threshold", two.threshold},
        {"demonstrated", two.demonstrated}};
    summary["claims"]["measure_zero"] = {
        {"window", cfg.tau_max},
        {"monotone", three.monotone},
        {"floor_epsilon", three.floor_report.epsilon},
        {"floor_fraction", three.floor_fraction},
        {"sublevel", measure_rows_json(three.reports)},
        {"paley_wiener", paley_wiener_json(three.paley_wiener)},
        {"demonstrated", three.demonstrated}};
    summary["all_demonstrated"] =
        one.demonstrated && two.demonstrated && three.demonstrated;
    write_json_file(out / "claims.json", summary);
}

} // namespace detail

/// Runs one command. Diagnostics go to `err`.
inline int run(const RunConfig &config, std::ostream &err = std::cerr) {
    try {
        config.validate();
        if (config.command != Command::Cauchy && config.input_path.empty()) {
            throw ParseError("--input is required for this command");
        }
        const std::filesystem::path out(config.output_path);
        std::error_code ec;
        std::filesystem::create_directories(out, ec);
        if (ec) {
            throw ParseError("cannot create output directory '" + out.string() +
                             "': " + ec.message());
        }
        switch (config.command) {
        case Command::Tg:
            detail::run_tg(config, out);
            break;
        case Command::Canonical:
            detail::run_canonical(config, out);
            break;
        case Command::Cauchy:
            detail::run_cauchy(config, out);
            break;
        case Command::Zeroset:
            detail::run_zeroset(config, out);
            break;
        case Command::Claims:
            detail::run_claims(config, out);
            break;
        }
        return 0;
    } catch (const ParseError &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }
}

} // namespace qtime
