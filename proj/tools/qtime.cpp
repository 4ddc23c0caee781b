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

// qtime: command-line front end. See README.md for the commands and the
// files each one writes.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qtime/cli.hpp"

int main(int argc, char **argv) {
    CLI::App app{"Time-operator diagnostics for bound quantum systems"};
    app.require_subcommand(1);

    qtime::RunConfig cfg;
    bool eps_given = false;
    std::vector<double> eps;

    auto add_common = [&](CLI::App *sub, bool needs_input) {
        auto *in = sub->add_option("--input", cfg.input_path,
                                   "Problem JSON (spectrum and optional state)");
        if (needs_input) {
            in->required();
        }
        sub->add_option("--output", cfg.output_path, "Output directory")
            ->capture_default_str();
        sub->add_option("--grid", cfg.grid, "Grid points (cauchy: largest N)")
            ->capture_default_str();
        sub->add_option("--tau-max", cfg.tau_max, "Time window")->capture_default_str();
        sub->add_option("--eps", eps, "Sublevel threshold (repeatable)")
            ->allow_extra_args(false)
            ->each([&](const std::string &) { eps_given = true; });
        sub->add_option("--seed", cfg.seed, "Seed for random states")
            ->capture_default_str();
        sub->add_option("--target", cfg.target, "Target eigenstate index")
            ->capture_default_str();
        sub->add_option("--tau", cfg.tau, "Shift for the covariance record")
            ->capture_default_str();
        sub->add_option("--panels", cfg.panels, "Quadrature panels")
            ->capture_default_str();
    };

    struct Entry {
        const char *name;
        const char *help;
        qtime::Command command;
        bool needs_input;
    };
    const Entry entries[] = {
        {"tg", "Galapon operator matrix and commutator diagnostics",
         qtime::Command::Tg, true},
        {"canonical", "Canonical time density and covariance check",
         qtime::Command::Canonical, true},
        {"cauchy", "Convergence of the Cauchy sequence in S", qtime::Command::Cauchy,
         false},
        {"zeroset", "Sublevel measures and log-integral of f(t)",
         qtime::Command::Zeroset, true},
        {"claims", "Run every claim check",
         qtime::Command::Claims, true},
    };
    for (const auto &e : entries) {
        auto *sub = app.add_subcommand(e.name, e.help);
        add_common(sub, e.needs_input);
        sub->callback([&cfg, cmd = e.command] { cfg.command = cmd; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }
    if (eps_given) {
        cfg.epsilons = eps;
    }
    return qtime::run(cfg);
}
