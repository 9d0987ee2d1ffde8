// Copyright 2026 The Bellsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line driver: analytic sweeps, event simulation and audits.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bellsim/commands.h"
#include "bellsim/config.h"
#include "bellsim/errors.h"

namespace {

std::string read_document(const std::string &path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path);
    if (!in) {
        throw bellsim::ConfigError("cannot open config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bellsim::RunConfig load_config(const std::string &path, bool degrees) {
    bellsim::RunConfig cfg = bellsim::parse_config(read_document(path), degrees);
    std::optional<std::string_view> env;
    if (const char *s = std::getenv("BELLSIM_SEED")) {
        env = s;
    }
    bellsim::apply_seed_override(cfg, env);
    return cfg;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Event-level CHSH simulator for measurement-dependent local hidden-variable models"};
    app.require_subcommand(1);

    bool degrees = false;
    unsigned threads = 0;
    app.add_flag("--degrees", degrees, "Read angles in degrees instead of radians")->configurable(false);
    app.add_option("--threads", threads, "Worker threads for simulation (0 = all cores)");

    auto *sweep = app.add_subcommand("analytic-sweep", "Closed-form beta curves on the theta family");
    double theta_min = 0;
    double theta_max = 0;
    std::size_t steps = 0;
    std::vector<double> gammas;
    sweep->add_option("--theta-min", theta_min)->required();
    sweep->add_option("--theta-max", theta_max)->required();
    sweep->add_option("--steps", steps)->required();
    sweep->add_option("--gammas", gammas)->required()->delimiter(',');

    auto *simulate = app.add_subcommand("simulate", "Simulate events and estimate CHSH");
    std::string sim_config;
    simulate->add_option("--config", sim_config, "JSON config file, or - for stdin")->required();

    auto *fig1 = app.add_subcommand("reproduce-fig1", "Analytic vs simulated beta over theta in [pi, 2pi]");
    bellsim::Fig1Options fig1_opt;
    fig1->add_option("--events", fig1_opt.events_per_point, "Events per (theta, gamma) point")->required();
    fig1->add_option("--seed", fig1_opt.seed)->required();
    fig1->add_option("--steps", fig1_opt.steps)->capture_default_str();

    auto *audit = app.add_subcommand("no-signaling-audit", "Singles, xi distribution and gamma diagnostics");
    std::string audit_config;
    audit->add_option("--config", audit_config, "JSON config file, or - for stdin")->required();

    // Subcommand-local --degrees is accepted too.
    for (auto *sub : {sweep, simulate, fig1, audit}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return bellsim::kExitConfig;
    }

    try {
        if (*sweep) {
            return bellsim::cmd_analytic_sweep(theta_min, theta_max, steps, gammas, degrees, std::cout, std::cerr);
        }
        if (*simulate) {
            return bellsim::cmd_simulate(load_config(sim_config, degrees), std::cout, std::cerr, threads);
        }
        if (*fig1) {
            fig1_opt.threads = threads;
            return bellsim::cmd_reproduce_fig1(fig1_opt, std::cout, std::cerr);
        }
        if (*audit) {
            return bellsim::cmd_no_signaling_audit(load_config(audit_config, degrees), std::cout, std::cerr, threads);
        }
    } catch (const bellsim::ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return bellsim::kExitConfig;
    }
    return bellsim::kExitConfig;
}
