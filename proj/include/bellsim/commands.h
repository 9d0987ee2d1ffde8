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

#ifndef BELLSIM_COMMANDS_H
#define BELLSIM_COMMANDS_H

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

#include "bellsim/config.h"

namespace bellsim {

enum ExitCode : int { kExitOk = 0, kExitConfig = 1, kExitData = 2 };

/// Full-precision, locale-independent real formatting (17 significant digits).
std::string format_real(double x);

/// CSV `theta,gamma,beta_q,beta_mixture,beta_printed,beta_uniform`, θ outer,
/// Γ inner. θ bounds are in degrees when `degrees` is set.
int cmd_analytic_sweep(double theta_min, double theta_max, std::size_t steps, std::span<const double> gammas,
                       bool degrees, std::ostream &out, std::ostream &err);

/// Per-pair counts and correlations, then the CHSH summary. Exit 2 when a
/// settings pair has no events.
int cmd_simulate(const RunConfig &config, std::ostream &out, std::ostream &err, unsigned threads = 0);

struct Fig1Options {
    std::uint64_t events_per_point = 0;
    std::uint64_t seed = 0;
    std::size_t steps = 101;
    std::size_t chunk_size = kDefaultChunkSize;
    unsigned threads = 0;
};

/// Analytic and simulated β over θ ∈ [π, 2π] × Γ ∈ {1.0, 0.8, 0.5}, with
/// summary comment lines at the end. Point (i, j) uses stream_id 3i + j.
int cmd_reproduce_fig1(const Fig1Options &options, std::ostream &out, std::ostream &err);

/// Text report of singles, z-scores, ξ distributions and Γ estimate.
/// Exit 0 on pass, 2 on audit failure or insufficient data.
int cmd_no_signaling_audit(const RunConfig &config, std::ostream &out, std::ostream &err, unsigned threads = 0);

}  // namespace bellsim

#endif
