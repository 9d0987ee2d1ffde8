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

#include "bellsim/commands.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>
#include <vector>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "bellsim/analytic.h"
#include "bellsim/errors.h"
#include "bellsim/estimate.h"
#include "bellsim/simulation.h"

namespace bellsim {

namespace {

constexpr std::array<std::string_view, kNumPairs> kPairLabels = {"ab", "ab'", "a'b", "a'b'"};
constexpr std::array<double, 3> kFig1Gammas = {1.0, 0.8, 0.5};

void echo_config(const RunConfig &cfg, std::string_view command, std::ostream &out) {
    fmt::print(out, "# command={}\n", command);
    fmt::print(out, "# source={}\n", source_kind_name(cfg.source_kind));
    if (cfg.gamma) {
        fmt::print(out, "# gamma={}\n", format_real(*cfg.gamma));
    }
    if (cfg.xi) {
        fmt::print(out, "# xi={}\n", format_real(Angle(*cfg.xi).radians()));
    }
    if (cfg.theta) {
        fmt::print(out, "# theta={}\n", format_real(*cfg.theta));
    }
    fmt::print(out, "# a={}\n", format_real(cfg.quad.a.radians()));
    fmt::print(out, "# a_prime={}\n", format_real(cfg.quad.a_prime.radians()));
    fmt::print(out, "# b={}\n", format_real(cfg.quad.b.radians()));
    fmt::print(out, "# b_prime={}\n", format_real(cfg.quad.b_prime.radians()));
    fmt::print(out, "# events={}\n", cfg.events);
    fmt::print(out, "# seed={}{}\n", cfg.seed, cfg.seed_from_env ? " (from BELLSIM_SEED)" : "");
}

std::string optional_real(const std::optional<double> &x) {
    return x ? format_real(*x) : std::string();
}

}  // namespace

std::string format_real(double x) {
    return fmt::format("{:.17g}", x);
}

int cmd_analytic_sweep(double theta_min, double theta_max, std::size_t steps, std::span<const double> gammas,
                       bool degrees, std::ostream &out, std::ostream &err) {
    if (degrees) {
        theta_min *= kPi / 180.0;
        theta_max *= kPi / 180.0;
    }
    std::vector<BetaPoint> rows;
    try {
        rows = sweep_fig1(theta_min, theta_max, steps, gammas);
    } catch (const ConfigError &e) {
        fmt::print(err, "analytic-sweep: {}\n", e.what());
        return kExitConfig;
    }
    out << "theta,gamma,beta_q,beta_mixture,beta_printed,beta_uniform\n";
    for (const BetaPoint &r : rows) {
        fmt::print(out, "{},{},{},{},{},{}\n", format_real(r.theta), format_real(r.gamma), format_real(r.beta_q),
                   format_real(r.beta_mixture), format_real(r.beta_printed), format_real(r.beta_uniform));
    }
    return kExitOk;
}

int cmd_simulate(const RunConfig &cfg, std::ostream &out, std::ostream &err, unsigned threads) {
    echo_config(cfg, "simulate", out);
    SourcePolicy source = cfg.source();
    Estimates est;
    Tally tally;
    try {
        tally = run_simulation(cfg.quad, source, cfg.events, {cfg.seed, 0}, cfg.chunk_size, threads);
        est = estimate(tally);
    } catch (const ConfigError &e) {
        fmt::print(err, "simulate: {}\n", e.what());
        return kExitConfig;
    } catch (const InsufficientDataError &e) {
        fmt::print(err, "simulate: insufficient data: {}\n", e.what());
        return kExitData;
    }

    out << "pair,n,npp,npm,nmp,nmm,corr_hat,corr_se\n";
    for (std::size_t p = 0; p < kNumPairs; ++p) {
        OutcomeCounts c = tally.pair_counts(p);
        fmt::print(out, "{},{},{},{},{},{},{},{}\n", kPairLabels[p], c.total(), c.pp, c.pm, c.mp, c.mm,
                   format_real(est.pairs[p].corr_hat), format_real(est.pairs[p].corr_se));
    }
    out << "beta_hat,beta_se,beta_analytic,gamma_hat\n";
    fmt::print(out, "{},{},{},{}\n", format_real(est.beta_hat), format_real(est.beta_se),
               format_real(beta_analytic(cfg.quad, source)), optional_real(est.gamma_hat));
    return kExitOk;
}

int cmd_reproduce_fig1(const Fig1Options &opt, std::ostream &out, std::ostream &err) {
    std::vector<double> grid;
    try {
        grid = theta_grid(kPi, kTwoPi, opt.steps);
    } catch (const ConfigError &e) {
        fmt::print(err, "reproduce-fig1: {}\n", e.what());
        return kExitConfig;
    }

    fmt::print(out, "# command=reproduce-fig1\n");
    fmt::print(out, "# theta_min={}\n# theta_max={}\n# steps={}\n", format_real(kPi), format_real(kTwoPi), opt.steps);
    fmt::print(out, "# family=a:2theta,a_prime:0,b:theta,b_prime:3theta\n");
    fmt::print(out, "# gammas=1,0.8,0.5\n");
    fmt::print(out, "# events_per_point={}\n# seed={}\n", opt.events_per_point, opt.seed);
    out << "theta,gamma,beta_analytic,beta_sim,beta_se,beta_uniform\n";

    double max_z = 0;
    std::array<double, kFig1Gammas.size()> max_mixture{};
    std::array<double, kFig1Gammas.size()> max_printed{};
    for (std::size_t i = 0; i < grid.size(); ++i) {
        SettingsQuad quad = SettingsQuad::from_theta(grid[i]);
        double uniform = chsh(corr_uniform, quad);
        for (std::size_t j = 0; j < kFig1Gammas.size(); ++j) {
            double gamma = kFig1Gammas[j];
            double analytic = beta_mixture(quad, gamma);
            max_mixture[j] = std::max(max_mixture[j], std::abs(analytic));
            max_printed[j] = std::max(max_printed[j], std::abs(beta_printed(quad, gamma)));

            Estimates est;
            try {
                Tally tally = run_simulation(quad, GammaMixture{gamma, PairedSymmetric{}}, opt.events_per_point,
                                             {opt.seed, i * kFig1Gammas.size() + j}, opt.chunk_size, opt.threads);
                est = estimate(tally);
            } catch (const ConfigError &e) {
                fmt::print(err, "reproduce-fig1: {}\n", e.what());
                return kExitConfig;
            } catch (const InsufficientDataError &e) {
                fmt::print(err, "reproduce-fig1: insufficient data: {}\n", e.what());
                return kExitData;
            }
            if (est.beta_se > 0) {
                max_z = std::max(max_z, std::abs(analytic - est.beta_hat) / est.beta_se);
            }
            fmt::print(out, "{},{},{},{},{},{}\n", format_real(grid[i]), format_real(gamma), format_real(analytic),
                       format_real(est.beta_hat), format_real(est.beta_se), format_real(uniform));
        }
    }

    fmt::print(out, "# max_abs_z={}\n", format_real(max_z));
    for (std::size_t j = 0; j < kFig1Gammas.size(); ++j) {
        fmt::print(out, "# gamma={} max_abs_beta_mixture={} max_abs_beta_printed={}\n", format_real(kFig1Gammas[j]),
                   format_real(max_mixture[j]), format_real(max_printed[j]));
    }
    return kExitOk;
}

int cmd_no_signaling_audit(const RunConfig &cfg, std::ostream &out, std::ostream &err, unsigned threads) {
    echo_config(cfg, "no-signaling-audit", out);
    fmt::print(out, "# z_threshold={}\n# chi2_alpha={}\n", format_real(cfg.audit.z_threshold),
               format_real(cfg.audit.chi2_alpha));

    Tally tally;
    NoSignalingReport singles;
    try {
        tally = run_simulation(cfg.quad, cfg.source(), cfg.events, {cfg.seed, 0}, cfg.chunk_size, threads);
        singles = no_signaling_audit(tally, cfg.audit);
    } catch (const ConfigError &e) {
        fmt::print(err, "no-signaling-audit: {}\n", e.what());
        return kExitConfig;
    } catch (const InsufficientDataError &e) {
        fmt::print(err, "no-signaling-audit: insufficient data: {}\n", e.what());
        return kExitData;
    }

    for (const auto *side : {&singles.side_a, &singles.side_b}) {
        fmt::print(out, "side {}: max|z|={} {}\n", side == &singles.side_a ? "A" : "B", format_real(side->max_abs_z),
                   side->pass ? "PASS" : "FAIL");
        for (const ZScore &z : side->entries) {
            fmt::print(out, "  {:<24} estimate={:<24} z={}\n", z.label, format_real(z.estimate), format_real(z.z));
        }
    }

    SubensembleReport sub = subensemble_report(tally);
    if (sub.n_mixture > 0) {
        out << "xi distribution per settings pair (a, a', b, b'):\n";
        for (std::size_t p = 0; p < kNumPairs; ++p) {
            const PairXiDistribution &d = sub.pairs[p];
            fmt::print(out, "  {:<5} n={} freq={},{},{},{}", kPairLabels[p], d.n, format_real(d.freq[0]),
                       format_real(d.freq[1]), format_real(d.freq[2]), format_real(d.freq[3]));
            if (d.gamma) {
                fmt::print(out, " gamma_hat={} se={}", format_real(d.gamma->gamma_hat), format_real(d.gamma->gamma_se));
            }
            out << "\n";
        }
        fmt::print(out, "  all   n={} freq={},{},{},{}\n", sub.n_mixture, format_real(sub.marginal[0]),
                   format_real(sub.marginal[1]), format_real(sub.marginal[2]), format_real(sub.marginal[3]));
        fmt::print(out, "gamma_hat={} se={}\n", format_real(sub.gamma->gamma_hat), format_real(sub.gamma->gamma_se));
    } else {
        out << "xi distribution: not applicable (source has no xi mixture)\n";
    }

    FactorabilityReport fact = factorability_audit(tally, cfg.audit);
    fmt::print(out, "factorability: tested={} skipped={} unconditioned_events={} level={} {}\n", fact.n_tested,
               fact.n_skipped, fact.n_unconditioned, format_real(fact.bonferroni_level), fact.pass ? "PASS" : "FAIL");

    fmt::print(out, "no-signaling audit: {}\n", singles.pass ? "PASS" : "FAIL");
    return singles.pass ? kExitOk : kExitData;
}

}  // namespace bellsim
