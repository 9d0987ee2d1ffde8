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

#ifndef BELLSIM_ESTIMATE_H
#define BELLSIM_ESTIMATE_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bellsim/settings.h"
#include "bellsim/tally.h"

namespace bellsim {

struct PairEstimate {
    std::uint64_t n = 0;
    double corr_hat = 0;
    double corr_se = 0;
    double marg_a_hat = 0;
    double marg_a_se = 0;
    double marg_b_hat = 0;
    double marg_b_se = 0;
};

/// Experimenter-side estimates from (φ_A, φ_B, A, B), plus the omniscient
/// Γ estimate when the tally holds mixture events.
struct Estimates {
    std::array<PairEstimate, kNumPairs> pairs;
    double beta_hat = 0;
    double beta_se = 0;
    std::optional<double> gamma_hat;
    std::optional<double> gamma_se;
};

/// Plug-in estimates: corr_hat = (n₊₊+n₋₋−n₊₋−n₋₊)/n with SE sqrt((1−r²)/n),
/// marginals likewise, beta_se = sqrt(Σ corr_se²), gamma_hat = fraction of
/// mixture events whose ξ is one of the chosen settings. Throws
/// InsufficientDataError naming the first empty pair.
Estimates estimate(const Tally &tally);

/// Fraction of mixture events with ξ ∈ chosen pair, and its binomial SE.
/// Empty when the tally has no mixture events.
struct GammaEstimate {
    std::uint64_t n = 0;
    double gamma_hat = 0;
    double gamma_se = 0;
};
std::optional<GammaEstimate> estimate_gamma(const Tally &tally);
std::optional<GammaEstimate> estimate_gamma(const Tally &tally, std::size_t pair_index);

struct AuditParams {
    double z_threshold = 4.0;
    double chi2_alpha = 1e-3;
    /// Cells with fewer events, or with any expected 2×2 count below
    /// `min_expected`, are skipped by the factorability audit.
    std::uint64_t min_cell_count = 20;
    double min_expected = 5.0;
};

struct ZScore {
    std::string label;
    double estimate = 0;
    double z = 0;
};

struct SideAudit {
    std::vector<ZScore> entries;
    double max_abs_z = 0;
    bool pass = true;
};

struct NoSignalingReport {
    SideAudit side_a;
    SideAudit side_b;
    double z_threshold = 0;
    bool pass = true;
};

/// ⟨A⟩ per (own setting, remote setting) tested against 0 and for equality
/// across the remote setting; the same for ⟨B⟩. Pass iff every |z| is below
/// the threshold. Throws InsufficientDataError if any pair is empty.
NoSignalingReport no_signaling_audit(const Tally &tally, const AuditParams &params = {});

struct CellTest {
    std::size_t pair_index = 0;
    XiCell cell = XiCell::kNone;
    LambdaBranch branch = LambdaBranch::kXi;
    OutcomeCounts counts;
    bool tested = false;
    double chi2 = 0;
    double p_value = 1;
    bool rejected = false;
    std::string skip_reason;
};

struct FactorabilityReport {
    std::vector<CellTest> cells;
    std::size_t n_tested = 0;
    std::size_t n_skipped = 0;
    /// Events from the uniform source, for which λ is continuous and no exact
    /// conditioning cell exists.
    std::uint64_t n_unconditioned = 0;
    double alpha = 0;
    double bonferroni_level = 0;
    bool pass = true;
};

/// Pearson chi-square test of A ⟂ B within each populated (pair, ξ, λ-branch)
/// cell, Bonferroni-corrected over the tested cells.
FactorabilityReport factorability_audit(const Tally &tally, const AuditParams &params = {});

/// Pearson statistic for a 2×2 table; 0 when a margin is empty.
double chi_square_2x2(const OutcomeCounts &counts);

/// Upper tail of the chi-square distribution with one degree of freedom.
double chi_square_1dof_sf(double statistic);

struct PairXiDistribution {
    std::uint64_t n = 0;
    std::array<double, 4> freq{};
    std::optional<GammaEstimate> gamma;
};

/// Per-pair and pooled empirical ξ distributions over slots (a, a′, b, b′).
struct SubensembleReport {
    std::array<PairXiDistribution, kNumPairs> pairs;
    std::array<double, 4> marginal{};
    std::uint64_t n_mixture = 0;
    std::optional<GammaEstimate> gamma;
};

SubensembleReport subensemble_report(const Tally &tally);

}  // namespace bellsim

#endif
