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

#ifndef BELLSIM_ANALYTIC_H
#define BELLSIM_ANALYTIC_H

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "bellsim/angle.h"
#include "bellsim/settings.h"
#include "bellsim/source.h"

namespace bellsim {

/// E(φ_A, φ_B) = ⟨A·B⟩.
using CorrelationFn = std::function<double(Angle, Angle)>;

/// Correlation under a delta-pair source at ξ, as −cos(a−ξ)·cos(b−ξ).
double corr_fixed_xi(Angle a, Angle b, Angle xi);

/// Same quantity written as −cos(a−b) + sin(a−ξ)·sin(b−ξ).
double corr_fixed_xi_sine_form(Angle a, Angle b, Angle xi);

/// Same quantity via the factorized four-term probability expansion averaged
/// over λ ∈ {ξ, ξ+π}.
double corr_via_ch_expansion(Angle a, Angle b, Angle xi);

/// Correlation under a uniform λ source: −½·cos(a−b).
double corr_uniform(Angle a, Angle b);

/// ⟨A⟩(a) under `source`. Zero for every source this library models: the
/// antipodal λ pair cancels cos(a−λ), and so does the full-circle average.
double marginal_a(Angle a, const SourcePolicy &source);
double marginal_b(Angle b, const SourcePolicy &source);

/// Σ_ξ w(ξ | pair)·corr_fixed_xi(φ_A, φ_B, ξ) with the scheme's weights.
double corr_gamma_mixture(const SettingsQuad &quad, const SettingsPair &pair, double gamma, const XiScheme &scheme);

/// E(a,b) + E(a,b′) + E(a′,b) − E(a′,b′), correlations given in pair-index order.
double chsh(std::span<const double, kNumPairs> by_pair);
double chsh(const CorrelationFn &e, const SettingsQuad &quad);

/// −cos(a−b) − cos(a−b′) − cos(a′−b) + cos(a′−b′).
double beta_q(const SettingsQuad &quad);

/// CHSH of the Γ-mixture, each term using its own pair's ξ-conditional.
double beta_mixture(const SettingsQuad &quad, double gamma, const XiScheme &scheme = PairedSymmetric{});

/// CHSH value the model predicts for `source` on `quad`.
double beta_analytic(const SettingsQuad &quad, const SourcePolicy &source);

/// The alternative closed form β_q + ½(1−Γ)·[four sine products]. Kept as a
/// separate path: it agrees with beta_mixture only at Γ=1 and exceeds 2 at
/// Γ=½ on the θ-family (2.1213 at θ=5π/4).
double beta_printed(const SettingsQuad &quad, double gamma);

/// One (θ, Γ) row of the θ-family sweep. `theta` is the raw sweep parameter
/// (not reduced mod 2π) so that grid endpoints are reported verbatim.
struct BetaPoint {
    double theta = 0;
    double gamma = 0;
    double beta_q = 0;
    double beta_mixture = 0;
    double beta_printed = 0;
    double beta_uniform = 0;
};

/// Inclusive uniform grid of `steps` points; the last point is exactly
/// theta_max. Throws ConfigError on steps < 2, a reversed or non-finite
/// range, an empty gamma list, or any Γ outside [0,1].
std::vector<double> theta_grid(double theta_min, double theta_max, std::size_t steps);

/// Rows ordered θ outer, Γ inner, on the family a=2θ, a′=0, b=θ, b′=3θ.
std::vector<BetaPoint> sweep_fig1(double theta_min, double theta_max, std::size_t steps,
                                  std::span<const double> gammas);

}  // namespace bellsim

#endif
