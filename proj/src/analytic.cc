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

#include "bellsim/analytic.h"

#include <array>
#include <cmath>

#include "bellsim/errors.h"
#include "bellsim/response.h"

namespace bellsim {

double corr_fixed_xi(Angle a, Angle b, Angle xi) {
    return -cos(a - xi) * cos(b - xi);
}

double corr_fixed_xi_sine_form(Angle a, Angle b, Angle xi) {
    return -cos(a - b) + sin(a - xi) * sin(b - xi);
}

double corr_via_ch_expansion(Angle a, Angle b, Angle xi) {
    double total = 0;
    for (Angle lambda : {xi, xi.opposite()}) {
        double a_plus = response_prob_a(a, lambda, Outcome::kPlus);
        double a_minus = response_prob_a(a, lambda, Outcome::kMinus);
        double b_plus = response_prob_b(b, lambda, Outcome::kPlus);
        double b_minus = response_prob_b(b, lambda, Outcome::kMinus);
        total += 0.5 * (a_plus * b_plus + a_minus * b_minus - a_plus * b_minus - a_minus * b_plus);
    }
    return total;
}

double corr_uniform(Angle a, Angle b) {
    return -0.5 * cos(a - b);
}

double marginal_a(Angle, const SourcePolicy &) {
    return 0.0;
}

double marginal_b(Angle, const SourcePolicy &) {
    return 0.0;
}

double corr_gamma_mixture(const SettingsQuad &quad, const SettingsPair &pair, double gamma, const XiScheme &scheme) {
    validate_gamma(gamma);
    XiWeights w = xi_weights(scheme, gamma, pair);
    double total = 0;
    for (XiSlot slot : kAllXiSlots) {
        total += w[static_cast<std::size_t>(slot)] * corr_fixed_xi(pair.phi_a, pair.phi_b, angle_of(quad, slot));
    }
    return total;
}

double chsh(std::span<const double, kNumPairs> by_pair) {
    return by_pair[0] + by_pair[1] + by_pair[2] - by_pair[3];
}

double chsh(const CorrelationFn &e, const SettingsQuad &quad) {
    return e(quad.a, quad.b) + e(quad.a, quad.b_prime) + e(quad.a_prime, quad.b) - e(quad.a_prime, quad.b_prime);
}

double beta_q(const SettingsQuad &quad) {
    const auto &[a, ap, b, bp] = quad;
    return -cos(a - b) - cos(a - bp) - cos(ap - b) + cos(ap - bp);
}

double beta_mixture(const SettingsQuad &quad, double gamma, const XiScheme &scheme) {
    std::array<double, kNumPairs> e{};
    for (std::size_t p = 0; p < kNumPairs; ++p) {
        e[p] = corr_gamma_mixture(quad, SettingsPair::from_index(quad, p), gamma, scheme);
    }
    return chsh(e);
}

double beta_analytic(const SettingsQuad &quad, const SourcePolicy &source) {
    if (const auto *mix = std::get_if<GammaMixture>(&source)) {
        return beta_mixture(quad, mix->gamma, mix->scheme);
    }
    if (const auto *delta = std::get_if<DeltaPair>(&source)) {
        return chsh([xi = delta->xi](Angle a, Angle b) { return corr_fixed_xi(a, b, xi); }, quad);
    }
    return chsh(corr_uniform, quad);
}

double beta_printed(const SettingsQuad &quad, double gamma) {
    validate_gamma(gamma);
    const auto &[a, ap, b, bp] = quad;
    double bracket = sin(a - bp) * sin(b - bp) + sin(a - b) * sin(bp - b) + sin(ap - bp) * sin(b - bp) -
                     sin(ap - b) * sin(bp - b);
    return beta_q(quad) + 0.5 * (1.0 - gamma) * bracket;
}

std::vector<double> theta_grid(double theta_min, double theta_max, std::size_t steps) {
    if (steps < 2) {
        throw ConfigError("sweep needs at least 2 steps");
    }
    if (!std::isfinite(theta_min) || !std::isfinite(theta_max) || theta_max < theta_min) {
        throw ConfigError("invalid theta range: need finite theta_min <= theta_max");
    }
    std::vector<double> grid(steps);
    double step = (theta_max - theta_min) / static_cast<double>(steps - 1);
    for (std::size_t i = 0; i < steps; ++i) {
        grid[i] = theta_min + static_cast<double>(i) * step;
    }
    grid.back() = theta_max;
    return grid;
}

std::vector<BetaPoint> sweep_fig1(double theta_min, double theta_max, std::size_t steps,
                                  std::span<const double> gammas) {
    if (gammas.empty()) {
        throw ConfigError("sweep needs at least one gamma");
    }
    for (double g : gammas) {
        validate_gamma(g);
    }
    std::vector<double> grid = theta_grid(theta_min, theta_max, steps);

    std::vector<BetaPoint> rows;
    rows.reserve(grid.size() * gammas.size());
    for (double theta : grid) {
        SettingsQuad quad = SettingsQuad::from_theta(theta);
        double q = beta_q(quad);
        double uniform = chsh(corr_uniform, quad);
        for (double g : gammas) {
            rows.push_back({theta, g, q, beta_mixture(quad, g), beta_printed(quad, g), uniform});
        }
    }
    return rows;
}

}  // namespace bellsim
