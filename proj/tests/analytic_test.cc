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

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "gtest/gtest.h"

#include "bellsim/analytic.h"
#include "bellsim/errors.h"
#include "oracles.h"

using namespace bellsim;
using namespace bellsim::testing;

constexpr double kPiD = std::numbers::pi;

TEST(corr_fixed_xi, examples) {
    Angle a(0.4), b(2.9);
    EXPECT_NEAR(corr_fixed_xi(a, b, b), -std::cos(0.4 - 2.9), 1e-15);
    EXPECT_NEAR(corr_fixed_xi(a, a, a), -1.0, 1e-15);
    EXPECT_NEAR(corr_fixed_xi(Angle(0.3), Angle(1.1), Angle(2.0)), 0.0800910220108909064, 1e-15);
    EXPECT_NEAR(oracle_corr_delta(0.3, 1.1, 2.0), 0.0800910220108909064, 1e-15);
}

TEST(corr_fixed_xi, three_paths_agree) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> any(-10, 10);
    for (int i = 0; i < 10000; ++i) {
        double a = any(rng), b = any(rng), xi = any(rng);
        double product = corr_fixed_xi(Angle(a), Angle(b), Angle(xi));
        ASSERT_NEAR(product, corr_fixed_xi_sine_form(Angle(a), Angle(b), Angle(xi)), 1e-12);
        ASSERT_NEAR(product, corr_via_ch_expansion(Angle(a), Angle(b), Angle(xi)), 1e-12);
        ASSERT_NEAR(product, oracle_corr_delta(a, b, xi), 1e-12);
        ASSERT_LE(std::abs(product), 1.0);
    }
}

TEST(corr_via_ch_expansion, examples) {
    Angle a(0.4), b(2.9);
    EXPECT_NEAR(corr_via_ch_expansion(a, b, b), -std::cos(0.4 - 2.9), 1e-15);
    EXPECT_NEAR(corr_via_ch_expansion(a, a, a), -1.0, 1e-15);
    EXPECT_NEAR(corr_via_ch_expansion(Angle(0.3), Angle(1.1), Angle(2.0)), 0.0800910220108909064, 1e-15);
}

TEST(corr_uniform, examples_and_quadrature) {
    Angle a(1.3);
    EXPECT_NEAR(corr_uniform(a, a), -0.5, 1e-15);
    EXPECT_NEAR(corr_uniform(a, a + Angle(kPiD / 2)), 0.0, 1e-15);
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> any(-10, 10);
    for (int i = 0; i < 1000; ++i) {
        double x = any(rng), y = any(rng);
        ASSERT_NEAR(corr_uniform(Angle(x), Angle(y)), oracle_corr_uniform(x, y), 1e-12);
    }
}

TEST(marginals, vanish_for_all_sources) {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> any(-10, 10);
    for (int i = 0; i < 1000; ++i) {
        double a = any(rng), xi = any(rng);
        for (const SourcePolicy &src :
             {SourcePolicy{DeltaPair{Angle(xi)}}, SourcePolicy{UniformOnCircle{}}, SourcePolicy{GammaMixture{0.8}}}) {
            ASSERT_EQ(marginal_a(Angle(a), src), 0.0);
            ASSERT_EQ(marginal_b(Angle(a), src), 0.0);
        }
        // Independent check: ½[cos(a−ξ) + cos(a−ξ−π)] is zero up to rounding.
        ASSERT_NEAR(0.5 * (std::cos(a - xi) + std::cos(a - xi - kPiD)), 0.0, 1e-15);
    }
}

TEST(corr_gamma_mixture, endpoints) {
    SettingsQuad q = tsirelson_quad();
    SettingsPair ab = SettingsPair::select(q, 0, 0);
    double singlet = -cos(q.a - q.b);
    EXPECT_NEAR(corr_gamma_mixture(q, ab, 1.0, PairedSymmetric{}), singlet, 1e-15);

    double plain = 0;
    for (XiSlot s : kAllXiSlots) {
        plain += 0.25 * corr_fixed_xi(q.a, q.b, angle_of(q, s));
    }
    EXPECT_NEAR(corr_gamma_mixture(q, ab, 0.5, PairedSymmetric{}), plain, 1e-15);
}

TEST(corr_gamma_mixture, tsirelson_quad_gamma_08) {
    SettingsQuad q = tsirelson_quad();
    SettingsPair ab = SettingsPair::select(q, 0, 0);
    EXPECT_NEAR(corr_gamma_mixture(q, ab, 0.8, PairedSymmetric{}), 0.565685424949238020, 1e-12);
    EXPECT_NEAR(oracle_corr_mixture(q, 0, 0, 0.8), 0.565685424949238020, 1e-12);
}

TEST(corr_gamma_mixture, matches_displayed_closed_form_for_ab) {
    // −cos(a−b) + ½(1−Γ)[sin(a−a′)sin(b−a′) + sin(a−b′)sin(b−b′)] for pair (a,b).
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> g(0, 1);
    for (int i = 0; i < 2000; ++i) {
        SettingsQuad q = random_quad(rng);
        double gamma = g(rng);
        auto [a, ap, b, bp] = raw(q);
        double closed = -std::cos(a - b) +
                        0.5 * (1 - gamma) * (std::sin(a - ap) * std::sin(b - ap) + std::sin(a - bp) * std::sin(b - bp));
        ASSERT_NEAR(corr_gamma_mixture(q, SettingsPair::select(q, 0, 0), gamma, PairedSymmetric{}), closed, 1e-12);
    }
}

TEST(corr_gamma_mixture, custom_table_reduces_to_weighted_sum) {
    std::array<XiWeights, kNumPairs> rows{};
    rows.fill({0.1, 0.2, 0.3, 0.4});
    CustomTable table = CustomTable::create(rows);
    SettingsQuad q{Angle(0.2), Angle(1.4), Angle(2.6), Angle(3.8)};
    SettingsPair apb = SettingsPair::select(q, 1, 0);
    double expected = 0.1 * oracle_corr_delta(1.4, 2.6, 0.2) + 0.2 * oracle_corr_delta(1.4, 2.6, 1.4) +
                      0.3 * oracle_corr_delta(1.4, 2.6, 2.6) + 0.4 * oracle_corr_delta(1.4, 2.6, 3.8);
    EXPECT_NEAR(corr_gamma_mixture(q, apb, 0.0, table), expected, 1e-12);
}

TEST(chsh, sign_convention) {
    SettingsQuad q = tsirelson_quad();
    auto singlet = [](Angle x, Angle y) { return -cos(x - y); };
    EXPECT_NEAR(chsh(singlet, q), kTwoRootTwo, 1e-12);
    EXPECT_EQ(chsh([](Angle, Angle) { return 0.0; }, q), 0.0);
    std::array<double, 4> e{1, 2, 3, 4};
    EXPECT_EQ(chsh(e), 2.0);
}

TEST(beta_q, examples) {
    EXPECT_NEAR(beta_q(tsirelson_quad()), kTwoRootTwo, 1e-12);
    SettingsQuad degenerate{Angle(0.3), Angle(0.3), Angle(1.0), Angle(1.0)};
    EXPECT_NEAR(beta_q(degenerate), -2 * std::cos(0.3 - 1.0), 1e-15);
    EXPECT_NEAR(beta_q(SettingsQuad::from_theta(2 * kPiD)), -2.0, 1e-12);
}

TEST(beta_q, theta_family_closed_form) {
    for (double theta = kPiD; theta <= 2 * kPiD; theta += 0.01) {
        ASSERT_NEAR(beta_q(SettingsQuad::from_theta(theta)), -3 * std::cos(theta) + std::cos(3 * theta), 1e-12);
    }
}

TEST(beta_mixture, tsirelson_quad_values) {
    SettingsQuad q = tsirelson_quad();
    EXPECT_NEAR(beta_mixture(q, 1.0), kTwoRootTwo, 1e-12);
    EXPECT_NEAR(beta_mixture(q, 0.8), kBetaMixture08, 1e-12);
    EXPECT_NEAR(beta_mixture(q, 0.5), kBetaMixture05, 1e-12);
    EXPECT_GT(beta_mixture(q, 0.8), 2.0);
}

TEST(beta_mixture, agrees_with_brute_force) {
    std::mt19937_64 rng(15);
    std::uniform_real_distribution<double> g(0, 1);
    for (int i = 0; i < 10000; ++i) {
        SettingsQuad q = random_quad(rng);
        double gamma = g(rng);
        double beta = beta_mixture(q, gamma);
        ASSERT_NEAR(beta, oracle_beta_mixture(q, gamma), 1e-12);
        ASSERT_NEAR(beta_mixture(q, 1.0), beta_q(q), 1e-12);
        ASSERT_LE(std::abs(beta_mixture(q, 0.5)), 2.0 + 1e-9);
        ASSERT_LE(std::abs(beta), 4.0);
    }
}

TEST(beta_mixture, rejects_bad_gamma) {
    EXPECT_THROW(beta_mixture(tsirelson_quad(), 1.01), ConfigError);
    EXPECT_THROW(beta_printed(tsirelson_quad(), -0.01), ConfigError);
}

TEST(beta_printed, values_and_discrepancy) {
    SettingsQuad q = tsirelson_quad();
    EXPECT_NEAR(beta_printed(q, 1.0), kTwoRootTwo, 1e-12);
    EXPECT_NEAR(beta_printed(q, 0.8), kBetaPrinted08, 1e-12);
    EXPECT_NEAR(beta_printed(q, 0.5), kBetaPrinted05, 1e-12);
    EXPECT_GT(beta_printed(q, 0.5), 2.0);

    // On the θ-family the printed correction is half the first-principles one.
    for (double theta = kPiD; theta <= 2 * kPiD; theta += 0.05) {
        SettingsQuad t = SettingsQuad::from_theta(theta);
        double bq = beta_q(t);
        ASSERT_NEAR(beta_printed(t, 0.5) - bq, 0.5 * (beta_mixture(t, 0.5) - bq), 1e-12);
        // bracket = 3 sinθ sin2θ + sin2θ sin3θ on the family.
        double bracket = 3 * std::sin(theta) * std::sin(2 * theta) + std::sin(2 * theta) * std::sin(3 * theta);
        ASSERT_NEAR(beta_printed(t, 0.8), bq + 0.1 * bracket, 1e-12);
    }

    std::mt19937_64 rng(16);
    for (int i = 0; i < 1000; ++i) {
        SettingsQuad r = random_quad(rng);
        ASSERT_NEAR(beta_printed(r, 1.0), beta_q(r), 1e-12);
    }
}

TEST(uniform_baseline, half_of_quantum) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 10000; ++i) {
        SettingsQuad q = random_quad(rng);
        ASSERT_NEAR(chsh(corr_uniform, q), 0.5 * beta_q(q), 1e-12);
    }
}

TEST(sweep_fig1, grid_and_rows) {
    std::vector<double> gammas{1.0, 0.5};
    auto rows = sweep_fig1(kPiD, 2 * kPiD, 5, gammas);
    ASSERT_EQ(rows.size(), 10u);
    EXPECT_EQ(rows.front().theta, kPiD);
    EXPECT_EQ(rows.back().theta, 2 * kPiD);
    EXPECT_EQ(rows[0].gamma, 1.0);
    EXPECT_EQ(rows[1].gamma, 0.5);
    EXPECT_EQ(rows[2].theta, rows[3].theta);

    // θ = 5π/4 is grid point 1.
    EXPECT_NEAR(rows[2].beta_q, kTwoRootTwo, 1e-12);
    EXPECT_NEAR(rows[2].beta_mixture, kTwoRootTwo, 1e-12);
    EXPECT_NEAR(rows[2].beta_uniform, kTwoRootTwo / 2, 1e-12);
    EXPECT_NEAR(rows.back().beta_q, -2.0, 1e-12);
    EXPECT_NEAR(rows.back().beta_uniform, -1.0, 1e-12);

    for (const BetaPoint &r : rows) {
        EXPECT_NEAR(r.beta_uniform, 0.5 * r.beta_q, 1e-12);
        if (r.gamma == 1.0) {
            EXPECT_NEAR(r.beta_mixture, r.beta_q, 1e-12);
        }
    }
}

TEST(sweep_fig1, errors) {
    std::vector<double> ok{1.0};
    std::vector<double> none;
    std::vector<double> bad{1.5};
    EXPECT_THROW(sweep_fig1(kPiD, 2 * kPiD, 1, ok), ConfigError);
    EXPECT_THROW(sweep_fig1(kPiD, 2 * kPiD, 10, none), ConfigError);
    EXPECT_THROW(sweep_fig1(kPiD, 2 * kPiD, 10, bad), ConfigError);
    EXPECT_THROW(sweep_fig1(2 * kPiD, kPiD, 10, ok), ConfigError);
    EXPECT_THROW(sweep_fig1(std::nan(""), kPiD, 10, ok), ConfigError);
}
