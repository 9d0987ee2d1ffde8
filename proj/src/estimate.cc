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

#include "bellsim/estimate.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "bellsim/errors.h"

namespace bellsim {

namespace {

double mean_pm1(std::uint64_t n_plus, std::uint64_t n) {
    return (static_cast<double>(n_plus) - static_cast<double>(n - n_plus)) / static_cast<double>(n);
}

double plugin_se(double mean, std::uint64_t n) {
    return std::sqrt(std::max(0.0, 1.0 - mean * mean) / static_cast<double>(n));
}

void require_all_pairs(const Tally &tally) {
    for (std::size_t p = 0; p < kNumPairs; ++p) {
        if (tally.pair_counts(p).total() == 0) {
            throw InsufficientDataError("no events for settings pair " + std::string(pair_name(p)));
        }
    }
}

// Sums of A = +1 (or B = +1) and event counts for a pair.
struct Singles {
    std::uint64_t n = 0;
    std::uint64_t a_plus = 0;
    std::uint64_t b_plus = 0;
};

Singles singles(const Tally &tally, std::size_t pair_index) {
    OutcomeCounts c = tally.pair_counts(pair_index);
    return {c.total(), c.pp + c.pm, c.pp + c.mp};
}

// z for a ±1 mean against 0, using the null variance of 1.
double z_against_zero(std::uint64_t n_plus, std::uint64_t n) {
    return mean_pm1(n_plus, n) * std::sqrt(static_cast<double>(n));
}

// Pooled two-sample z for equality of two ±1 means.
double z_two_sample(std::uint64_t plus1, std::uint64_t n1, std::uint64_t plus2, std::uint64_t n2) {
    double m1 = mean_pm1(plus1, n1);
    double m2 = mean_pm1(plus2, n2);
    double pooled = mean_pm1(plus1 + plus2, n1 + n2);
    double var = 1.0 - pooled * pooled;
    if (var <= 0) {
        return 0.0;
    }
    return (m1 - m2) / std::sqrt(var * (1.0 / static_cast<double>(n1) + 1.0 / static_cast<double>(n2)));
}

void finish(SideAudit &side, double threshold) {
    side.max_abs_z = 0;
    for (const ZScore &z : side.entries) {
        side.max_abs_z = std::max(side.max_abs_z, std::abs(z.z));
    }
    side.pass = side.max_abs_z < threshold;
}

constexpr std::string_view kASetting[2] = {"a", "a'"};
constexpr std::string_view kBSetting[2] = {"b", "b'"};

// (events with ξ in the chosen pair, mixture events) for one settings pair.
std::pair<std::uint64_t, std::uint64_t> gamma_counts(const Tally &tally, std::size_t pair_index) {
    SettingsPair pair = SettingsPair::from_index(SettingsQuad{}, pair_index);
    std::uint64_t n = 0;
    for (XiSlot slot : kAllXiSlots) {
        n += tally.xi_count(pair_index, slot);
    }
    std::uint64_t hits = tally.xi_count(pair_index, pair.chosen_a_slot()) + tally.xi_count(pair_index, pair.chosen_b_slot());
    return {hits, n};
}

std::optional<GammaEstimate> binomial(std::uint64_t hits, std::uint64_t n) {
    if (n == 0) {
        return std::nullopt;
    }
    double g = static_cast<double>(hits) / static_cast<double>(n);
    return GammaEstimate{n, g, std::sqrt(g * (1.0 - g) / static_cast<double>(n))};
}

}  // namespace

std::optional<GammaEstimate> estimate_gamma(const Tally &tally, std::size_t pair_index) {
    auto [hits, n] = gamma_counts(tally, pair_index);
    return binomial(hits, n);
}

std::optional<GammaEstimate> estimate_gamma(const Tally &tally) {
    std::uint64_t hits = 0;
    std::uint64_t n = 0;
    for (std::size_t p = 0; p < kNumPairs; ++p) {
        auto [h, m] = gamma_counts(tally, p);
        hits += h;
        n += m;
    }
    return binomial(hits, n);
}

Estimates estimate(const Tally &tally) {
    require_all_pairs(tally);

    Estimates est;
    std::array<double, kNumPairs> corr{};
    double var_sum = 0;
    for (std::size_t p = 0; p < kNumPairs; ++p) {
        OutcomeCounts c = tally.pair_counts(p);
        PairEstimate &pe = est.pairs[p];
        pe.n = c.total();
        double n = static_cast<double>(pe.n);
        pe.corr_hat = (static_cast<double>(c.pp + c.mm) - static_cast<double>(c.pm + c.mp)) / n;
        pe.corr_se = plugin_se(pe.corr_hat, pe.n);
        pe.marg_a_hat = mean_pm1(c.pp + c.pm, pe.n);
        pe.marg_a_se = plugin_se(pe.marg_a_hat, pe.n);
        pe.marg_b_hat = mean_pm1(c.pp + c.mp, pe.n);
        pe.marg_b_se = plugin_se(pe.marg_b_hat, pe.n);
        corr[p] = pe.corr_hat;
        var_sum += pe.corr_se * pe.corr_se;
    }
    est.beta_hat = corr[0] + corr[1] + corr[2] - corr[3];
    est.beta_se = std::sqrt(var_sum);
    if (auto g = estimate_gamma(tally)) {
        est.gamma_hat = g->gamma_hat;
        est.gamma_se = g->gamma_se;
    }
    return est;
}

NoSignalingReport no_signaling_audit(const Tally &tally, const AuditParams &params) {
    require_all_pairs(tally);

    NoSignalingReport report;
    report.z_threshold = params.z_threshold;

    for (std::uint8_t own = 0; own < 2; ++own) {
        // Side A: own setting fixed, remote (B) setting varies.
        Singles with_b = singles(tally, SettingsPair::select({}, own, 0).index());
        Singles with_bp = singles(tally, SettingsPair::select({}, own, 1).index());
        std::string a(kASetting[own]);
        report.side_a.entries.push_back(
            {"<A>(" + a + " | b)", mean_pm1(with_b.a_plus, with_b.n), z_against_zero(with_b.a_plus, with_b.n)});
        report.side_a.entries.push_back({"<A>(" + a + " | b')", mean_pm1(with_bp.a_plus, with_bp.n),
                                         z_against_zero(with_bp.a_plus, with_bp.n)});
        report.side_a.entries.push_back(
            {"<A>(" + a + " | b) - <A>(" + a + " | b')",
             mean_pm1(with_b.a_plus, with_b.n) - mean_pm1(with_bp.a_plus, with_bp.n),
             z_two_sample(with_b.a_plus, with_b.n, with_bp.a_plus, with_bp.n)});

        // Side B: own setting fixed, remote (A) setting varies.
        Singles with_a = singles(tally, SettingsPair::select({}, 0, own).index());
        Singles with_ap = singles(tally, SettingsPair::select({}, 1, own).index());
        std::string b(kBSetting[own]);
        report.side_b.entries.push_back(
            {"<B>(" + b + " | a)", mean_pm1(with_a.b_plus, with_a.n), z_against_zero(with_a.b_plus, with_a.n)});
        report.side_b.entries.push_back({"<B>(" + b + " | a')", mean_pm1(with_ap.b_plus, with_ap.n),
                                         z_against_zero(with_ap.b_plus, with_ap.n)});
        report.side_b.entries.push_back(
            {"<B>(" + b + " | a) - <B>(" + b + " | a')",
             mean_pm1(with_a.b_plus, with_a.n) - mean_pm1(with_ap.b_plus, with_ap.n),
             z_two_sample(with_a.b_plus, with_a.n, with_ap.b_plus, with_ap.n)});
    }

    finish(report.side_a, params.z_threshold);
    finish(report.side_b, params.z_threshold);
    report.pass = report.side_a.pass && report.side_b.pass;
    return report;
}

double chi_square_2x2(const OutcomeCounts &c) {
    double pp = static_cast<double>(c.pp);
    double pm = static_cast<double>(c.pm);
    double mp = static_cast<double>(c.mp);
    double mm = static_cast<double>(c.mm);
    double r1 = pp + pm;
    double r2 = mp + mm;
    double c1 = pp + mp;
    double c2 = pm + mm;
    double denom = r1 * r2 * c1 * c2;
    if (denom == 0) {
        return 0.0;
    }
    double det = pp * mm - pm * mp;
    return (r1 + r2) * det * det / denom;
}

double chi_square_1dof_sf(double statistic) {
    if (statistic <= 0) {
        return 1.0;
    }
    return std::erfc(std::sqrt(0.5 * statistic));
}

FactorabilityReport factorability_audit(const Tally &tally, const AuditParams &params) {
    FactorabilityReport report;
    report.alpha = params.chi2_alpha;

    for (std::size_t p = 0; p < kNumPairs; ++p) {
        report.n_unconditioned += tally.cell_counts(p, XiCell::kNone, LambdaBranch::kContinuous).total();
        for (std::size_t c = 0; c < kNumXiCells; ++c) {
            for (LambdaBranch br : {LambdaBranch::kXi, LambdaBranch::kOpposite}) {
                CellTest cell;
                cell.pair_index = p;
                cell.cell = static_cast<XiCell>(c);
                cell.branch = br;
                cell.counts = tally.cell_counts(p, cell.cell, br);
                std::uint64_t n = cell.counts.total();
                if (n == 0) {
                    continue;
                }
                double nd = static_cast<double>(n);
                double r1 = static_cast<double>(cell.counts.pp + cell.counts.pm);
                double c1 = static_cast<double>(cell.counts.pp + cell.counts.mp);
                double min_expected = std::min({r1 * c1, r1 * (nd - c1), (nd - r1) * c1, (nd - r1) * (nd - c1)}) / nd;
                if (n < params.min_cell_count) {
                    cell.skip_reason = "fewer than " + std::to_string(params.min_cell_count) + " events";
                } else if (min_expected < params.min_expected) {
                    cell.skip_reason = "minimum expected count below threshold";
                } else {
                    cell.tested = true;
                    cell.chi2 = chi_square_2x2(cell.counts);
                    cell.p_value = chi_square_1dof_sf(cell.chi2);
                }
                report.cells.push_back(std::move(cell));
            }
        }
    }

    for (const CellTest &cell : report.cells) {
        (cell.tested ? report.n_tested : report.n_skipped) += 1;
    }
    report.bonferroni_level = report.n_tested > 0 ? params.chi2_alpha / static_cast<double>(report.n_tested) : 0.0;
    for (CellTest &cell : report.cells) {
        if (cell.tested && cell.p_value < report.bonferroni_level) {
            cell.rejected = true;
            report.pass = false;
        }
    }
    return report;
}

SubensembleReport subensemble_report(const Tally &tally) {
    SubensembleReport report;
    std::array<std::uint64_t, 4> pooled{};
    for (std::size_t p = 0; p < kNumPairs; ++p) {
        PairXiDistribution &dist = report.pairs[p];
        std::array<std::uint64_t, 4> counts{};
        for (XiSlot slot : kAllXiSlots) {
            auto s = static_cast<std::size_t>(slot);
            counts[s] = tally.xi_count(p, slot);
            dist.n += counts[s];
            pooled[s] += counts[s];
        }
        if (dist.n > 0) {
            for (std::size_t s = 0; s < 4; ++s) {
                dist.freq[s] = static_cast<double>(counts[s]) / static_cast<double>(dist.n);
            }
        }
        dist.gamma = estimate_gamma(tally, p);
        report.n_mixture += dist.n;
    }
    if (report.n_mixture > 0) {
        for (std::size_t s = 0; s < 4; ++s) {
            report.marginal[s] = static_cast<double>(pooled[s]) / static_cast<double>(report.n_mixture);
        }
    }
    report.gamma = estimate_gamma(tally);
    return report;
}

}  // namespace bellsim
