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

#include "bellsim/source.h"

#include <cmath>
#include <string>

#include "bellsim/errors.h"

namespace bellsim {

namespace {

constexpr double kWeightSumTolerance = 1e-12;

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};

}  // namespace

CustomTable CustomTable::create(const std::array<XiWeights, kNumPairs> &rows) {
    for (std::size_t p = 0; p < kNumPairs; ++p) {
        double sum = 0;
        for (double w : rows[p]) {
            if (!std::isfinite(w) || w < 0) {
                throw ConfigError("xi weight table: negative or non-finite weight for pair " +
                                  std::string(pair_name(p)));
            }
            sum += w;
        }
        if (std::abs(sum - 1.0) > kWeightSumTolerance) {
            throw ConfigError("xi weight table: weights for pair " + std::string(pair_name(p)) +
                              " sum to " + std::to_string(sum) + ", expected 1");
        }
    }
    return CustomTable(rows);
}

void validate_gamma(double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw ConfigError("gamma must lie in [0, 1], got " + std::to_string(gamma));
    }
}

void validate(const SourcePolicy &source) {
    if (const auto *mix = std::get_if<GammaMixture>(&source)) {
        validate_gamma(mix->gamma);
    }
}

XiWeights xi_weights(const XiScheme &scheme, double gamma, const SettingsPair &pair) {
    return std::visit(
        Overloaded{
            [&](const PairedSymmetric &) {
                XiWeights w{};
                w[static_cast<std::size_t>(pair.chosen_a_slot())] = 0.5 * gamma;
                w[static_cast<std::size_t>(pair.chosen_b_slot())] = 0.5 * gamma;
                w[static_cast<std::size_t>(pair.unchosen_a_slot())] = 0.5 * (1.0 - gamma);
                w[static_cast<std::size_t>(pair.unchosen_b_slot())] = 0.5 * (1.0 - gamma);
                return w;
            },
            [&](const CustomTable &table) { return table.row(pair.index()); },
        },
        scheme);
}

XiSlot sample_xi(const XiScheme &scheme, double gamma, const SettingsPair &pair, double u) {
    std::array<XiSlot, 4> order = kAllXiSlots;
    if (std::holds_alternative<PairedSymmetric>(scheme)) {
        order = {pair.chosen_a_slot(), pair.chosen_b_slot(), pair.unchosen_a_slot(), pair.unchosen_b_slot()};
    }
    XiWeights w = xi_weights(scheme, gamma, pair);
    double cumulative = 0;
    for (XiSlot slot : order) {
        double weight = w[static_cast<std::size_t>(slot)];
        cumulative += weight;
        if (weight > 0 && u < cumulative) {
            return slot;
        }
    }
    // Only reachable when rounding leaves the total a hair below u; take the
    // last slot with positive mass.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (w[static_cast<std::size_t>(*it)] > 0) {
            return *it;
        }
    }
    return order.back();
}

}  // namespace bellsim
