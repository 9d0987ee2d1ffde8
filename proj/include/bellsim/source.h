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

#ifndef BELLSIM_SOURCE_H
#define BELLSIM_SOURCE_H

#include <array>
#include <variant>

#include "bellsim/angle.h"
#include "bellsim/settings.h"

namespace bellsim {

/// ξ-weights indexed by XiSlot (a, a′, b, b′).
using XiWeights = std::array<double, 4>;

/// Γ/2 on each chosen setting, (1−Γ)/2 on each unchosen one.
struct PairedSymmetric {
    friend bool operator==(const PairedSymmetric &, const PairedSymmetric &) = default;
};

/// Explicit ξ-conditional for each settings pair. Rows are indexed by
/// `SettingsPair::index()`, columns by XiSlot. Each row must be non-negative
/// and sum to 1 within 1e-12; `create` enforces this.
class CustomTable {
   public:
    static CustomTable create(const std::array<XiWeights, kNumPairs> &rows);

    const XiWeights &row(std::size_t pair_index) const {
        return rows_[pair_index];
    }

    friend bool operator==(const CustomTable &, const CustomTable &) = default;

   private:
    explicit CustomTable(const std::array<XiWeights, kNumPairs> &rows) : rows_(rows) {
    }
    std::array<XiWeights, kNumPairs> rows_{};
};

using XiScheme = std::variant<PairedSymmetric, CustomTable>;

/// ρ_λ = ½[δ(λ − ξ) + δ(λ − ξ − π)].
struct DeltaPair {
    Angle xi;
};

struct UniformOnCircle {};

/// ξ is redrawn per event from the four quad entries, correlated with the
/// chosen settings through `gamma`.
struct GammaMixture {
    double gamma = 1.0;
    XiScheme scheme = PairedSymmetric{};
};

using SourcePolicy = std::variant<DeltaPair, UniformOnCircle, GammaMixture>;

/// Throws ConfigError if a GammaMixture has Γ outside [0,1].
void validate(const SourcePolicy &source);

/// Checks that Γ ∈ [0,1] (and finite); throws ConfigError otherwise.
void validate_gamma(double gamma);

/// The ξ-conditional over slots (a, a′, b, b′) for the given pair.
XiWeights xi_weights(const XiScheme &scheme, double gamma, const SettingsPair &pair);

/// Draws ξ by inverse CDF on u. PairedSymmetric lays out its slabs as
/// (chosen A, chosen B, unchosen A, unchosen B); CustomTable uses slot order.
XiSlot sample_xi(const XiScheme &scheme, double gamma, const SettingsPair &pair, double u);

/// Delta pair: ξ if u < ½, else ξ + π.
inline Angle sample_lambda(const DeltaPair &source, double u) {
    return u < 0.5 ? source.xi : source.xi.opposite();
}

/// Uniform: 2π·u.
inline Angle sample_lambda(const UniformOnCircle &, double u) {
    return Angle(kTwoPi * u);
}

}  // namespace bellsim

#endif
