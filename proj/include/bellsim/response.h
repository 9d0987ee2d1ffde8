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

#ifndef BELLSIM_RESPONSE_H
#define BELLSIM_RESPONSE_H

#include <cstdint>

#include "bellsim/angle.h"

namespace bellsim {

enum class Outcome : std::int8_t { kMinus = -1, kPlus = 1 };

inline int value(Outcome o) {
    return static_cast<int>(o);
}

// The kMinus probability is formed as 1 − p₊ so the pair sums to exactly 1.0
// in floating point.

/// P(A = mu | setting, lambda) = ½[1 + mu·cos(setting − lambda)].
inline double response_prob_a(Angle setting, Angle lambda, Outcome mu) {
    double p_plus = 0.5 * (1.0 + cos(setting - lambda));
    return mu == Outcome::kPlus ? p_plus : 1.0 - p_plus;
}

/// P(B = mu | setting, lambda) = ½[1 − mu·cos(setting − lambda)].
inline double response_prob_b(Angle setting, Angle lambda, Outcome mu) {
    double p_plus = 0.5 * (1.0 - cos(setting - lambda));
    return mu == Outcome::kPlus ? p_plus : 1.0 - p_plus;
}

/// Realizes a binary response from one auxiliary uniform omega ∈ [0,1).
/// omega == p_plus goes to kMinus.
inline Outcome sample_outcome(double p_plus, double omega) {
    return omega < p_plus ? Outcome::kPlus : Outcome::kMinus;
}

}  // namespace bellsim

#endif
