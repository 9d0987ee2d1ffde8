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

#ifndef BELLSIM_ANGLE_H
#define BELLSIM_ANGLE_H

#include <cmath>
#include <numbers>

namespace bellsim {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// An orientation in radians, always stored in [0, 2π).
///
/// Every constructor and arithmetic operation re-normalizes, so two angles
/// that denote the same orientation after normalization compare equal
/// exactly. Comparisons never look at the raw input.
class Angle {
   public:
    constexpr Angle() = default;
    explicit Angle(double radians) : radians_(normalize(radians)) {
    }

    static Angle from_degrees(double degrees) {
        return Angle(degrees * (kPi / 180.0));
    }

    double radians() const {
        return radians_;
    }

    /// The antipodal orientation, this + π.
    Angle opposite() const {
        return Angle(radians_ + kPi);
    }

    friend Angle operator+(Angle lhs, Angle rhs) {
        return Angle(lhs.radians_ + rhs.radians_);
    }
    friend Angle operator-(Angle lhs, Angle rhs) {
        return Angle(lhs.radians_ - rhs.radians_);
    }
    friend bool operator==(Angle, Angle) = default;

    static double normalize(double radians) {
        double r = std::fmod(radians, kTwoPi);
        if (r < 0) {
            r += kTwoPi;
        }
        // fmod of a tiny negative plus 2π can round up to exactly 2π.
        if (r >= kTwoPi) {
            r = 0.0;
        }
        return r;
    }

   private:
    double radians_ = 0.0;
};

inline double cos(Angle x) {
    return std::cos(x.radians());
}

inline double sin(Angle x) {
    return std::sin(x.radians());
}

}  // namespace bellsim

#endif
