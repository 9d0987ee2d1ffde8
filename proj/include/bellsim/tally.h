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

#ifndef BELLSIM_TALLY_H
#define BELLSIM_TALLY_H

#include <array>
#include <cstdint>
#include <string_view>

#include "bellsim/event.h"
#include "bellsim/settings.h"

namespace bellsim {

/// Where an event's ξ came from: a quad slot (mixture sources), a fixed
/// delta-pair ξ, or none (uniform source).
enum class XiCell : std::uint8_t { kA = 0, kAPrime = 1, kB = 2, kBPrime = 3, kFixed = 4, kNone = 5 };

inline constexpr std::size_t kNumXiCells = 6;
inline constexpr std::size_t kNumBranches = 3;

inline XiCell cell_of(XiSlot slot) {
    return static_cast<XiCell>(slot);
}

/// "a", "a'", "b", "b'", "fixed" or "none".
std::string_view cell_name(XiCell cell);

/// n₊₊, n₊₋, n₋₊, n₋₋ for one settings pair (first sign is A).
struct OutcomeCounts {
    std::uint64_t pp = 0;
    std::uint64_t pm = 0;
    std::uint64_t mp = 0;
    std::uint64_t mm = 0;

    std::uint64_t total() const {
        return pp + pm + mp + mm;
    }
};

/// Event counts keyed by (pair, ξ cell, λ branch, A, B). Every coarser
/// statistic is a sum over this grid. Merging is element-wise addition.
class Tally {
   public:
    void record(const EventRecord &event);

    /// Adds `n` events to one cell directly; used for hand-built fixtures.
    void add(std::size_t pair_index, XiCell cell, LambdaBranch branch, Outcome a, Outcome b, std::uint64_t n);

    std::uint64_t count(std::size_t pair_index, XiCell cell, LambdaBranch branch, Outcome a, Outcome b) const {
        return counts_[offset(pair_index, cell, branch, a, b)];
    }

    OutcomeCounts cell_counts(std::size_t pair_index, XiCell cell, LambdaBranch branch) const;
    OutcomeCounts pair_counts(std::size_t pair_index) const;

    /// Events of `pair_index` whose ξ was drawn from `slot`.
    std::uint64_t xi_count(std::size_t pair_index, XiSlot slot) const;

    std::uint64_t total() const;

    Tally &operator+=(const Tally &other);
    friend Tally operator+(Tally lhs, const Tally &rhs) {
        lhs += rhs;
        return lhs;
    }
    friend bool operator==(const Tally &, const Tally &) = default;

   private:
    static constexpr std::size_t kSize = kNumPairs * kNumXiCells * kNumBranches * 4;

    static std::size_t offset(std::size_t pair_index, XiCell cell, LambdaBranch branch, Outcome a, Outcome b) {
        std::size_t ab = (a == Outcome::kPlus ? 0 : 2) + (b == Outcome::kPlus ? 0 : 1);
        return ((pair_index * kNumXiCells + static_cast<std::size_t>(cell)) * kNumBranches +
                static_cast<std::size_t>(branch)) *
                   4 +
               ab;
    }

    std::array<std::uint64_t, kSize> counts_{};
};

}  // namespace bellsim

#endif
