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

#include "bellsim/tally.h"

namespace bellsim {

namespace {

XiCell cell_of(const EventRecord &event) {
    if (event.xi_slot) {
        return cell_of(*event.xi_slot);
    }
    return event.xi ? XiCell::kFixed : XiCell::kNone;
}

}  // namespace

std::string_view cell_name(XiCell cell) {
    switch (cell) {
        case XiCell::kFixed:
            return "fixed";
        case XiCell::kNone:
            return "none";
        default:
            return slot_name(static_cast<XiSlot>(cell));
    }
}

void Tally::record(const EventRecord &event) {
    ++counts_[offset(event.pair.index(), cell_of(event), event.branch, event.outcome_a, event.outcome_b)];
}

void Tally::add(std::size_t pair_index, XiCell cell, LambdaBranch branch, Outcome a, Outcome b, std::uint64_t n) {
    counts_[offset(pair_index, cell, branch, a, b)] += n;
}

OutcomeCounts Tally::cell_counts(std::size_t pair_index, XiCell cell, LambdaBranch branch) const {
    return {
        count(pair_index, cell, branch, Outcome::kPlus, Outcome::kPlus),
        count(pair_index, cell, branch, Outcome::kPlus, Outcome::kMinus),
        count(pair_index, cell, branch, Outcome::kMinus, Outcome::kPlus),
        count(pair_index, cell, branch, Outcome::kMinus, Outcome::kMinus),
    };
}

OutcomeCounts Tally::pair_counts(std::size_t pair_index) const {
    OutcomeCounts sum;
    for (std::size_t c = 0; c < kNumXiCells; ++c) {
        for (std::size_t br = 0; br < kNumBranches; ++br) {
            OutcomeCounts cell = cell_counts(pair_index, static_cast<XiCell>(c), static_cast<LambdaBranch>(br));
            sum.pp += cell.pp;
            sum.pm += cell.pm;
            sum.mp += cell.mp;
            sum.mm += cell.mm;
        }
    }
    return sum;
}

std::uint64_t Tally::xi_count(std::size_t pair_index, XiSlot slot) const {
    std::uint64_t n = 0;
    for (std::size_t br = 0; br < kNumBranches; ++br) {
        n += cell_counts(pair_index, cell_of(slot), static_cast<LambdaBranch>(br)).total();
    }
    return n;
}

std::uint64_t Tally::total() const {
    std::uint64_t n = 0;
    for (std::uint64_t c : counts_) {
        n += c;
    }
    return n;
}

Tally &Tally::operator+=(const Tally &other) {
    for (std::size_t i = 0; i < kSize; ++i) {
        counts_[i] += other.counts_[i];
    }
    return *this;
}

}  // namespace bellsim
