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

#include "bellsim/settings.h"

namespace bellsim {

std::string_view slot_name(XiSlot slot) {
    switch (slot) {
        case XiSlot::kA:
            return "a";
        case XiSlot::kAPrime:
            return "a'";
        case XiSlot::kB:
            return "b";
        case XiSlot::kBPrime:
            return "b'";
    }
    return "?";
}

std::string_view pair_name(std::size_t pair_index) {
    static constexpr std::string_view kNames[kNumPairs] = {"(a,b)", "(a,b')", "(a',b)", "(a',b')"};
    return pair_index < kNumPairs ? kNames[pair_index] : "(?)";
}

}  // namespace bellsim
