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

#ifndef BELLSIM_RNG_H
#define BELLSIM_RNG_H

#include <cstdint>

namespace bellsim {

/// (seed, stream_id) names one reproducible uniform sequence.
struct RngStreamSpec {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;
};

/// Counter-based SplitMix64 stream. The k-th output depends only on
/// (seed, stream_id, k), so any chunk of a run can start at its own offset
/// without generating the prefix.
class UniformStream {
   public:
    explicit UniformStream(RngStreamSpec spec, std::uint64_t position = 0)
        : state_(key(spec) + position * kGolden) {
    }

    std::uint64_t next_u64() {
        state_ += kGolden;
        return mix(state_);
    }

    /// Uniform on [0, 1) with 53 random bits.
    double next_uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

   private:
    static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

    static std::uint64_t key(RngStreamSpec spec) {
        return mix(spec.seed ^ mix(spec.stream_id + 0x632be59bd9b4e019ULL));
    }

    std::uint64_t state_;
};

}  // namespace bellsim

#endif
