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

#ifndef BELLSIM_SIMULATION_H
#define BELLSIM_SIMULATION_H

#include <cstddef>
#include <cstdint>

#include "bellsim/rng.h"
#include "bellsim/settings.h"
#include "bellsim/source.h"
#include "bellsim/tally.h"

namespace bellsim {

/// Uniforms consumed per event; event i reads stream positions
/// [kUniformsPerEvent·i, kUniformsPerEvent·(i+1)).
inline constexpr std::uint64_t kUniformsPerEvent = 5;

inline constexpr std::size_t kDefaultChunkSize = 65536;

/// Simulates `n_events` events and tallies them.
///
/// Events are split into chunks of `chunk_size`; chunk c seeks its sub-stream
/// to the offset of its first event, so the resulting tally is bit-identical
/// for any chunk size and any `threads` (0 = hardware concurrency). Throws
/// ConfigError for chunk_size == 0 or an invalid source.
Tally run_simulation(const SettingsQuad &quad, const SourcePolicy &source, std::uint64_t n_events,
                     RngStreamSpec rng, std::size_t chunk_size = kDefaultChunkSize, unsigned threads = 0);

/// Simulates events [first, first + count) of the stream into `tally`.
void simulate_range(const SettingsQuad &quad, const SourcePolicy &source, RngStreamSpec rng, std::uint64_t first,
                    std::uint64_t count, Tally &tally);

}  // namespace bellsim

#endif
