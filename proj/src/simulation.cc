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

#include "bellsim/simulation.h"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

#include "bellsim/errors.h"
#include "bellsim/event.h"

namespace bellsim {

void simulate_range(const SettingsQuad &quad, const SourcePolicy &source, RngStreamSpec rng, std::uint64_t first,
                    std::uint64_t count, Tally &tally) {
    UniformStream stream(rng, first * kUniformsPerEvent);
    for (std::uint64_t i = 0; i < count; ++i) {
        EventUniforms u;
        u.settings = stream.next_uniform();
        u.xi = stream.next_uniform();
        u.lambda = stream.next_uniform();
        u.omega_a = stream.next_uniform();
        u.omega_b = stream.next_uniform();
        tally.record(generate_event(quad, source, u));
    }
}

Tally run_simulation(const SettingsQuad &quad, const SourcePolicy &source, std::uint64_t n_events,
                     RngStreamSpec rng, std::size_t chunk_size, unsigned threads) {
    if (chunk_size == 0) {
        throw ConfigError("chunk_size must be at least 1");
    }
    validate(source);

    const std::uint64_t n_chunks = (n_events + chunk_size - 1) / chunk_size;
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(n_chunks, 1)));

    // Each worker folds its chunks into a private tally; integer addition makes
    // the merged result independent of which worker took which chunk.
    std::atomic<std::uint64_t> next_chunk{0};
    auto work = [&](Tally &local) {
        for (std::uint64_t c = next_chunk++; c < n_chunks; c = next_chunk++) {
            std::uint64_t first = c * chunk_size;
            std::uint64_t count = std::min<std::uint64_t>(chunk_size, n_events - first);
            simulate_range(quad, source, rng, first, count, local);
        }
    };

    std::vector<Tally> partial(threads);
    if (threads == 1) {
        work(partial[0]);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(work, std::ref(partial[t]));
        }
    }

    Tally total;
    for (const Tally &t : partial) {
        total += t;
    }
    return total;
}

}  // namespace bellsim
