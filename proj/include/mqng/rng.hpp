// Copyright 2026 The mqng Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstdint>
#include <random>

namespace mqng {

/// Distinct seed streams derived from one user-facing seed. Keeps instance
/// coefficients, generated graphs, and initial angles decorrelated even when
/// they share the same integer seed.
enum class SeedStream : std::uint32_t {
    kInstance = 0x49u,
    kGraph = 0x47u,
    kInitialAngles = 0x41u,
};

inline std::mt19937_64 seeded_engine(std::uint64_t seed, SeedStream stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream)};
    return std::mt19937_64(seq);
}

/// Uniform double in [0, 1) from the top 53 bits of the engine output.
/// Identical on every platform, unlike std::uniform_real_distribution.
inline double uniform_unit(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [-1, 1).
inline double uniform_symmetric(std::mt19937_64 &rng) {
    return 2.0 * uniform_unit(rng) - 1.0;
}

} // namespace mqng
