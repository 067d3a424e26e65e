#pragma once

#include <cstdint>
#include <random>

namespace qlogic {

using Rng = std::mt19937_64;

/// Generator for one trial of a seeded search. The stream depends only on
/// (seed, trial), so trials can be evaluated in any order.
inline Rng trial_stream(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return Rng(seq);
}

} // namespace qlogic
