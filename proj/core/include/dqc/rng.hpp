#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>

namespace dqc {

/// Engine used by every stochastic routine. All algorithms take a seed and own
/// their engine so runs are reproducible and independent across threads.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng{seed}; }

/// Uniform index in [0, n). n must be positive.
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>{0, n - 1}(rng);
}

/// Uniform integer in the closed range [lo, hi].
inline std::size_t uniform_between(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>{lo, hi}(rng);
}

inline double uniform_unit(Rng& rng) {
    return std::uniform_real_distribution<double>{0.0, 1.0}(rng);
}

inline bool coin_flip(Rng& rng, double p = 0.5) { return uniform_unit(rng) < p; }

/// Distinct ordered pair (a, b) with a < b drawn uniformly from [0, n). n >= 2.
inline std::pair<std::size_t, std::size_t> distinct_pair(Rng& rng, std::size_t n) {
    std::size_t a = uniform_index(rng, n);
    std::size_t b = uniform_index(rng, n - 1);
    if (b >= a) ++b;
    if (a > b) std::swap(a, b);
    return {a, b};
}

}  // namespace dqc
