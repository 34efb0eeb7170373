#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace docsim {

/// The single deterministic random stream owned by one simulation run.
///
/// Backed by std::mt19937_64. Real and bounded-integer draws are derived here
/// rather than through <random> distributions, whose algorithms differ between
/// standard library implementations, so a seed reproduces the same values on
/// every platform.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1) with 53 bits of precision.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n). Precondition: n > 0.
    std::size_t index(std::size_t n);

    /// +1 or -1 with equal probability.
    int sign() { return (engine_() >> 63) != 0 ? 1 : -1; }

    bool bernoulli(double p) { return uniform() < p; }

    /// k distinct values from [0, n) in draw order (partial Fisher-Yates).
    /// Consumes exactly min(k, n) integer draws.
    std::vector<std::size_t> sample(std::size_t n, std::size_t k);

private:
    std::mt19937_64 engine_;
};

/// Seed for repeat `repeat_index` of a batch: one splitmix64 step over
/// `base_seed ^ repeat_index`. The mix is a bijection on 64-bit values, so
/// distinct repeat indices under one base seed never collide.
std::uint64_t derive_run_seed(std::uint64_t base_seed, std::uint64_t repeat_index);

}  // namespace docsim
