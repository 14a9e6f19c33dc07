#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace benchgen {

struct SeedSpec {
    std::uint64_t seed = 42;
};

/// Seedable random source owned by a single generation run.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. The standard distributions are implementation-defined, so every
/// draw used by the generators goes through the member functions below,
/// which only consume raw 64-bit engine words. A given seed therefore
/// replays the same graph on every platform and standard library.
class Rng {
public:
    explicit Rng(SeedSpec seed) : engine_(seed.seed) {}
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound). bound must be positive.
    std::size_t index(std::size_t bound);

    bool bernoulli(double p) { return uniform01() < p; }

    /// Number of successes before the first failure when each trial succeeds
    /// with probability p, i.e. P(k) = (1-p) p^k with mean p/(1-p).
    std::size_t geometric(double p);

    /// Index drawn with probability proportional to weights[i]. Weights must be
    /// non-negative with a positive sum.
    std::size_t weighted_index(std::span<const double> weights);

    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            std::swap(values[i - 1], values[index(i)]);
        }
    }

    template <typename T>
    const T& pick(const std::vector<T>& values) {
        return values[index(values.size())];
    }

private:
    std::mt19937_64 engine_;
};

/// Precomputed cumulative table for repeated draws from a fixed discrete distribution.
class DiscreteSampler {
public:
    explicit DiscreteSampler(std::span<const double> weights);

    std::size_t operator()(Rng& rng) const;
    std::size_t size() const noexcept { return cumulative_.size(); }

private:
    std::vector<double> cumulative_;
};

} // namespace benchgen
