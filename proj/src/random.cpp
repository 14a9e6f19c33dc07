#include <benchgen/random.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace benchgen {

std::size_t Rng::index(std::size_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("Rng::index: empty range");
    }
    const auto b = static_cast<std::uint64_t>(bound);
    // Rejection of the short tail keeps the draw exactly uniform.
    const std::uint64_t threshold = (0 - b) % b;
    for (;;) {
        const std::uint64_t r = engine_();
        if (r >= threshold) {
            return static_cast<std::size_t>(r % b);
        }
    }
}

std::size_t Rng::geometric(double p) {
    std::size_t k = 0;
    while (uniform01() < p) {
        ++k;
    }
    return k;
}

std::size_t Rng::weighted_index(std::span<const double> weights) {
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (!(total > 0.0)) {
        throw std::invalid_argument("Rng::weighted_index: weights must have a positive sum");
    }
    double x = uniform01() * total;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] <= 0.0) {
            continue;
        }
        last_positive = i;
        if (x < weights[i]) {
            return i;
        }
        x -= weights[i];
    }
    // Rounding can leave x marginally above the last weight.
    return last_positive;
}

DiscreteSampler::DiscreteSampler(std::span<const double> weights) : cumulative_(weights.size()) {
    std::partial_sum(weights.begin(), weights.end(), cumulative_.begin());
    if (cumulative_.empty() || !(cumulative_.back() > 0.0)) {
        throw std::invalid_argument("DiscreteSampler: weights must have a positive sum");
    }
}

std::size_t DiscreteSampler::operator()(Rng& rng) const {
    const double x = rng.uniform01() * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), x);
    if (it == cumulative_.end()) {
        --it;
    }
    return static_cast<std::size_t>(it - cumulative_.begin());
}

} // namespace benchgen
