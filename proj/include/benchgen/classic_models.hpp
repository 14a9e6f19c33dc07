#pragma once

#include <benchgen/community_assignment.hpp>
#include <benchgen/graph.hpp>
#include <benchgen/random.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace benchgen {

// Start-network parameter sets. Default member values are the presets used
// throughout the tool (1000 nodes each; GN uses its classic 128/4 layout).

/// Configuration model over a power-law degree sequence.
struct CfParams {
    std::size_t n = 1000;
    double k_avg = 15.0;
    std::size_t k_max = 50;
    double exponent = 3.0;
};

/// Barabasi-Albert preferential attachment.
struct BaParams {
    std::size_t n = 1000;
    std::size_t m = 4;
};

/// Undirected forest fire.
struct FfParams {
    std::size_t n = 1000;
    double p_fwd = 0.1;
    double rp = 0.0;
};

struct ErParams {
    std::size_t n = 1000;
    double p = 0.01;
};

/// Planted partition with equal groups. p_out defaults to p_in / 8.
struct GnParams {
    std::size_t n = 128;
    std::size_t groups = 4;
    double p_in = 0.4;
    std::optional<double> p_out;

    double between_probability() const { return p_out.value_or(p_in / 8.0); }
};

using ThetaG = std::variant<CfParams, BaParams, FfParams, ErParams, GnParams>;

std::string_view model_name(const ThetaG& theta);
std::size_t node_count(const ThetaG& theta);

/// Throws ParameterError naming the first invalid field.
void validate(const ThetaG& theta);

/// Discrete power law P(x) ~ x^-exponent on the integers [floor(lower), hi].
///
/// `lower` may be fractional: the weight of floor(lower) is scaled by
/// 1 - frac(lower), which makes the mean a continuous, increasing function of
/// the cutoff. Integer cutoffs give the plain truncated power law.
class PowerLawDistribution {
public:
    PowerLawDistribution(double exponent, double lower, std::size_t hi);

    double mean() const;
    std::size_t min_value() const noexcept { return first_; }
    std::size_t max_value() const noexcept { return first_ + weights_.size() - 1; }
    std::size_t sample(Rng& rng) const { return first_ + sampler_(rng); }

private:
    std::size_t first_;
    std::vector<double> weights_;
    DiscreteSampler sampler_;
};

/// Cutoff in [lo, hi] whose distribution mean matches target_mean, found by
/// bisection. Throws ParameterError("target_mean") when the target lies outside
/// the achievable range [mean(lo), hi].
double fit_lower_cutoff(double exponent, std::size_t lo, std::size_t hi, double target_mean);

/// `count` independent draws from the power law on [lo, hi]. With a target
/// mean the lower cutoff is fitted first. With even_sum, one entry below hi is
/// incremented when the total is odd (or one above lo decremented if all sit at hi).
std::vector<std::size_t> sample_powerlaw_sequence(std::size_t count, double exponent, std::size_t lo,
                                                  std::size_t hi, std::optional<double> target_mean, Rng& rng,
                                                  bool even_sum = false);

/// Pairs degree stubs uniformly at random. Self-loops and repeated pairs are
/// dropped, so realized degrees never exceed the requested ones.
Graph gen_cf(std::span<const std::size_t> degrees, Rng& rng);
Graph gen_cf(const CfParams& params, Rng& rng);

Graph gen_ba(std::size_t n, std::size_t m, Rng& rng);
Graph gen_ff(std::size_t n, double p_fwd, double rp, Rng& rng);
Graph gen_er(std::size_t n, double p, Rng& rng);
std::pair<Graph, CommunityAssignment> gen_gn(const GnParams& params, Rng& rng);

/// Dispatches on the variant; GN's planted groups are discarded.
Graph generate_start_graph(const ThetaG& theta, Rng& rng);

} // namespace benchgen
