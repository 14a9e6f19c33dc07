#pragma once

#include <benchgen/classic_models.hpp>
#include <benchgen/community_assignment.hpp>
#include <benchgen/graph.hpp>
#include <benchgen/random.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace benchgen {

/// Community parameters of the 3-pass benchmark: target mixing plus the
/// power law that fixes community capacities.
struct ThetaC {
    double mu = 0.3;
    double size_exponent = 2.0;
    std::size_t c_min = 20;
    std::size_t c_max = 50;

    void validate(std::size_t n) const;
};

enum class AssignStrategy { lfr, cn, ne };

std::string_view strategy_name(AssignStrategy s);
std::optional<AssignStrategy> parse_strategy(std::string_view name);

struct RewireStats {
    std::size_t edges_added = 0;
    std::size_t edges_removed = 0;

    std::size_t rewired_total() const noexcept { return edges_added + edges_removed; }
};

/// Draws sizes from the power law on [c_min, c_max] until they cover n. The
/// last draw is clamped so the sizes sum to n exactly; a clamped remainder
/// smaller than c_min is folded into the previous community.
std::vector<std::size_t> sample_community_sizes(std::size_t n, const ThetaC& theta, Rng& rng);

/// Node v fits community of capacity s when s >= (1 - mu) * deg(v).
bool fits_capacity(std::size_t capacity, std::size_t degree, double mu);

// The three placement variants share the capacity rules and the homeless
// queue; they differ only in how a node's first community is picked.
// Each returns a non-overlapping assignment whose community sizes equal
// `sizes`, or throws ParameterError when some node fits no community.

/// Uniform over non-full communities that fit the node.
CommunityAssignment assign_lfr(const Graph& g, std::span<const std::size_t> sizes, double mu, Rng& rng);

/// Weighted by 1 + (neighbors already placed in the community).
CommunityAssignment assign_cn(const Graph& g, std::span<const std::size_t> sizes, double mu, Rng& rng);

/// Breadth-first expansion from a seed node until the community is full.
CommunityAssignment assign_ne(const Graph& g, std::span<const std::size_t> sizes, double mu, Rng& rng);

CommunityAssignment assign(AssignStrategy strategy, const Graph& g, std::span<const std::size_t> sizes, double mu,
                           Rng& rng);

/// Common-neighbour placement weights for node v: one entry per community,
/// 1 + number of v's neighbors whose `placed` community is that one, and 0
/// for communities that are full (`filled[c] >= sizes[c]`) or too small for v.
/// `placed[u]` is CommunityAssignment::kNone for unplaced nodes.
std::vector<double> cn_join_weights(const Graph& g, NodeId v, std::span<const CommunityId> placed,
                                    std::span<const std::size_t> sizes, std::span<const std::size_t> filled,
                                    double mu);

struct OverlayResult {
    Graph graph;
    RewireStats stats;
};

/// Adds and removes edges so every node's between-community degree moves
/// toward mu * deg. Per node the desired between change is
/// floor(mu * deg - deg_between) and the within change is its negation; the
/// four passes (add within, drop within, add between, drop between) then pair
/// nodes that still need a change. Pairs that cannot be served are left as
/// residuals. Requires a non-overlapping assignment.
OverlayResult overlay_rewire(const Graph& g, const CommunityAssignment& asg, double mu, Rng& rng);

struct ThreePassResult {
    Graph start;
    Graph graph;
    CommunityAssignment assignment;
    RewireStats stats;
};

/// Start graph, community capacities, placement, overlay; all drawn from one rng.
ThreePassResult generate_three_pass(const ThetaG& theta_g, const ThetaC& theta_c, AssignStrategy strategy, Rng& rng);

} // namespace benchgen
