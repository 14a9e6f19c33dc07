#pragma once

#include <benchgen/community_assignment.hpp>
#include <benchgen/graph.hpp>
#include <benchgen/random.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace benchgen {

/// FARZ growth-model parameters. Defaults: 1000 nodes, 4 communities, 5 edges
/// per step, beta 0.8, phi 1, r 1, epsilon 1e-7, alpha = gamma = 0.5.
struct FarzParams {
    std::size_t n = 1000;
    std::size_t m = 5;           ///< connection attempts per growth step
    std::size_t k = 4;           ///< number of communities
    double alpha = 0.5;          ///< common-neighbour exponent
    double beta = 0.8;           ///< probability an edge stays inside the source's communities
    double gamma = 0.5;          ///< degree-similarity exponent; negative values favour degree gaps
    double phi = 1.0;            ///< community-size smoothing; large values balance sizes
    std::size_t r = 1;           ///< memberships drawn for each overlapping node
    double q = 0.0;              ///< fraction of nodes designated overlapping
    double epsilon = 1e-7;       ///< baseline edge weight

    /// Throws ParameterError naming the first invalid field.
    void validate() const;
};

/// Community join probabilities (|u| + phi) / sum_v (|v| + phi).
std::vector<double> join_probability(std::span<const std::size_t> sizes, double phi);

/// Draws r_i communities by join_probability over the current sizes, adding
/// node i to each one it is not already in. Returns i's membership count.
std::size_t farz_assign(NodeId i, CommunityAssignment& asg, std::size_t r_i, double phi, Rng& rng);

/// Edge formation weight cn^alpha * ((d_i - d_j)^2 + 1)^(-gamma) + epsilon,
/// with 0^0 taken as 1.
double edge_weight(std::size_t common_neighbors, std::size_t degree_i, std::size_t degree_j, double alpha,
                   double gamma, double epsilon);
double edge_weight(const Graph& g, NodeId i, NodeId j, double alpha, double gamma, double epsilon);

/// Forms one edge from node i per the FARZ connect step.
///
/// With probability beta (always, when i belongs to every community) a
/// community is picked uniformly from i's memberships, otherwise uniformly
/// from the rest. The partner is drawn from that community's members not yet
/// adjacent to i, proportionally to edge_weight at the current degrees. If
/// the community offers no partner, up to three other communities from the
/// same branch are tried before giving up.
///
/// Holds scratch buffers so repeated calls avoid per-call allocation.
class FarzConnector {
public:
    static constexpr std::size_t kMaxRetries = 3;

    std::optional<Edge> connect(NodeId i, Graph& g, const CommunityAssignment& asg, const FarzParams& params,
                                Rng& rng);

private:
    bool try_community(CommunityId c, NodeId i, const Graph& g, const CommunityAssignment& asg,
                       const FarzParams& params, Rng& rng, NodeId& partner);
    void count_common_neighbors(NodeId i, const Graph& g);
    void reset_scratch();

    std::vector<std::uint32_t> common_;
    std::vector<char> adjacent_;
    std::vector<NodeId> touched_;
    std::vector<NodeId> candidates_;
    std::vector<double> weights_;
    std::vector<CommunityId> pool_;
};

std::optional<Edge> farz_connect(NodeId i, Graph& g, const CommunityAssignment& asg, const FarzParams& params,
                                 Rng& rng);

struct FarzResult {
    Graph graph;
    CommunityAssignment assignment;
    /// Connect calls that found no eligible partner. Node 0's own connect step
    /// has no possible partner and is not counted.
    std::size_t skipped_connections = 0;
};

/// Grows the network one node at a time: assign, connect the new node, then
/// give m - 1 uniformly chosen existing nodes a chance to connect. The
/// ceil(q * n) overlapping nodes are chosen uniformly up front and draw r
/// memberships each; all other nodes draw one.
FarzResult farz_generate(const FarzParams& params, Rng& rng);

} // namespace benchgen
