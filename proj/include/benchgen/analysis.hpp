#pragma once

#include <benchgen/community_assignment.hpp>
#include <benchgen/graph.hpp>
#include <benchgen/random.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace benchgen {

using DegreeHistogram = std::map<std::size_t, std::size_t>;

struct ClusteringResult {
    std::vector<double> per_node;  ///< 0 for nodes of degree < 2
    double average = 0.0;          ///< over all nodes
};

ClusteringResult clustering(const Graph& g);

struct Assortativity {
    double value = 0.0;
    bool degenerate = false;  ///< degrees at edge endpoints have zero variance; value is 0
};

/// Pearson correlation of endpoint degrees over both orientations of every
/// edge. Throws std::domain_error for a graph without edges.
Assortativity degree_assortativity(const Graph& g);

struct PathLength {
    double mean = 0.0;
    std::size_t component_size = 0;
    std::size_t sources = 0;  ///< BFS sources used; equals component_size when exact
};

/// Mean BFS distance over ordered pairs inside the largest connected
/// component. With sample_size below the component size, BFS runs from that
/// many distinct uniformly drawn sources. Throws std::domain_error when the
/// largest component has fewer than two nodes.
PathLength avg_shortest_path(const Graph& g, std::optional<std::size_t> sample_size, Rng& rng);

/// 256 sampled sources above 2000 nodes, exact otherwise.
std::optional<std::size_t> default_path_sample_size(std::size_t node_count);

struct MixingResult {
    std::vector<double> within_ratio;  ///< per node, fraction of edges to nodes sharing a community
    std::vector<bool> isolated;        ///< degree-0 nodes, reported with ratio 0

    /// Mean within-ratio over non-isolated nodes.
    double mean() const;
};

/// An edge counts as within when its endpoints share at least one community.
MixingResult realized_mixing(const Graph& g, const CommunityAssignment& asg);

/// Fraction of edge endpoints whose edge is within; equals the edge-level
/// within fraction (within edges / all edges).
double within_edge_fraction(const Graph& g, const CommunityAssignment& asg);

DegreeHistogram degree_histogram(const Graph& g);

/// Full-graph degrees of each community's members.
std::vector<DegreeHistogram> per_community_degree_histograms(const Graph& g, const CommunityAssignment& asg);

struct PropertyReport {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    double avg_degree = 0.0;
    double avg_clustering = 0.0;
    Assortativity degree_assortativity;
    std::optional<PathLength> avg_shortest_path;  ///< absent when the largest component is trivial
    DegreeHistogram degree_histogram;
    std::vector<double> per_node_clustering;
    std::optional<MixingResult> realized_mixing;  ///< present when communities are supplied
    std::vector<DegreeHistogram> per_community_degree_histograms;
};

PropertyReport analyze(const Graph& g, const CommunityAssignment* asg, std::optional<std::size_t> path_samples,
                       Rng& rng);

} // namespace benchgen
