#include <benchgen/analysis.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace benchgen {

ClusteringResult clustering(const Graph& g) {
    const std::size_t n = g.node_count();
    ClusteringResult result;
    result.per_node.assign(n, 0.0);
    double total = 0.0;
    for (NodeId v = 0; v < n; ++v) {
        const std::size_t d = g.degree(v);
        if (d < 2) {
            continue;
        }
        // Each triangle through v is seen once from each of its two other corners.
        std::size_t twice_triangles = 0;
        for (NodeId u : g.neighbors(v)) {
            twice_triangles += common_neighbor_count(g, v, u);
        }
        result.per_node[v] = static_cast<double>(twice_triangles) / static_cast<double>(d * (d - 1));
        total += result.per_node[v];
    }
    result.average = n ? total / static_cast<double>(n) : 0.0;
    return result;
}

Assortativity degree_assortativity(const Graph& g) {
    if (g.edge_count() == 0) {
        throw std::domain_error("degree_assortativity: graph has no edges");
    }
    // Both orientations make the two endpoint marginals identical, so one
    // mean and one variance serve both sides of the correlation.
    const auto edges = g.edges();
    const double pairs = 2.0 * static_cast<double>(edges.size());
    double sum = 0.0;
    for (const auto& [i, j] : edges) {
        sum += static_cast<double>(g.degree(i) + g.degree(j));
    }
    const double mean = sum / pairs;
    double variance = 0.0;
    double covariance = 0.0;
    for (const auto& [i, j] : edges) {
        const double xi = static_cast<double>(g.degree(i)) - mean;
        const double xj = static_cast<double>(g.degree(j)) - mean;
        variance += xi * xi + xj * xj;
        covariance += 2.0 * xi * xj;
    }
    if (!(variance > 1e-12 * pairs)) {
        return {0.0, true};
    }
    return {std::clamp(covariance / variance, -1.0, 1.0), false};
}

std::optional<std::size_t> default_path_sample_size(std::size_t node_count) {
    if (node_count > 2000) {
        return 256;
    }
    return std::nullopt;
}

PathLength avg_shortest_path(const Graph& g, std::optional<std::size_t> sample_size, Rng& rng) {
    const auto components = connected_components(g);
    if (components.empty() || components.front().size() < 2) {
        throw std::domain_error("avg_shortest_path: largest component has fewer than two nodes");
    }
    std::vector<NodeId> sources = components.front();
    const std::size_t size = sources.size();
    if (sample_size && *sample_size < size) {
        if (*sample_size == 0) {
            throw std::domain_error("avg_shortest_path: sample size must be positive");
        }
        for (std::size_t t = 0; t < *sample_size; ++t) {
            std::swap(sources[t], sources[t + rng.index(size - t)]);
        }
        sources.resize(*sample_size);
    }

    std::vector<std::uint32_t> dist(g.node_count());
    std::vector<NodeId> queue;
    constexpr auto kUnseen = std::numeric_limits<std::uint32_t>::max();
    double total = 0.0;
    for (NodeId s : sources) {
        std::fill(dist.begin(), dist.end(), kUnseen);
        dist[s] = 0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const NodeId x = queue[head];
            total += dist[x];
            for (NodeId u : g.neighbors(x)) {
                if (dist[u] == kUnseen) {
                    dist[u] = dist[x] + 1;
                    queue.push_back(u);
                }
            }
        }
    }
    const double pairs = static_cast<double>(sources.size()) * static_cast<double>(size - 1);
    return {total / pairs, size, sources.size()};
}

double MixingResult::mean() const {
    double total = 0.0;
    std::size_t counted = 0;
    for (std::size_t v = 0; v < within_ratio.size(); ++v) {
        if (!isolated[v]) {
            total += within_ratio[v];
            ++counted;
        }
    }
    return counted ? total / static_cast<double>(counted) : 0.0;
}

MixingResult realized_mixing(const Graph& g, const CommunityAssignment& asg) {
    if (asg.node_count() != g.node_count()) {
        throw std::invalid_argument("realized_mixing: assignment and graph differ in node count");
    }
    const std::size_t n = g.node_count();
    MixingResult result{std::vector<double>(n, 0.0), std::vector<bool>(n, false)};
    for (NodeId v = 0; v < n; ++v) {
        const std::size_t d = g.degree(v);
        if (d == 0) {
            result.isolated[v] = true;
            continue;
        }
        std::size_t within = 0;
        for (NodeId u : g.neighbors(v)) {
            within += asg.share_community(u, v);
        }
        result.within_ratio[v] = static_cast<double>(within) / static_cast<double>(d);
    }
    return result;
}

double within_edge_fraction(const Graph& g, const CommunityAssignment& asg) {
    if (g.edge_count() == 0) {
        return 0.0;
    }
    std::size_t within_endpoints = 0;
    for (const auto& [i, j] : g.edges()) {
        within_endpoints += 2 * asg.share_community(i, j);
    }
    return static_cast<double>(within_endpoints) / (2.0 * static_cast<double>(g.edge_count()));
}

DegreeHistogram degree_histogram(const Graph& g) {
    DegreeHistogram h;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        ++h[g.degree(v)];
    }
    return h;
}

std::vector<DegreeHistogram> per_community_degree_histograms(const Graph& g, const CommunityAssignment& asg) {
    std::vector<DegreeHistogram> out(asg.community_count());
    for (CommunityId c = 0; c < asg.community_count(); ++c) {
        for (NodeId v : asg.members(c)) {
            ++out[c][g.degree(v)];
        }
    }
    return out;
}

PropertyReport analyze(const Graph& g, const CommunityAssignment* asg, std::optional<std::size_t> path_samples,
                       Rng& rng) {
    PropertyReport report;
    report.node_count = g.node_count();
    report.edge_count = g.edge_count();
    report.avg_degree = g.node_count() ? 2.0 * static_cast<double>(g.edge_count()) / g.node_count() : 0.0;
    auto cc = clustering(g);
    report.avg_clustering = cc.average;
    report.per_node_clustering = std::move(cc.per_node);
    if (g.edge_count() > 0) {
        report.degree_assortativity = degree_assortativity(g);
        report.avg_shortest_path = avg_shortest_path(g, path_samples, rng);
    } else {
        report.degree_assortativity = {0.0, true};
    }
    report.degree_histogram = degree_histogram(g);
    if (asg) {
        report.realized_mixing = realized_mixing(g, *asg);
        report.per_community_degree_histograms = per_community_degree_histograms(g, *asg);
    }
    return report;
}

} // namespace benchgen
