#include <benchgen/farz.hpp>

#include <benchgen/error.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace benchgen {

void FarzParams::validate() const {
    if (n < 1) throw ParameterError("n", "must be at least 1");
    if (m < 1) throw ParameterError("m", "must be at least 1");
    if (k < 1) throw ParameterError("k", "must be at least 1");
    if (r < 1) throw ParameterError("r", "must be at least 1");
    if (!(alpha >= 0.0 && std::isfinite(alpha))) throw ParameterError("alpha", "must be a finite value >= 0");
    if (!(beta >= 0.0 && beta <= 1.0)) throw ParameterError("beta", "must lie in [0, 1]");
    if (!std::isfinite(gamma)) throw ParameterError("gamma", "must be finite");
    if (!(phi > 0.0 && std::isfinite(phi))) throw ParameterError("phi", "must be positive");
    if (!(q >= 0.0 && q <= 1.0)) throw ParameterError("q", "must lie in [0, 1]");
    if (!(epsilon > 0.0 && std::isfinite(epsilon))) throw ParameterError("epsilon", "must be positive");
}

std::vector<double> join_probability(std::span<const std::size_t> sizes, double phi) {
    if (sizes.empty()) {
        throw std::invalid_argument("join_probability: no communities");
    }
    if (!(phi > 0.0)) {
        throw std::invalid_argument("join_probability: phi must be positive");
    }
    std::vector<double> p(sizes.size());
    double total = 0.0;
    for (std::size_t u = 0; u < sizes.size(); ++u) {
        p[u] = static_cast<double>(sizes[u]) + phi;
        total += p[u];
    }
    for (auto& x : p) {
        x /= total;
    }
    return p;
}

std::size_t farz_assign(NodeId i, CommunityAssignment& asg, std::size_t r_i, double phi, Rng& rng) {
    for (std::size_t draw = 0; draw < r_i; ++draw) {
        const auto sizes = asg.community_sizes();
        const auto p = join_probability(sizes, phi);
        asg.add(i, static_cast<CommunityId>(rng.weighted_index(p)));
    }
    return asg.memberships(i).size();
}

double edge_weight(std::size_t common_neighbors, std::size_t degree_i, std::size_t degree_j, double alpha,
                   double gamma, double epsilon) {
    const double gap = static_cast<double>(degree_i) - static_cast<double>(degree_j);
    // std::pow(0.0, 0.0) == 1, which is the convention wanted for alpha = 0.
    return std::pow(static_cast<double>(common_neighbors), alpha) * std::pow(gap * gap + 1.0, -gamma) + epsilon;
}

double edge_weight(const Graph& g, NodeId i, NodeId j, double alpha, double gamma, double epsilon) {
    return edge_weight(common_neighbor_count(g, i, j), g.degree(i), g.degree(j), alpha, gamma, epsilon);
}

void FarzConnector::count_common_neighbors(NodeId i, const Graph& g) {
    const std::size_t n = g.node_count();
    if (common_.size() < n) {
        common_.resize(n, 0);
        adjacent_.resize(n, 0);
    }
    for (NodeId x : g.neighbors(i)) {
        adjacent_[x] = 1;
        touched_.push_back(x);
        for (NodeId y : g.neighbors(x)) {
            if (common_[y]++ == 0) {
                touched_.push_back(y);
            }
        }
    }
}

void FarzConnector::reset_scratch() {
    for (NodeId v : touched_) {
        common_[v] = 0;
        adjacent_[v] = 0;
    }
    touched_.clear();
}

bool FarzConnector::try_community(CommunityId c, NodeId i, const Graph& g, const CommunityAssignment& asg,
                                  const FarzParams& params, Rng& rng, NodeId& partner) {
    candidates_.clear();
    weights_.clear();
    const std::size_t deg_i = g.degree(i);
    for (NodeId j : asg.members(c)) {
        if (j == i || adjacent_[j]) {
            continue;
        }
        candidates_.push_back(j);
        weights_.push_back(edge_weight(common_[j], deg_i, g.degree(j), params.alpha, params.gamma, params.epsilon));
    }
    if (candidates_.empty()) {
        return false;
    }
    partner = candidates_[rng.weighted_index(weights_)];
    return true;
}

std::optional<Edge> FarzConnector::connect(NodeId i, Graph& g, const CommunityAssignment& asg,
                                           const FarzParams& params, Rng& rng) {
    const auto own = asg.memberships(i);
    std::vector<CommunityId> others;
    for (CommunityId c = 0; c < asg.community_count(); ++c) {
        if (!std::binary_search(own.begin(), own.end(), c)) {
            others.push_back(c);
        }
    }
    const bool inside = others.empty() || (!own.empty() && rng.bernoulli(params.beta));
    if (inside) {
        pool_.assign(own.begin(), own.end());
    } else {
        pool_ = std::move(others);
    }
    if (pool_.empty()) {
        return std::nullopt;
    }

    count_common_neighbors(i, g);
    std::optional<Edge> edge;
    NodeId partner = 0;
    for (std::size_t attempt = 0; attempt <= kMaxRetries && !pool_.empty(); ++attempt) {
        const std::size_t slot = rng.index(pool_.size());
        const CommunityId c = pool_[slot];
        pool_[slot] = pool_.back();
        pool_.pop_back();
        if (try_community(c, i, g, asg, params, rng, partner)) {
            edge = Edge{std::min(i, partner), std::max(i, partner)};
            break;
        }
    }
    reset_scratch();
    if (edge) {
        g.add_edge(edge->first, edge->second);
    }
    return edge;
}

std::optional<Edge> farz_connect(NodeId i, Graph& g, const CommunityAssignment& asg, const FarzParams& params,
                                 Rng& rng) {
    FarzConnector connector;
    return connector.connect(i, g, asg, params, rng);
}

FarzResult farz_generate(const FarzParams& params, Rng& rng) {
    params.validate();
    const std::size_t n = params.n;

    std::vector<char> overlapping(n, 0);
    if (params.q > 0.0 && params.r > 1) {
        const auto designated = std::min<std::size_t>(n, static_cast<std::size_t>(std::ceil(params.q * n - 1e-9)));
        std::vector<NodeId> order(n);
        for (NodeId v = 0; v < n; ++v) {
            order[v] = v;
        }
        for (std::size_t t = 0; t < designated; ++t) {
            std::swap(order[t], order[t + rng.index(n - t)]);
            overlapping[order[t]] = 1;
        }
    }

    FarzResult result{Graph(), CommunityAssignment(0, params.k), 0};
    Graph& g = result.graph;
    CommunityAssignment& asg = result.assignment;
    FarzConnector connector;
    for (std::size_t step = 0; step < n; ++step) {
        const NodeId i = g.add_node();
        asg.add_node();
        farz_assign(i, asg, overlapping[i] ? params.r : 1, params.phi, rng);
        if (i > 0 && !connector.connect(i, g, asg, params, rng)) {
            ++result.skipped_connections;
        }
        for (std::size_t extra = 1; extra < params.m; ++extra) {
            const auto j = static_cast<NodeId>(rng.index(g.node_count()));
            if (!connector.connect(j, g, asg, params, rng)) {
                ++result.skipped_connections;
            }
        }
    }
    return result;
}

} // namespace benchgen
