#include <benchgen/three_pass.hpp>

#include <benchgen/error.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace benchgen {

void ThetaC::validate(std::size_t n) const {
    if (!(mu >= 0.0 && mu <= 1.0)) throw ParameterError("mu", "must lie in [0, 1]");
    if (!std::isfinite(size_exponent)) throw ParameterError("size_exponent", "must be finite");
    if (c_min < 2) throw ParameterError("c_min", "must be at least 2");
    if (c_max < c_min) throw ParameterError("c_max", "must not be smaller than c_min");
    if (n < c_min) throw ParameterError("c_min", "exceeds the node count " + std::to_string(n));
    if (c_max > n) throw ParameterError("c_max", "exceeds the node count " + std::to_string(n));
}

std::string_view strategy_name(AssignStrategy s) {
    switch (s) {
    case AssignStrategy::lfr: return "lfr";
    case AssignStrategy::cn: return "cn";
    case AssignStrategy::ne: return "ne";
    }
    return "?";
}

std::optional<AssignStrategy> parse_strategy(std::string_view name) {
    if (name == "lfr") return AssignStrategy::lfr;
    if (name == "cn") return AssignStrategy::cn;
    if (name == "ne") return AssignStrategy::ne;
    return std::nullopt;
}

std::vector<std::size_t> sample_community_sizes(std::size_t n, const ThetaC& theta, Rng& rng) {
    theta.validate(n);
    const PowerLawDistribution dist(theta.size_exponent, static_cast<double>(theta.c_min), theta.c_max);
    std::vector<std::size_t> sizes;
    std::size_t total = 0;
    while (total < n) {
        std::size_t s = dist.sample(rng);
        if (total + s < n) {
            sizes.push_back(s);
            total += s;
            continue;
        }
        s = n - total;
        if (s < theta.c_min && !sizes.empty()) {
            sizes.back() += s;
        } else {
            sizes.push_back(s);
        }
        total = n;
    }
    return sizes;
}

bool fits_capacity(std::size_t capacity, std::size_t degree, double mu) {
    return static_cast<double>(capacity) + 1e-9 >= (1.0 - mu) * static_cast<double>(degree);
}

std::vector<double> cn_join_weights(const Graph& g, NodeId v, std::span<const CommunityId> placed,
                                    std::span<const std::size_t> sizes, std::span<const std::size_t> filled,
                                    double mu) {
    std::vector<double> weights(sizes.size(), 0.0);
    const std::size_t deg = g.degree(v);
    for (std::size_t c = 0; c < sizes.size(); ++c) {
        if (filled[c] < sizes[c] && fits_capacity(sizes[c], deg, mu)) {
            weights[c] = 1.0;
        }
    }
    for (NodeId u : g.neighbors(v)) {
        const CommunityId c = placed[u];
        if (c != CommunityAssignment::kNone && weights[c] > 0.0) {
            weights[c] += 1.0;
        }
    }
    return weights;
}

namespace {

class Placement {
public:
    Placement(const Graph& g, std::span<const std::size_t> sizes, double mu, Rng& rng)
        : g_(g), sizes_(sizes.begin(), sizes.end()), mu_(mu), rng_(rng), asg_(g.node_count(), sizes.size()),
          placed_(g.node_count(), CommunityAssignment::kNone) {
        const std::size_t total = std::accumulate(sizes_.begin(), sizes_.end(), std::size_t{0});
        if (total != g.node_count()) {
            throw ParameterError("sizes", "community sizes sum to " + std::to_string(total) + " but the graph has " +
                                              std::to_string(g.node_count()) + " nodes");
        }
        if (sizes_.empty()) {
            throw ParameterError("sizes", "at least one community is required");
        }
        const std::size_t largest = *std::max_element(sizes_.begin(), sizes_.end());
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (!fits_capacity(largest, g.degree(v), mu)) {
                throw ParameterError("c_max", "node " + std::to_string(v) + " with degree " +
                                                  std::to_string(g.degree(v)) + " fits no community at mu=" +
                                                  std::to_string(mu) + " (largest community " +
                                                  std::to_string(largest) + ")");
            }
        }
    }

    std::size_t community_count() const { return sizes_.size(); }
    std::size_t filled(CommunityId c) const { return asg_.community_size(c); }
    bool is_placed(NodeId v) const { return placed_[v] != CommunityAssignment::kNone; }
    bool fits(CommunityId c, NodeId v) const { return fits_capacity(sizes_[c], g_.degree(v), mu_); }
    bool open(CommunityId c) const { return filled(c) < sizes_[c]; }

    std::vector<CommunityId> open_fitting(NodeId v) const {
        std::vector<CommunityId> out;
        for (CommunityId c = 0; c < sizes_.size(); ++c) {
            if (open(c) && fits(c, v)) {
                out.push_back(c);
            }
        }
        return out;
    }

    void place(NodeId v, CommunityId c) {
        asg_.add(v, c);
        placed_[v] = c;
    }

    std::vector<double> cn_weights(NodeId v) const {
        const auto filled_counts = asg_.community_sizes();
        return cn_join_weights(g_, v, placed_, sizes_, filled_counts, mu_);
    }

    /// Nodes still unplaced are retried in random communities; a full
    /// community takes the node and ejects a member of smaller degree (any
    /// member when none is smaller), which re-enters the queue.
    CommunityAssignment finish() {
        std::vector<NodeId> homeless;
        for (NodeId v = 0; v < g_.node_count(); ++v) {
            if (!is_placed(v)) {
                homeless.push_back(v);
            }
        }
        const std::size_t cap = 50 * g_.node_count();
        std::size_t iterations = 0;
        std::vector<NodeId> candidates;
        while (!homeless.empty()) {
            if (++iterations > cap) {
                throw ParameterError("mu", "homeless queue still holds " + std::to_string(homeless.size()) +
                                               " nodes after " + std::to_string(cap) + " placement attempts");
            }
            const std::size_t slot = rng_.index(homeless.size());
            const NodeId v = homeless[slot];
            const auto c = static_cast<CommunityId>(rng_.index(sizes_.size()));
            if (!fits(c, v)) {
                continue;
            }
            homeless[slot] = homeless.back();
            homeless.pop_back();
            place(v, c);
            if (filled(c) <= sizes_[c]) {
                continue;
            }
            candidates.clear();
            for (NodeId u : asg_.members(c)) {
                if (u != v && g_.degree(u) < g_.degree(v)) {
                    candidates.push_back(u);
                }
            }
            if (candidates.empty()) {
                for (NodeId u : asg_.members(c)) {
                    if (u != v) {
                        candidates.push_back(u);
                    }
                }
            }
            const NodeId evicted = rng_.pick(candidates);
            asg_.remove(evicted, c);
            placed_[evicted] = CommunityAssignment::kNone;
            homeless.push_back(evicted);
        }
        return std::move(asg_);
    }

    /// Breadth-first fill of community c from `seed`, placing unplaced nodes
    /// that fit until c is full or the frontier runs dry.
    void expand(CommunityId c, NodeId seed) {
        if (mark_.size() != g_.node_count()) {
            mark_.assign(g_.node_count(), 0);
        }
        ++stamp_;
        std::vector<NodeId> queue{seed};
        mark_[seed] = stamp_;
        for (std::size_t head = 0; head < queue.size() && open(c); ++head) {
            const NodeId x = queue[head];
            if (is_placed(x) || !fits(c, x)) {
                continue;
            }
            place(x, c);
            for (NodeId u : g_.neighbors(x)) {
                if (mark_[u] != stamp_ && !is_placed(u)) {
                    mark_[u] = stamp_;
                    queue.push_back(u);
                }
            }
        }
    }

    Rng& rng() { return rng_; }

private:
    const Graph& g_;
    std::vector<std::size_t> sizes_;
    double mu_;
    Rng& rng_;
    CommunityAssignment asg_;
    std::vector<CommunityId> placed_;
    std::vector<std::uint32_t> mark_;
    std::uint32_t stamp_ = 0;
};

std::vector<NodeId> shuffled_nodes(std::size_t n, Rng& rng) {
    std::vector<NodeId> order(n);
    for (NodeId v = 0; v < n; ++v) {
        order[v] = v;
    }
    rng.shuffle(order);
    return order;
}

} // namespace

CommunityAssignment assign_lfr(const Graph& g, std::span<const std::size_t> sizes, double mu, Rng& rng) {
    Placement p(g, sizes, mu, rng);
    for (NodeId v : shuffled_nodes(g.node_count(), rng)) {
        const auto options = p.open_fitting(v);
        if (!options.empty()) {
            p.place(v, rng.pick(options));
        }
    }
    return p.finish();
}

CommunityAssignment assign_cn(const Graph& g, std::span<const std::size_t> sizes, double mu, Rng& rng) {
    Placement p(g, sizes, mu, rng);
    for (NodeId v : shuffled_nodes(g.node_count(), rng)) {
        const auto weights = p.cn_weights(v);
        if (std::any_of(weights.begin(), weights.end(), [](double w) { return w > 0.0; })) {
            p.place(v, static_cast<CommunityId>(rng.weighted_index(weights)));
        }
    }
    return p.finish();
}

CommunityAssignment assign_ne(const Graph& g, std::span<const std::size_t> sizes, double mu, Rng& rng) {
    Placement p(g, sizes, mu, rng);
    std::vector<NodeId> seeds;
    for (NodeId v : shuffled_nodes(g.node_count(), rng)) {
        if (p.is_placed(v)) {
            continue;
        }
        const auto options = p.open_fitting(v);
        if (options.empty()) {
            continue;
        }
        const CommunityId c = rng.pick(options);
        p.expand(c, v);
        while (p.open(c)) {
            seeds.clear();
            for (NodeId u = 0; u < g.node_count(); ++u) {
                if (!p.is_placed(u) && p.fits(c, u)) {
                    seeds.push_back(u);
                }
            }
            if (seeds.empty()) {
                break;
            }
            p.expand(c, rng.pick(seeds));
        }
    }
    return p.finish();
}

CommunityAssignment assign(AssignStrategy strategy, const Graph& g, std::span<const std::size_t> sizes, double mu,
                           Rng& rng) {
    switch (strategy) {
    case AssignStrategy::lfr: return assign_lfr(g, sizes, mu, rng);
    case AssignStrategy::cn: return assign_cn(g, sizes, mu, rng);
    case AssignStrategy::ne: return assign_ne(g, sizes, mu, rng);
    }
    throw std::invalid_argument("unknown assignment strategy");
}

OverlayResult overlay_rewire(const Graph& input, const CommunityAssignment& asg, double mu, Rng& rng) {
    if (asg.node_count() != input.node_count() || !asg.is_complete() || asg.is_overlapping()) {
        throw std::invalid_argument("overlay_rewire: needs a complete, non-overlapping assignment of every node");
    }
    Graph g = input;
    RewireStats stats;
    const std::size_t n = g.node_count();
    std::vector<CommunityId> community(n);
    for (NodeId v = 0; v < n; ++v) {
        community[v] = asg.memberships(v).front();
    }

    std::vector<long> between_change(n);
    std::vector<long> within_change(n);
    for (NodeId v = 0; v < n; ++v) {
        long between = 0;
        for (NodeId u : g.neighbors(v)) {
            between += community[u] != community[v];
        }
        const double target = mu * static_cast<double>(g.degree(v));
        // The epsilon keeps products like 0.29 * 100 from flooring one short.
        between_change[v] = static_cast<long>(std::floor(target - static_cast<double>(between) + 1e-9));
        within_change[v] = -between_change[v];
    }

    auto drop = [](std::vector<NodeId>& pool, std::size_t slot) {
        pool[slot] = pool.back();
        pool.pop_back();
    };
    auto erase_value = [](std::vector<NodeId>& pool, NodeId value) {
        auto it = std::find(pool.begin(), pool.end(), value);
        if (it != pool.end()) {
            *it = pool.back();
            pool.pop_back();
        }
    };

    std::vector<NodeId> pool;
    std::vector<NodeId> partners;
    for (CommunityId c = 0; c < asg.community_count(); ++c) {
        const auto members = asg.members(c);

        pool.clear();
        for (NodeId v : members) {
            if (within_change[v] > 0) pool.push_back(v);
        }
        while (pool.size() >= 2) {
            const std::size_t slot = rng.index(pool.size());
            const NodeId v = pool[slot];
            partners.clear();
            for (NodeId u : pool) {
                if (u != v && !g.has_edge(u, v)) partners.push_back(u);
            }
            if (partners.empty()) {
                drop(pool, slot);
                continue;
            }
            const NodeId u = rng.pick(partners);
            g.add_edge(u, v);
            ++stats.edges_added;
            if (--within_change[v] == 0) erase_value(pool, v);
            if (--within_change[u] == 0) erase_value(pool, u);
        }

        for (NodeId v : members) {
            if (within_change[v] >= 0) continue;
            pool.clear();
            for (NodeId u : g.neighbors(v)) {
                if (community[u] == c && within_change[u] < 0) pool.push_back(u);
            }
            while (!pool.empty() && within_change[v] < 0) {
                const std::size_t slot = rng.index(pool.size());
                const NodeId u = pool[slot];
                g.remove_edge(u, v);
                ++stats.edges_removed;
                ++within_change[v];
                ++within_change[u];
                drop(pool, slot);
            }
        }
    }

    std::vector<NodeId> inside;
    std::vector<NodeId> outside;
    for (CommunityId c = 0; c < asg.community_count(); ++c) {
        const auto members = asg.members(c);
        inside.clear();
        outside.clear();
        for (NodeId v = 0; v < n; ++v) {
            if (between_change[v] > 0) (community[v] == c ? inside : outside).push_back(v);
        }
        while (!inside.empty() && !outside.empty()) {
            const std::size_t slot = rng.index(inside.size());
            const NodeId v = inside[slot];
            partners.clear();
            for (NodeId u : outside) {
                if (!g.has_edge(u, v)) partners.push_back(u);
            }
            if (partners.empty()) {
                drop(inside, slot);
                continue;
            }
            const NodeId u = rng.pick(partners);
            g.add_edge(u, v);
            ++stats.edges_added;
            if (--between_change[v] == 0) erase_value(inside, v);
            if (--between_change[u] == 0) erase_value(outside, u);
        }

        for (NodeId v : members) {
            if (between_change[v] >= 0) continue;
            pool.clear();
            for (NodeId u : g.neighbors(v)) {
                if (community[u] != c && between_change[u] < 0) pool.push_back(u);
            }
            while (!pool.empty() && between_change[v] < 0) {
                const std::size_t slot = rng.index(pool.size());
                const NodeId u = pool[slot];
                g.remove_edge(u, v);
                ++stats.edges_removed;
                ++between_change[v];
                ++between_change[u];
                drop(pool, slot);
            }
        }
    }
    return {std::move(g), stats};
}

ThreePassResult generate_three_pass(const ThetaG& theta_g, const ThetaC& theta_c, AssignStrategy strategy, Rng& rng) {
    validate(theta_g);
    theta_c.validate(node_count(theta_g));
    Graph start = generate_start_graph(theta_g, rng);
    const auto sizes = sample_community_sizes(start.node_count(), theta_c, rng);
    CommunityAssignment asg = assign(strategy, start, sizes, theta_c.mu, rng);
    auto [graph, stats] = overlay_rewire(start, asg, theta_c.mu, rng);
    return {std::move(start), std::move(graph), std::move(asg), stats};
}

} // namespace benchgen
