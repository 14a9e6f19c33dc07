#include <benchgen/classic_models.hpp>

#include <benchgen/error.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace benchgen {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_probability(double p, const char* name, bool allow_one = true) {
    const bool ok = allow_one ? (p >= 0.0 && p <= 1.0) : (p >= 0.0 && p < 1.0);
    if (!ok) {
        throw ParameterError(name, std::string("must lie in [0, 1") + (allow_one ? "]" : ")") + ", got " +
                                       std::to_string(p));
    }
}

std::vector<double> powerlaw_weights(double exponent, double lower, std::size_t hi, std::size_t& first) {
    first = static_cast<std::size_t>(std::floor(lower));
    std::vector<double> weights;
    weights.reserve(hi - first + 1);
    for (std::size_t x = first; x <= hi; ++x) {
        weights.push_back(std::pow(static_cast<double>(x), -exponent));
    }
    weights.front() *= 1.0 - (lower - static_cast<double>(first));
    if (!(weights.front() > 0.0) && weights.size() > 1) {
        // lower sits exactly on the next integer up to rounding.
        weights.erase(weights.begin());
        ++first;
    }
    return weights;
}

} // namespace

std::string_view model_name(const ThetaG& theta) {
    return std::visit(Overloaded{
                          [](const CfParams&) { return std::string_view("cf"); },
                          [](const BaParams&) { return std::string_view("ba"); },
                          [](const FfParams&) { return std::string_view("ff"); },
                          [](const ErParams&) { return std::string_view("er"); },
                          [](const GnParams&) { return std::string_view("gn"); },
                      },
                      theta);
}

std::size_t node_count(const ThetaG& theta) {
    return std::visit([](const auto& p) { return p.n; }, theta);
}

void validate(const ThetaG& theta) {
    std::visit(Overloaded{
                   [](const CfParams& p) {
                       if (p.k_max >= p.n) throw ParameterError("k_max", "must be smaller than n");
                       if (!(p.k_avg >= 1.0 && p.k_avg <= static_cast<double>(p.k_max)))
                           throw ParameterError("k_avg", "must satisfy 1 <= k_avg <= k_max");
                       if (!(p.exponent > 1.0)) throw ParameterError("exponent", "must be greater than 1");
                   },
                   [](const BaParams& p) {
                       if (p.m < 1 || p.m >= p.n) throw ParameterError("m_ba", "must satisfy 1 <= m_ba < n");
                   },
                   [](const FfParams& p) {
                       require_probability(p.p_fwd, "p_fwd", false);
                       require_probability(p.rp, "rp", false);
                   },
                   [](const ErParams& p) { require_probability(p.p, "p_edge"); },
                   [](const GnParams& p) {
                       if (p.groups == 0 || p.n % p.groups != 0)
                           throw ParameterError("groups", "n must be divisible by the number of groups");
                       require_probability(p.p_in, "p_in");
                       require_probability(p.between_probability(), "p_out");
                   },
               },
               theta);
}

PowerLawDistribution::PowerLawDistribution(double exponent, double lower, std::size_t hi)
    : first_(0), weights_(powerlaw_weights(exponent, lower, hi, first_)), sampler_(weights_) {}

double PowerLawDistribution::mean() const {
    double total = 0.0;
    double weighted = 0.0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        total += weights_[i];
        weighted += weights_[i] * static_cast<double>(first_ + i);
    }
    return weighted / total;
}

double fit_lower_cutoff(double exponent, std::size_t lo, std::size_t hi, double target_mean) {
    const double lo_mean = PowerLawDistribution(exponent, static_cast<double>(lo), hi).mean();
    if (!(target_mean >= lo_mean && target_mean <= static_cast<double>(hi))) {
        throw ParameterError("target_mean", "mean " + std::to_string(target_mean) +
                                                " is not reachable for a power law on [" + std::to_string(lo) +
                                                ", " + std::to_string(hi) + "]");
    }
    double a = static_cast<double>(lo);
    double b = static_cast<double>(hi);
    for (int iter = 0; iter < 100 && b - a > 1e-12; ++iter) {
        const double mid = 0.5 * (a + b);
        if (PowerLawDistribution(exponent, mid, hi).mean() < target_mean) {
            a = mid;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

std::vector<std::size_t> sample_powerlaw_sequence(std::size_t count, double exponent, std::size_t lo,
                                                  std::size_t hi, std::optional<double> target_mean, Rng& rng,
                                                  bool even_sum) {
    if (lo < 1) throw ParameterError("lo", "must be at least 1");
    if (lo > hi) throw ParameterError("hi", "must not be smaller than lo");
    const double lower = target_mean ? fit_lower_cutoff(exponent, lo, hi, *target_mean) : static_cast<double>(lo);
    const PowerLawDistribution dist(exponent, lower, hi);

    std::vector<std::size_t> values(count);
    for (auto& v : values) {
        v = dist.sample(rng);
    }
    if (even_sum && std::accumulate(values.begin(), values.end(), std::size_t{0}) % 2 == 1) {
        auto below = std::find_if(values.begin(), values.end(), [hi](std::size_t v) { return v < hi; });
        if (below != values.end()) {
            ++*below;
        } else {
            auto above = std::find_if(values.begin(), values.end(), [lo](std::size_t v) { return v > lo; });
            if (above == values.end()) {
                throw ParameterError("n", "cannot make the degree sum even when lo == hi is odd and n is odd");
            }
            --*above;
        }
    }
    return values;
}

Graph gen_cf(std::span<const std::size_t> degrees, Rng& rng) {
    const std::size_t n = degrees.size();
    std::vector<NodeId> stubs;
    for (NodeId v = 0; v < n; ++v) {
        if (degrees[v] >= std::max<std::size_t>(n, 1)) {
            throw ParameterError("degrees", "node degree must be smaller than n");
        }
        stubs.insert(stubs.end(), degrees[v], v);
    }
    if (stubs.size() % 2 != 0) {
        throw ParameterError("degrees", "degree sum must be even");
    }
    rng.shuffle(stubs);
    Graph g(n);
    for (std::size_t s = 0; s + 1 < stubs.size(); s += 2) {
        g.add_edge(stubs[s], stubs[s + 1]);
    }
    return g;
}

Graph gen_cf(const CfParams& params, Rng& rng) {
    validate(ThetaG{params});
    const auto degrees = sample_powerlaw_sequence(params.n, params.exponent, 1, params.k_max, params.k_avg, rng, true);
    return gen_cf(degrees, rng);
}

Graph gen_ba(std::size_t n, std::size_t m, Rng& rng) {
    validate(ThetaG{BaParams{n, m}});
    Graph g(n);
    // Every edge endpoint appears once, so a uniform draw from this list is a
    // degree-proportional draw over nodes.
    std::vector<NodeId> endpoints;
    for (NodeId i = 0; i <= m; ++i) {
        for (NodeId j = i + 1; j <= m; ++j) {
            g.add_edge(i, j);
            endpoints.push_back(i);
            endpoints.push_back(j);
        }
    }
    std::vector<NodeId> targets;
    for (NodeId v = static_cast<NodeId>(m + 1); v < n; ++v) {
        targets.clear();
        while (targets.size() < m) {
            const NodeId t = rng.pick(endpoints);
            if (std::find(targets.begin(), targets.end(), t) == targets.end()) {
                targets.push_back(t);
            }
        }
        for (NodeId t : targets) {
            g.add_edge(v, t);
            endpoints.push_back(v);
            endpoints.push_back(t);
        }
    }
    return g;
}

Graph gen_ff(std::size_t n, double p_fwd, double rp, Rng& rng) {
    validate(ThetaG{FfParams{n, p_fwd, rp}});
    Graph g(n);
    std::vector<char> burned(n, 0);
    std::vector<NodeId> touched;
    std::vector<NodeId> queue;
    std::vector<NodeId> fresh;
    for (NodeId v = 1; v < n; ++v) {
        const auto ambassador = static_cast<NodeId>(rng.index(v));
        g.add_edge(v, ambassador);
        burned[v] = 1;
        burned[ambassador] = 1;
        touched.assign({v, ambassador});
        queue.assign(1, ambassador);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const NodeId w = queue[head];
            const std::size_t want = rng.geometric(p_fwd) + rng.geometric(rp);
            if (want == 0) {
                continue;
            }
            fresh.clear();
            for (NodeId u : g.neighbors(w)) {
                if (!burned[u]) {
                    fresh.push_back(u);
                }
            }
            const std::size_t take = std::min(want, fresh.size());
            // Partial Fisher-Yates: the first `take` entries become a uniform sample.
            for (std::size_t t = 0; t < take; ++t) {
                std::swap(fresh[t], fresh[t + rng.index(fresh.size() - t)]);
                const NodeId u = fresh[t];
                burned[u] = 1;
                touched.push_back(u);
                queue.push_back(u);
                g.add_edge(v, u);
            }
        }
        for (NodeId u : touched) {
            burned[u] = 0;
        }
    }
    return g;
}

Graph gen_er(std::size_t n, double p, Rng& rng) {
    validate(ThetaG{ErParams{n, p}});
    Graph g(n);
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            if (rng.bernoulli(p)) {
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

std::pair<Graph, CommunityAssignment> gen_gn(const GnParams& params, Rng& rng) {
    validate(ThetaG{params});
    const std::size_t n = params.n;
    const std::size_t group_size = n / params.groups;
    const double p_out = params.between_probability();
    Graph g(n);
    CommunityAssignment truth(n, params.groups);
    for (NodeId i = 0; i < n; ++i) {
        truth.add(i, static_cast<CommunityId>(i / group_size));
    }
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            const double p = (i / group_size == j / group_size) ? params.p_in : p_out;
            if (rng.bernoulli(p)) {
                g.add_edge(i, j);
            }
        }
    }
    return {std::move(g), std::move(truth)};
}

Graph generate_start_graph(const ThetaG& theta, Rng& rng) {
    return std::visit(Overloaded{
                          [&](const CfParams& p) { return gen_cf(p, rng); },
                          [&](const BaParams& p) { return gen_ba(p.n, p.m, rng); },
                          [&](const FfParams& p) { return gen_ff(p.n, p.p_fwd, p.rp, rng); },
                          [&](const ErParams& p) { return gen_er(p.n, p.p, rng); },
                          [&](const GnParams& p) { return gen_gn(p, rng).first; },
                      },
                      theta);
}

} // namespace benchgen
