#include <benchgen/analysis.hpp>
#include <benchgen/error.hpp>
#include <benchgen/three_pass.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

namespace benchgen {
namespace {

constexpr AssignStrategy kAll[] = {AssignStrategy::lfr, AssignStrategy::cn, AssignStrategy::ne};

Graph star(std::size_t leaves) {
    Graph g(leaves + 1);
    for (NodeId v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph two_triangles() {
    Graph g(6);
    for (NodeId base : {0u, 3u}) {
        g.add_edge(base, base + 1);
        g.add_edge(base + 1, base + 2);
        g.add_edge(base, base + 2);
    }
    return g;
}

CommunityAssignment partition(std::size_t n, const std::vector<CommunityId>& labels, std::size_t k) {
    CommunityAssignment a(n, k);
    for (NodeId v = 0; v < n; ++v) a.add(v, labels[v]);
    return a;
}

void expect_valid(const CommunityAssignment& a, const std::vector<std::size_t>& sizes) {
    EXPECT_EQ(a.community_sizes(), sizes);
    for (NodeId v = 0; v < a.node_count(); ++v) EXPECT_EQ(a.memberships(v).size(), 1u);
}

TEST(CommunitySizes, Examples) {
    ThetaC t;
    t.c_min = t.c_max = 20;
    Rng rng(1);
    EXPECT_EQ(sample_community_sizes(40, t, rng), (std::vector<std::size_t>{20, 20}));
    EXPECT_EQ(sample_community_sizes(50, t, rng), (std::vector<std::size_t>{20, 30}));
}

TEST(CommunitySizes, PresetRangeAndSum) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed);
        const auto sizes = sample_community_sizes(1000, ThetaC{}, rng);
        EXPECT_EQ(std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}), 1000u);
        for (auto s : sizes) {
            EXPECT_GE(s, 20u);
            EXPECT_LT(s, 70u);
        }
    }
}

TEST(ThetaC, Validation) {
    ThetaC t;
    EXPECT_NO_THROW(t.validate(1000));
    t.mu = 1.2;
    EXPECT_THROW(t.validate(1000), ParameterError);
    t = ThetaC{};
    t.c_min = 1;
    EXPECT_THROW(t.validate(1000), ParameterError);
    t = ThetaC{};
    t.c_max = 2000;
    EXPECT_THROW(t.validate(1000), ParameterError);
}

TEST(Capacity, Rule) {
    EXPECT_TRUE(fits_capacity(3, 5, 0.5));
    EXPECT_FALSE(fits_capacity(2, 5, 0.5));
    EXPECT_TRUE(fits_capacity(7, 10, 0.3));
    EXPECT_FALSE(fits_capacity(6, 10, 0.3));
    EXPECT_TRUE(fits_capacity(1, 100, 1.0));
}

TEST(Assign, StarHubFitsSmallCommunities) {
    const Graph g = star(5);
    const std::vector<std::size_t> sizes{3, 3};
    for (auto s : kAll) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            Rng rng(seed);
            expect_valid(assign(s, g, sizes, 0.5, rng), sizes);
        }
    }
}

TEST(Assign, InfeasibleNodeIsReported) {
    const Graph g = star(5);
    const std::vector<std::size_t> sizes{3, 3};
    Rng rng(1);
    try {
        assign_lfr(g, sizes, 0.0, rng);
        FAIL();
    } catch (const ParameterError& e) {
        EXPECT_EQ(e.parameter(), "c_max");
    }
    const std::vector<std::size_t> short_sizes{3, 2};
    EXPECT_THROW(assign_ne(g, short_sizes, 0.5, rng), ParameterError);
}

TEST(Assign, MuOneIsUnconstrained) {
    Rng rng(2);
    const Graph g = generate_start_graph(CfParams{}, rng);
    const auto sizes = sample_community_sizes(1000, ThetaC{}, rng);
    for (auto s : kAll) expect_valid(assign(s, g, sizes, 1.0, rng), sizes);
}

TEST(Assign, PresetCfAtMuPointThree) {
    Rng rng(3);
    const Graph g = generate_start_graph(CfParams{}, rng);
    const auto sizes = sample_community_sizes(1000, ThetaC{}, rng);
    for (auto s : kAll) {
        const auto a = assign(s, g, sizes, 0.3, rng);
        expect_valid(a, sizes);
        for (NodeId v = 0; v < g.node_count(); ++v) {
            EXPECT_TRUE(fits_capacity(sizes[a.memberships(v)[0]], g.degree(v), 0.3));
        }
    }
}

TEST(CommonNeighbourWeights, AdditiveSmoothing) {
    Graph g(6);
    for (NodeId u : {1u, 2u, 3u}) g.add_edge(0, u);
    const CommunityId none = CommunityAssignment::kNone;
    const std::vector<CommunityId> placed{none, 0, 0, 0, none, none};
    const std::vector<std::size_t> sizes{10, 10};
    const std::vector<std::size_t> filled{3, 0};
    const auto w = cn_join_weights(g, 0, placed, sizes, filled, 1.0);
    ASSERT_EQ(w.size(), 2u);
    EXPECT_DOUBLE_EQ(w[0] / (w[0] + w[1]), 4.0 / 5.0);
    EXPECT_DOUBLE_EQ(w[1] / (w[0] + w[1]), 1.0 / 5.0);

    const std::vector<CommunityId> nobody(6, none);
    EXPECT_EQ(cn_join_weights(g, 0, nobody, sizes, filled, 1.0), (std::vector<double>{1.0, 1.0}));

    const std::vector<std::size_t> full{3, 0};
    EXPECT_EQ(cn_join_weights(g, 0, placed, full, filled, 1.0)[0], 0.0);
    // Degree 3 at mu 0 needs capacity 3.
    const std::vector<std::size_t> small_sizes{10, 2};
    EXPECT_EQ(cn_join_weights(g, 0, placed, small_sizes, filled, 0.0)[1], 0.0);
}

TEST(NeighbourExpansion, TriangleFillsOneCommunity) {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    const std::vector<std::size_t> sizes{3};
    Rng rng(1);
    expect_valid(assign_ne(g, sizes, 0.5, rng), sizes);
}

TEST(NeighbourExpansion, TwoTrianglesStaySeparate) {
    const Graph g = two_triangles();
    const std::vector<std::size_t> sizes{3, 3};
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Rng rng(seed);
        const auto a = assign_ne(g, sizes, 0.3, rng);
        EXPECT_TRUE(a.share_community(0, 1) && a.share_community(0, 2));
        EXPECT_TRUE(a.share_community(3, 4) && a.share_community(3, 5));
        EXPECT_FALSE(a.share_community(0, 3));
    }
}

TEST(Overlay, SatisfiedGraphIsUnchanged) {
    const Graph g = two_triangles();
    const auto a = partition(6, {0, 0, 0, 1, 1, 1}, 2);
    Rng rng(1);
    const auto r = overlay_rewire(g, a, 0.0, rng);
    EXPECT_EQ(r.graph, g);
    EXPECT_EQ(r.stats.rewired_total(), 0u);
}

TEST(Overlay, RealizedMixingIsAFixedPoint) {
    // K4 split in halves: every node has 1 within and 2 between edges.
    Graph g(4);
    for (NodeId i = 0; i < 4; ++i)
        for (NodeId j = i + 1; j < 4; ++j) g.add_edge(i, j);
    const auto a = partition(4, {0, 0, 1, 1}, 2);
    Rng rng(1);
    const auto r = overlay_rewire(g, a, 2.0 / 3.0, rng);
    EXPECT_EQ(r.graph, g);
    EXPECT_EQ(r.stats.rewired_total(), 0u);
}

TEST(Overlay, HandTracedBetweenEdgeRemoval) {
    // mu = 0: nodes 0, 2, 4, 5 each have one between edge and need one more
    // within edge, so 0-2 and 4-5 are added and both between edges dropped.
    Graph g(6);
    g.add_edge(0, 5);
    g.add_edge(2, 4);
    const auto a = partition(6, {0, 0, 0, 1, 1, 1}, 2);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(seed);
        const auto r = overlay_rewire(g, a, 0.0, rng);
        EXPECT_EQ(r.graph.edges(), (std::vector<Edge>{{0, 2}, {4, 5}}));
        EXPECT_EQ(r.stats.edges_added, 2u);
        EXPECT_EQ(r.stats.edges_removed, 2u);
    }
}

TEST(Overlay, LoneBetweenEdgeWithoutPartnersIsOnlyRemoved) {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(3, 4);
    g.add_edge(2, 5);
    const auto a = partition(6, {0, 0, 0, 1, 1, 1}, 2);
    Rng rng(1);
    const auto r = overlay_rewire(g, a, 0.0, rng);
    EXPECT_EQ(r.graph.edges(), (std::vector<Edge>{{0, 1}, {3, 4}}));
    EXPECT_EQ(r.stats.edges_added, 0u);
    EXPECT_EQ(r.stats.edges_removed, 1u);
}

TEST(Overlay, OutputIsSimpleAndCountsAddUp) {
    for (double mu : {0.1, 0.3, 0.6, 0.9}) {
        Rng rng(static_cast<std::uint64_t>(mu * 10));
        ThetaC theta;
        theta.mu = mu;
        const auto r = generate_three_pass(CfParams{}, theta, AssignStrategy::lfr, rng);
        EXPECT_EQ(r.graph.edge_count() + r.stats.edges_removed, r.start.edge_count() + r.stats.edges_added);
        std::size_t deg = 0;
        for (NodeId v = 0; v < r.graph.node_count(); ++v) {
            EXPECT_FALSE(r.graph.has_edge(v, v));
            deg += r.graph.degree(v);
        }
        EXPECT_EQ(deg, 2 * r.graph.edge_count());
    }
}

TEST(Overlay, ConvergesAtMuHalf) {
    Rng rng(5);
    ThetaC theta;
    theta.mu = 0.5;
    const auto r = generate_three_pass(CfParams{}, theta, AssignStrategy::lfr, rng);
    const auto mix = realized_mixing(r.graph, r.assignment);
    double dev = 0;
    std::size_t count = 0;
    for (std::size_t v = 0; v < mix.within_ratio.size(); ++v) {
        if (mix.isolated[v]) continue;
        dev += std::abs(mix.within_ratio[v] - 0.5);
        ++count;
    }
    EXPECT_LE(dev / static_cast<double>(count), 0.05);
}

TEST(ThreePass, PresetRunIsValidAndDeterministic) {
    Rng rng(1), again(1);
    const auto r = generate_three_pass(CfParams{}, ThetaC{}, AssignStrategy::lfr, rng);
    const auto s = generate_three_pass(CfParams{}, ThetaC{}, AssignStrategy::lfr, again);
    EXPECT_EQ(r.graph, s.graph);
    EXPECT_EQ(r.assignment, s.assignment);
    EXPECT_EQ(r.stats.rewired_total(), s.stats.rewired_total());
    EXPECT_TRUE(r.assignment.is_complete());
    EXPECT_FALSE(r.assignment.is_overlapping());
    EXPECT_EQ(r.graph.node_count(), 1000u);
}

TEST(ThreePass, NeighbourExpansionKeepsClustering) {
    double before = 0, after = 0;
    ThetaC theta;
    theta.mu = 0.2;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(seed);
        const auto r = generate_three_pass(FfParams{1000, 0.1, 0.0}, theta, AssignStrategy::ne, rng);
        before += clustering(r.start).average;
        after += clustering(r.graph).average;
    }
    EXPECT_GE(after, 0.5 * before);
}

TEST(ThreePass, StrategyNames) {
    for (auto s : kAll) EXPECT_EQ(parse_strategy(strategy_name(s)), s);
    EXPECT_FALSE(parse_strategy("louvain").has_value());
}

} // namespace
} // namespace benchgen
