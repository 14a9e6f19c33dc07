#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace benchgen {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Undirected simple graph over dense 0-based node ids.
///
/// Each adjacency list is kept sorted, so neighbor intersection is a linear
/// merge and iteration order is deterministic. Self-loops and parallel edges
/// are rejected by add_edge rather than stored.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t node_count) : adjacency_(node_count) {}

    std::size_t node_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    NodeId add_node();

    /// Returns false without mutating when i == j or the edge already exists.
    /// Throws std::out_of_range for ids >= node_count().
    bool add_edge(NodeId i, NodeId j);
    bool remove_edge(NodeId i, NodeId j);
    bool has_edge(NodeId i, NodeId j) const;

    std::size_t degree(NodeId v) const { return neighbors(v).size(); }
    std::span<const NodeId> neighbors(NodeId v) const;

    /// All edges with the smaller endpoint first, in lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& other) const = default;

private:
    void check_node(NodeId v) const;

    std::vector<std::vector<NodeId>> adjacency_;
    std::size_t edge_count_ = 0;
};

std::size_t common_neighbor_count(const Graph& g, NodeId i, NodeId j);

/// Maximal connected node sets, largest first; ties ordered by smallest member.
/// Each component lists its members in ascending order.
std::vector<std::vector<NodeId>> connected_components(const Graph& g);

} // namespace benchgen
