#include <benchgen/graph.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace benchgen {

void Graph::check_node(NodeId v) const {
    if (v >= adjacency_.size()) {
        throw std::out_of_range("node id " + std::to_string(v) + " out of range for graph with " +
                                std::to_string(adjacency_.size()) + " nodes");
    }
}

NodeId Graph::add_node() {
    adjacency_.emplace_back();
    return static_cast<NodeId>(adjacency_.size() - 1);
}

bool Graph::add_edge(NodeId i, NodeId j) {
    check_node(i);
    check_node(j);
    if (i == j) {
        return false;
    }
    auto& ai = adjacency_[i];
    auto pos = std::lower_bound(ai.begin(), ai.end(), j);
    if (pos != ai.end() && *pos == j) {
        return false;
    }
    ai.insert(pos, j);
    auto& aj = adjacency_[j];
    aj.insert(std::lower_bound(aj.begin(), aj.end(), i), i);
    ++edge_count_;
    return true;
}

bool Graph::remove_edge(NodeId i, NodeId j) {
    check_node(i);
    check_node(j);
    auto& ai = adjacency_[i];
    auto pos = std::lower_bound(ai.begin(), ai.end(), j);
    if (pos == ai.end() || *pos != j) {
        return false;
    }
    ai.erase(pos);
    auto& aj = adjacency_[j];
    aj.erase(std::lower_bound(aj.begin(), aj.end(), i));
    --edge_count_;
    return true;
}

bool Graph::has_edge(NodeId i, NodeId j) const {
    check_node(i);
    check_node(j);
    // Search the shorter list.
    const auto& a = adjacency_[i].size() <= adjacency_[j].size() ? adjacency_[i] : adjacency_[j];
    const NodeId target = &a == &adjacency_[i] ? j : i;
    return std::binary_search(a.begin(), a.end(), target);
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
    check_node(v);
    return adjacency_[v];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (NodeId i = 0; i < adjacency_.size(); ++i) {
        for (NodeId j : adjacency_[i]) {
            if (i < j) {
                out.emplace_back(i, j);
            }
        }
    }
    return out;
}

std::size_t common_neighbor_count(const Graph& g, NodeId i, NodeId j) {
    const auto a = g.neighbors(i);
    const auto b = g.neighbors(j);
    std::size_t count = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++count;
            ++ia;
            ++ib;
        }
    }
    return count;
}

std::vector<std::vector<NodeId>> connected_components(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<NodeId>> components;
    std::vector<NodeId> queue;
    for (NodeId s = 0; s < n; ++s) {
        if (seen[s]) {
            continue;
        }
        queue.assign(1, s);
        seen[s] = true;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (NodeId u : g.neighbors(queue[head])) {
                if (!seen[u]) {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        std::sort(queue.begin(), queue.end());
        components.push_back(queue);
    }
    // Components were discovered in order of smallest member, so a stable
    // sort by size leaves ties in that order.
    std::stable_sort(components.begin(), components.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    return components;
}

} // namespace benchgen
