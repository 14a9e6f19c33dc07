#pragma once

#include <benchgen/graph.hpp>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace benchgen {

using CommunityId = std::uint32_t;

/// Node-to-communities mapping, used both for planted ground truth and for
/// detected partitions. A node may belong to several communities.
///
/// Both directions are indexed: memberships(v) and members(c) are sorted.
/// The community a node joined first is remembered separately so that
/// overlapping covers can be reduced to a partition deterministically.
class CommunityAssignment {
public:
    static constexpr CommunityId kNone = std::numeric_limits<CommunityId>::max();

    /// community_count must be positive.
    CommunityAssignment(std::size_t node_count, std::size_t community_count);

    std::size_t node_count() const noexcept { return memberships_.size(); }
    std::size_t community_count() const noexcept { return members_.size(); }

    NodeId add_node();

    bool add(NodeId v, CommunityId c);
    bool remove(NodeId v, CommunityId c);
    bool contains(NodeId v, CommunityId c) const;

    std::span<const CommunityId> memberships(NodeId v) const;
    std::span<const NodeId> members(CommunityId c) const;
    std::size_t community_size(CommunityId c) const { return members(c).size(); }
    std::vector<std::size_t> community_sizes() const;

    /// The first community v joined that it still belongs to, or kNone.
    CommunityId first_membership(NodeId v) const;

    bool share_community(NodeId a, NodeId b) const;

    /// Every node has at least one membership.
    bool is_complete() const;
    bool is_overlapping() const;

    /// Equality compares memberships only; join order is not part of the value.
    bool operator==(const CommunityAssignment& other) const {
        return memberships_ == other.memberships_ && members_.size() == other.members_.size();
    }

private:
    void check(NodeId v, CommunityId c) const;

    std::vector<std::vector<CommunityId>> memberships_;
    std::vector<std::vector<NodeId>> members_;
    std::vector<CommunityId> first_;
};

} // namespace benchgen
