#include <benchgen/community_assignment.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace benchgen {

CommunityAssignment::CommunityAssignment(std::size_t node_count, std::size_t community_count)
    : memberships_(node_count), members_(community_count), first_(node_count, kNone) {
    if (community_count == 0) {
        throw std::invalid_argument("CommunityAssignment: community_count must be positive");
    }
}

void CommunityAssignment::check(NodeId v, CommunityId c) const {
    if (v >= memberships_.size()) {
        throw std::out_of_range("node id " + std::to_string(v) + " out of range");
    }
    if (c >= members_.size()) {
        throw std::out_of_range("community id " + std::to_string(c) + " out of range");
    }
}

NodeId CommunityAssignment::add_node() {
    memberships_.emplace_back();
    first_.push_back(kNone);
    return static_cast<NodeId>(memberships_.size() - 1);
}

bool CommunityAssignment::add(NodeId v, CommunityId c) {
    check(v, c);
    auto& mv = memberships_[v];
    auto pos = std::lower_bound(mv.begin(), mv.end(), c);
    if (pos != mv.end() && *pos == c) {
        return false;
    }
    mv.insert(pos, c);
    auto& mc = members_[c];
    mc.insert(std::lower_bound(mc.begin(), mc.end(), v), v);
    if (first_[v] == kNone) {
        first_[v] = c;
    }
    return true;
}

bool CommunityAssignment::remove(NodeId v, CommunityId c) {
    check(v, c);
    auto& mv = memberships_[v];
    auto pos = std::lower_bound(mv.begin(), mv.end(), c);
    if (pos == mv.end() || *pos != c) {
        return false;
    }
    mv.erase(pos);
    auto& mc = members_[c];
    mc.erase(std::lower_bound(mc.begin(), mc.end(), v));
    if (first_[v] == c) {
        first_[v] = mv.empty() ? kNone : mv.front();
    }
    return true;
}

bool CommunityAssignment::contains(NodeId v, CommunityId c) const {
    check(v, c);
    return std::binary_search(memberships_[v].begin(), memberships_[v].end(), c);
}

std::span<const CommunityId> CommunityAssignment::memberships(NodeId v) const {
    if (v >= memberships_.size()) {
        throw std::out_of_range("node id " + std::to_string(v) + " out of range");
    }
    return memberships_[v];
}

std::span<const NodeId> CommunityAssignment::members(CommunityId c) const {
    if (c >= members_.size()) {
        throw std::out_of_range("community id " + std::to_string(c) + " out of range");
    }
    return members_[c];
}

std::vector<std::size_t> CommunityAssignment::community_sizes() const {
    std::vector<std::size_t> sizes(members_.size());
    std::transform(members_.begin(), members_.end(), sizes.begin(), [](const auto& m) { return m.size(); });
    return sizes;
}

CommunityId CommunityAssignment::first_membership(NodeId v) const {
    if (v >= first_.size()) {
        throw std::out_of_range("node id " + std::to_string(v) + " out of range");
    }
    return first_[v];
}

bool CommunityAssignment::share_community(NodeId a, NodeId b) const {
    const auto ma = memberships(a);
    const auto mb = memberships(b);
    auto ia = ma.begin();
    auto ib = mb.begin();
    while (ia != ma.end() && ib != mb.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            return true;
        }
    }
    return false;
}

bool CommunityAssignment::is_complete() const {
    return std::none_of(memberships_.begin(), memberships_.end(), [](const auto& m) { return m.empty(); });
}

bool CommunityAssignment::is_overlapping() const {
    return std::any_of(memberships_.begin(), memberships_.end(), [](const auto& m) { return m.size() > 1; });
}

} // namespace benchgen
