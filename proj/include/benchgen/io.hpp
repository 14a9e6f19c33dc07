#pragma once

#include <benchgen/community_assignment.hpp>
#include <benchgen/graph.hpp>

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace benchgen {

// File formats use 1-based node and community ids; everything in memory is 0-based.
//
// Edge list: one "i<TAB>j" line per undirected edge, i < j, lines sorted
// numerically. Membership: one "v<TAB>c1 c2 ..." line per node with sorted
// community ids.

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list(const std::filesystem::path& path, const Graph& g);

/// Accepts either endpoint order. Rejects non-integer fields, ids < 1,
/// self-loops and repeated edges with a ParseError carrying the line number.
/// The node count is the largest id seen, or node_count when given (which
/// keeps trailing isolated nodes).
Graph read_edge_list(std::istream& in, std::optional<std::size_t> node_count = std::nullopt,
                     const std::string& source = "<edge list>");
Graph read_edge_list(const std::filesystem::path& path, std::optional<std::size_t> node_count = std::nullopt);

void write_membership(std::ostream& out, const CommunityAssignment& asg);
void write_membership(const std::filesystem::path& path, const CommunityAssignment& asg);

/// Every node 1..max id must have exactly one line with at least one
/// community; the community count is the largest community id seen.
CommunityAssignment read_membership(std::istream& in, const std::string& source = "<membership>");
CommunityAssignment read_membership(const std::filesystem::path& path);

/// Shortest decimal text that parses back to the same double.
std::string format_number(double value);

} // namespace benchgen
