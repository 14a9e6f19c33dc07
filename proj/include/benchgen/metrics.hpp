#pragma once

#include <benchgen/community_assignment.hpp>
#include <benchgen/graph.hpp>
#include <benchgen/random.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace benchgen {

/// Sparse contingency table n_ij = |A_i ∩ B_j| between two labelings of the
/// same nodes. Rows, columns and cells are kept in ascending label order.
class ContingencyTable {
public:
    struct Cell {
        std::uint32_t row;
        std::uint32_t col;
        std::size_t count;
    };

    ContingencyTable(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);

    std::size_t total() const noexcept { return total_; }
    const std::vector<Cell>& cells() const noexcept { return cells_; }
    /// Non-zero marginals as (label, count) pairs.
    const std::vector<std::pair<std::uint32_t, std::size_t>>& rows() const noexcept { return rows_; }
    const std::vector<std::pair<std::uint32_t, std::size_t>>& cols() const noexcept { return cols_; }

private:
    std::size_t total_;
    std::vector<Cell> cells_;
    std::vector<std::pair<std::uint32_t, std::size_t>> rows_;
    std::vector<std::pair<std::uint32_t, std::size_t>> cols_;
};

struct Score {
    double value = 0.0;
    bool degenerate = false;
};

/// Adjusted Rand index. When the chance-corrected denominator vanishes (both
/// partitions trivial, or fewer than two nodes) the partitions coincide and
/// the value is 1 with the degenerate flag set.
Score ari_score(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);

/// NMI with natural-log entropies, normalized by the arithmetic mean of the
/// two entropies. Both entropies zero gives 1 with the degenerate flag set.
Score nmi_score(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);

/// Labels of a non-overlapping, complete assignment. Throws
/// std::invalid_argument for overlapping or incomplete input.
std::vector<std::uint32_t> partition_labels(const CommunityAssignment& asg);

/// Each node keeps the first community it joined. Used to score overlapping
/// ground truth; callers must flag results computed this way.
std::vector<std::uint32_t> primary_labels(const CommunityAssignment& asg);

double ari(const CommunityAssignment& a, const CommunityAssignment& b);
double nmi(const CommunityAssignment& a, const CommunityAssignment& b);

/// Label propagation: each sweep visits the nodes in a fresh random order and
/// moves each one to the most common label among its neighbors (smallest
/// label on ties; isolated nodes keep theirs). Stops at a sweep with no
/// change or after max_iters sweeps. Labels are compacted in order of first
/// appearance by node id.
CommunityAssignment label_propagation(const Graph& g, Rng& rng, std::size_t max_iters = 100);

} // namespace benchgen
