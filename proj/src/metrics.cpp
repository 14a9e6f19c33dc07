#include <benchgen/metrics.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace benchgen {
namespace {

std::vector<std::pair<std::uint32_t, std::size_t>> marginal(std::span<const std::uint32_t> labels) {
    std::map<std::uint32_t, std::size_t> counts;
    for (auto l : labels) {
        ++counts[l];
    }
    return {counts.begin(), counts.end()};
}

double pairs(std::size_t x) {
    return static_cast<double>(x) * static_cast<double>(x - (x > 0)) / 2.0;
}

} // namespace

ContingencyTable::ContingencyTable(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b)
    : total_(a.size()), rows_(marginal(a)), cols_(marginal(b)) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("ContingencyTable: labelings cover different node counts");
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> joint(a.size());
    for (std::size_t v = 0; v < a.size(); ++v) {
        joint[v] = {a[v], b[v]};
    }
    std::sort(joint.begin(), joint.end());
    for (std::size_t s = 0; s < joint.size();) {
        std::size_t e = s;
        while (e < joint.size() && joint[e] == joint[s]) {
            ++e;
        }
        cells_.push_back({joint[s].first, joint[s].second, e - s});
        s = e;
    }
}

Score ari_score(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
    const ContingencyTable table(a, b);
    // Pair counts are integers, exact in double at any realistic size, so the
    // quotient below is the correctly rounded ARI.
    double index = 0.0;
    for (const auto& cell : table.cells()) {
        index += pairs(cell.count);
    }
    double row_pairs = 0.0;
    for (const auto& [label, count] : table.rows()) {
        row_pairs += pairs(count);
    }
    double col_pairs = 0.0;
    for (const auto& [label, count] : table.cols()) {
        col_pairs += pairs(count);
    }
    const double all_pairs = pairs(table.total());
    // ARI * N(A+B)/2 - AB, scaled by 2N to stay in integers.
    const double numerator = 2.0 * (all_pairs * index - row_pairs * col_pairs);
    const double denominator = all_pairs * (row_pairs + col_pairs) - 2.0 * row_pairs * col_pairs;
    if (denominator == 0.0) {
        return {1.0, true};
    }
    return {numerator / denominator, false};
}

Score nmi_score(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
    const ContingencyTable table(a, b);
    const auto n = static_cast<double>(table.total());
    if (table.total() == 0) {
        return {1.0, true};
    }
    auto entropy = [n](const auto& marginals) {
        double h = 0.0;
        for (const auto& [label, count] : marginals) {
            const auto c = static_cast<double>(count);
            h += c / n * std::log(n / c);
        }
        return h;
    };
    const double ha = entropy(table.rows());
    const double hb = entropy(table.cols());
    if (ha == 0.0 && hb == 0.0) {
        return {1.0, true};
    }
    std::map<std::uint32_t, double> row_count;
    std::map<std::uint32_t, double> col_count;
    for (const auto& [label, count] : table.rows()) row_count[label] = static_cast<double>(count);
    for (const auto& [label, count] : table.cols()) col_count[label] = static_cast<double>(count);
    double mutual = 0.0;
    for (const auto& cell : table.cells()) {
        const auto c = static_cast<double>(cell.count);
        mutual += c / n * std::log(n * c / (row_count[cell.row] * col_count[cell.col]));
    }
    return {std::clamp(mutual / ((ha + hb) / 2.0), 0.0, 1.0), false};
}

std::vector<std::uint32_t> partition_labels(const CommunityAssignment& asg) {
    std::vector<std::uint32_t> labels(asg.node_count());
    for (NodeId v = 0; v < asg.node_count(); ++v) {
        const auto m = asg.memberships(v);
        if (m.size() != 1) {
            throw std::invalid_argument("node " + std::to_string(v + 1) + " has " + std::to_string(m.size()) +
                                        " communities; scoring needs a partition");
        }
        labels[v] = m.front();
    }
    return labels;
}

std::vector<std::uint32_t> primary_labels(const CommunityAssignment& asg) {
    std::vector<std::uint32_t> labels(asg.node_count());
    for (NodeId v = 0; v < asg.node_count(); ++v) {
        labels[v] = asg.first_membership(v);
        if (labels[v] == CommunityAssignment::kNone) {
            throw std::invalid_argument("node " + std::to_string(v + 1) + " has no community");
        }
    }
    return labels;
}

double ari(const CommunityAssignment& a, const CommunityAssignment& b) {
    return ari_score(partition_labels(a), partition_labels(b)).value;
}

double nmi(const CommunityAssignment& a, const CommunityAssignment& b) {
    return nmi_score(partition_labels(a), partition_labels(b)).value;
}

CommunityAssignment label_propagation(const Graph& g, Rng& rng, std::size_t max_iters) {
    const std::size_t n = g.node_count();
    std::vector<std::uint32_t> label(n);
    std::vector<NodeId> order(n);
    for (NodeId v = 0; v < n; ++v) {
        label[v] = v;
        order[v] = v;
    }
    std::vector<std::uint32_t> tally(n, 0);
    std::vector<std::uint32_t> seen;
    for (std::size_t iter = 0; iter < max_iters; ++iter) {
        rng.shuffle(order);
        bool changed = false;
        for (NodeId v : order) {
            const auto nbrs = g.neighbors(v);
            if (nbrs.empty()) {
                continue;
            }
            seen.clear();
            for (NodeId u : nbrs) {
                if (tally[label[u]]++ == 0) {
                    seen.push_back(label[u]);
                }
            }
            std::uint32_t best = label[v];
            std::uint32_t best_count = 0;
            for (auto l : seen) {
                if (tally[l] > best_count || (tally[l] == best_count && l < best)) {
                    best = l;
                    best_count = tally[l];
                }
                tally[l] = 0;
            }
            if (best != label[v]) {
                label[v] = best;
                changed = true;
            }
        }
        if (!changed) {
            break;
        }
    }

    std::vector<std::uint32_t> compact(n, CommunityAssignment::kNone);
    std::uint32_t next = 0;
    for (NodeId v = 0; v < n; ++v) {
        if (compact[label[v]] == CommunityAssignment::kNone) {
            compact[label[v]] = next++;
        }
    }
    CommunityAssignment out(n, std::max<std::uint32_t>(next, 1));
    for (NodeId v = 0; v < n; ++v) {
        out.add(v, compact[label[v]]);
    }
    return out;
}

} // namespace benchgen
