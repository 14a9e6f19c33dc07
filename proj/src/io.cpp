#include <benchgen/io.hpp>

#include <benchgen/error.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

namespace benchgen {
namespace {

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    return out;
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string() + " for reading");
    }
    return in;
}

/// Splits on `sep`, requiring every field to be a positive decimal integer.
std::vector<std::uint64_t> parse_ids(std::string_view text, char sep, const std::string& source, std::size_t line) {
    std::vector<std::uint64_t> ids;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find(sep, pos), text.size());
        const std::string_view field = text.substr(pos, end - pos);
        std::uint64_t value = 0;
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
            throw ParseError(source, line, "expected a positive integer, got '" + std::string(field) + "'");
        }
        if (value < 1 || value > std::numeric_limits<NodeId>::max()) {
            throw ParseError(source, line, "id " + std::string(field) + " out of range");
        }
        ids.push_back(value);
        pos = end + 1;
    }
    return ids;
}

std::string_view chomp(const std::string& line) {
    std::string_view v = line;
    if (!v.empty() && v.back() == '\r') {
        v.remove_suffix(1);
    }
    return v;
}

} // namespace

void write_edge_list(std::ostream& out, const Graph& g) {
    for (const auto& [i, j] : g.edges()) {
        out << i + 1 << '\t' << j + 1 << '\n';
    }
}

void write_edge_list(const std::filesystem::path& path, const Graph& g) {
    auto out = open_output(path);
    write_edge_list(out, g);
}

Graph read_edge_list(std::istream& in, std::optional<std::size_t> node_count, const std::string& source) {
    std::vector<std::pair<std::size_t, Edge>> edges;
    std::size_t max_id = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto text = chomp(line);
        if (text.empty()) {
            continue;
        }
        const auto ids = parse_ids(text, '\t', source, line_no);
        if (ids.size() != 2) {
            throw ParseError(source, line_no, "expected two tab-separated node ids");
        }
        if (ids[0] == ids[1]) {
            throw ParseError(source, line_no, "self-loop on node " + std::to_string(ids[0]));
        }
        const auto a = static_cast<NodeId>(ids[0] - 1);
        const auto b = static_cast<NodeId>(ids[1] - 1);
        edges.push_back({line_no, {a, b}});
        max_id = std::max<std::size_t>(max_id, std::max(ids[0], ids[1]));
    }
    const std::size_t n = node_count.value_or(max_id);
    if (max_id > n) {
        throw ParseError(source, 0, "node id " + std::to_string(max_id) + " exceeds node count " + std::to_string(n));
    }
    Graph g(n);
    for (const auto& [where, e] : edges) {
        if (!g.add_edge(e.first, e.second)) {
            throw ParseError(source, where,
                             "duplicate edge " + std::to_string(e.first + 1) + "-" + std::to_string(e.second + 1));
        }
    }
    return g;
}

Graph read_edge_list(const std::filesystem::path& path, std::optional<std::size_t> node_count) {
    auto in = open_input(path);
    return read_edge_list(in, node_count, path.string());
}

void write_membership(std::ostream& out, const CommunityAssignment& asg) {
    for (NodeId v = 0; v < asg.node_count(); ++v) {
        const auto m = asg.memberships(v);
        if (m.empty()) {
            throw std::invalid_argument("node " + std::to_string(v + 1) + " has no community");
        }
        out << v + 1 << '\t';
        for (std::size_t t = 0; t < m.size(); ++t) {
            out << (t ? " " : "") << m[t] + 1;
        }
        out << '\n';
    }
}

void write_membership(const std::filesystem::path& path, const CommunityAssignment& asg) {
    auto out = open_output(path);
    write_membership(out, asg);
}

CommunityAssignment read_membership(std::istream& in, const std::string& source) {
    std::vector<std::vector<CommunityId>> rows;
    std::vector<std::size_t> row_line;
    std::size_t max_community = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto text = chomp(line);
        if (text.empty()) {
            continue;
        }
        const std::size_t tab = text.find('\t');
        if (tab == std::string_view::npos || tab + 1 == text.size()) {
            throw ParseError(source, line_no, "node without communities");
        }
        const auto node = parse_ids(text.substr(0, tab), '\t', source, line_no).front();
        const auto communities = parse_ids(text.substr(tab + 1), ' ', source, line_no);
        if (node > rows.size()) {
            rows.resize(node);
            row_line.resize(node, 0);
        }
        if (row_line[node - 1] != 0) {
            throw ParseError(source, line_no, "node " + std::to_string(node) + " listed twice");
        }
        row_line[node - 1] = line_no;
        for (auto c : communities) {
            rows[node - 1].push_back(static_cast<CommunityId>(c - 1));
            max_community = std::max<std::size_t>(max_community, c);
        }
    }
    for (std::size_t v = 0; v < rows.size(); ++v) {
        if (row_line[v] == 0) {
            throw ParseError(source, 0, "missing line for node " + std::to_string(v + 1));
        }
    }
    if (rows.empty()) {
        throw ParseError(source, 0, "no nodes");
    }
    CommunityAssignment asg(rows.size(), max_community);
    for (NodeId v = 0; v < rows.size(); ++v) {
        for (auto c : rows[v]) {
            if (!asg.add(v, c)) {
                throw ParseError(source, row_line[v], "community " + std::to_string(c + 1) + " repeated");
            }
        }
    }
    return asg;
}

CommunityAssignment read_membership(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_membership(in, path.string());
}

std::string format_number(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) {
        throw std::runtime_error("format_number failed");
    }
    return std::string(buf, ptr);
}

} // namespace benchgen
