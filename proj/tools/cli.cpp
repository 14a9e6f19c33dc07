#include "cli.hpp"

#include <benchgen/analysis.hpp>
#include <benchgen/classic_models.hpp>
#include <benchgen/error.hpp>
#include <benchgen/io.hpp>
#include <benchgen/metrics.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace benchgen::cli {
namespace {

using nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr const char* kToolName = "benchgen";
constexpr const char* kFormatVersion = "1";

const std::vector<std::string> kFarzOptions{"n", "m", "k", "alpha", "beta", "gamma", "phi", "r", "q", "eps"};
const std::vector<std::string> kThetaCOptions{"mu", "size-exp", "cmin", "cmax"};
const std::map<std::string, std::vector<std::string>> kStartOptions{
    {"cf", {"n", "kavg", "kmax", "deg-exp"}},
    {"ba", {"n", "m-ba"}},
    {"ff", {"n", "p-fwd", "rp"}},
    {"er", {"n", "p"}},
    {"gn", {"n", "groups", "p-in", "p-out"}},
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, sep)) {
        parts.push_back(part);
    }
    return parts;
}

/// Model parameters as given on the command line. Values stay at their
/// preset defaults unless the matching option was passed.
struct ModelFlags {
    std::string model;
    std::string start = "cf";
    std::string assign = "lfr";

    FarzParams farz;
    ThetaC theta_c;
    CfParams cf;
    BaParams ba;
    FfParams ff;
    ErParams er;
    GnParams gn;
    std::size_t n = 0;
    double p_out = 0.0;

    std::map<std::string, CLI::Option*> options;

    void add_to(CLI::App& app, bool sweep) {
        auto add = [&](const std::string& name, auto& target, const std::string& help) {
            options[name] = app.add_option("--" + name, target, help);
        };
        add("n", n, "Node count");
        add("m", farz.m, "FARZ: connection attempts per step");
        add("k", farz.k, "FARZ: number of communities");
        add("alpha", farz.alpha, "FARZ: common-neighbour exponent");
        add("beta", farz.beta, "FARZ: probability of within-community edges");
        add("gamma", farz.gamma, "FARZ: degree-similarity exponent");
        add("phi", farz.phi, "FARZ: community-size smoothing");
        add("r", farz.r, "FARZ: memberships per overlapping node");
        add("q", farz.q, "FARZ: fraction of overlapping nodes");
        add("eps", farz.epsilon, "FARZ: baseline edge weight");
        options["start"] = app.add_option("--start", start, "3pass: start model (cf, ba, ff, er, gn)")
                               ->check(CLI::IsMember({"cf", "ba", "ff", "er", "gn"}));
        if (sweep) {
            options["assign"] =
                app.add_option("--assign", assign, "3pass: comma-separated assignment strategies (lfr, cn, ne)");
        } else {
            options["assign"] = app.add_option("--assign", assign, "3pass: assignment strategy")
                                    ->check(CLI::IsMember({"lfr", "cn", "ne"}));
        }
        add("mu", theta_c.mu, "3pass: target mixing");
        add("size-exp", theta_c.size_exponent, "3pass: community-size power-law exponent");
        add("cmin", theta_c.c_min, "3pass: minimum community size");
        add("cmax", theta_c.c_max, "3pass: maximum community size");
        add("kavg", cf.k_avg, "CF: target average degree");
        add("kmax", cf.k_max, "CF: maximum degree");
        add("deg-exp", cf.exponent, "CF: degree power-law exponent");
        add("m-ba", ba.m, "BA: edges per new node");
        add("p-fwd", ff.p_fwd, "FF: forward burning probability");
        add("rp", ff.rp, "FF: backward burning probability");
        add("p", er.p, "ER: edge probability");
        add("groups", gn.groups, "GN: number of equal groups");
        add("p-in", gn.p_in, "GN: within-group edge probability");
        add("p-out", p_out, "GN: between-group edge probability (default p-in/8)");
    }

    bool given(const std::string& name) const { return options.at(name)->count() > 0; }

    /// Rejects options that do not apply to the selected model.
    void check_applicable() const {
        std::set<std::string> allowed{"start", "assign"};
        if (model == "farz") {
            allowed = {kFarzOptions.begin(), kFarzOptions.end()};
        } else if (model == "3pass") {
            allowed.insert(kThetaCOptions.begin(), kThetaCOptions.end());
            const auto& extra = kStartOptions.at(start);
            allowed.insert(extra.begin(), extra.end());
        } else {
            const auto& extra = kStartOptions.at(model);
            allowed = {extra.begin(), extra.end()};
        }
        for (const auto& [name, opt] : options) {
            if (opt->count() > 0 && !allowed.contains(name)) {
                throw UsageError("option --" + name + " does not apply to model '" + model +
                                 (model == "3pass" ? "' with start '" + start + "'" : "'"));
            }
        }
    }

    FarzParams farz_params() const {
        FarzParams p = farz;
        if (given("n")) p.n = n;
        return p;
    }

    ThetaG theta_g(const std::string& which) const {
        auto with_n = [&](auto params) {
            if (given("n")) params.n = n;
            return params;
        };
        if (which == "cf") return with_n(cf);
        if (which == "ba") return with_n(ba);
        if (which == "ff") return with_n(ff);
        if (which == "er") return with_n(er);
        GnParams g = with_n(gn);
        if (given("p-out")) g.p_out = p_out;
        return g;
    }

    std::vector<AssignStrategy> strategies() const {
        std::vector<AssignStrategy> out;
        for (const auto& name : split(assign, ',')) {
            const auto s = parse_strategy(name);
            if (!s) {
                throw UsageError("unknown assignment strategy '" + name + "' (expected lfr, cn or ne)");
            }
            out.push_back(*s);
        }
        if (out.empty()) {
            throw UsageError("--assign needs at least one strategy");
        }
        return out;
    }
};

ordered_json to_json(const FarzParams& p) {
    return {{"n", p.n},       {"m", p.m},     {"k", p.k},         {"alpha", p.alpha},
            {"beta", p.beta}, {"gamma", p.gamma}, {"phi", p.phi}, {"r", p.r},
            {"q", p.q},       {"epsilon", p.epsilon}};
}

ordered_json to_json(const ThetaC& t) {
    return {{"mu", t.mu}, {"size_exponent", t.size_exponent}, {"c_min", t.c_min}, {"c_max", t.c_max}};
}

ordered_json to_json(const ThetaG& theta) {
    ordered_json j{{"model", model_name(theta)}};
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            j["n"] = p.n;
            if constexpr (std::is_same_v<T, CfParams>) {
                j["k_avg"] = p.k_avg;
                j["k_max"] = p.k_max;
                j["exponent"] = p.exponent;
            } else if constexpr (std::is_same_v<T, BaParams>) {
                j["m_ba"] = p.m;
            } else if constexpr (std::is_same_v<T, FfParams>) {
                j["p_fwd"] = p.p_fwd;
                j["rp"] = p.rp;
            } else if constexpr (std::is_same_v<T, ErParams>) {
                j["p_edge"] = p.p;
            } else {
                j["groups"] = p.groups;
                j["p_in"] = p.p_in;
                j["p_out"] = p.between_probability();
            }
        },
        theta);
    return j;
}

ordered_json to_json(const RewireStats& s) {
    return {{"edges_added", s.edges_added}, {"edges_removed", s.edges_removed}, {"rewired_total", s.rewired_total()}};
}

ordered_json header(const std::string& command, const std::vector<std::string>& args) {
    return {{"tool", kToolName}, {"format_version", kFormatVersion}, {"command", command}, {"arguments", args}};
}

void write_json(const fs::path& path, const ordered_json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out << j.dump(2) << '\n';
}

fs::path with_suffix(const std::string& prefix, const char* suffix) { return fs::path(prefix + suffix); }

double coefficient_of_variation(const std::vector<std::size_t>& sizes) {
    if (sizes.empty()) {
        return 0.0;
    }
    double mean = 0.0;
    for (auto s : sizes) mean += static_cast<double>(s);
    mean /= static_cast<double>(sizes.size());
    if (mean == 0.0) {
        return 0.0;
    }
    double var = 0.0;
    for (auto s : sizes) var += (static_cast<double>(s) - mean) * (static_cast<double>(s) - mean);
    return std::sqrt(var / static_cast<double>(sizes.size())) / mean;
}

// ---------------------------------------------------------------- generate

struct Generated {
    Graph graph;
    std::optional<CommunityAssignment> truth;
    ordered_json details;
};

Generated generate_model(const ModelFlags& flags, const std::string& strategy_name, std::uint64_t seed) {
    Rng rng(seed);
    if (flags.model == "farz") {
        const auto params = flags.farz_params();
        auto result = farz_generate(params, rng);
        ordered_json details{{"params", to_json(params)}, {"skipped_connections", result.skipped_connections}};
        return {std::move(result.graph), std::move(result.assignment), std::move(details)};
    }
    if (flags.model == "3pass") {
        const auto theta_g = flags.theta_g(flags.start);
        const auto strategy = parse_strategy(strategy_name);
        if (!strategy) {
            throw UsageError("unknown assignment strategy '" + strategy_name + "'");
        }
        auto result = generate_three_pass(theta_g, flags.theta_c, *strategy, rng);
        ordered_json details{{"start", to_json(theta_g)},
                             {"assign", strategy_name},
                             {"theta_c", to_json(flags.theta_c)},
                             {"start_edge_count", result.start.edge_count()},
                             {"community_sizes", result.assignment.community_sizes()},
                             {"rewire_stats", to_json(result.stats)}};
        return {std::move(result.graph), std::move(result.assignment), std::move(details)};
    }
    const auto theta_g = flags.theta_g(flags.model);
    ordered_json details{{"params", to_json(theta_g)}};
    if (flags.model == "gn") {
        auto [graph, truth] = gen_gn(std::get<GnParams>(theta_g), rng);
        return {std::move(graph), std::move(truth), std::move(details)};
    }
    return {generate_start_graph(theta_g, rng), std::nullopt, std::move(details)};
}

int cmd_generate(const ModelFlags& flags, std::uint64_t seed, const std::string& prefix,
                 const std::vector<std::string>& args, std::ostream& out) {
    flags.check_applicable();
    auto generated = generate_model(flags, flags.assign, seed);
    const auto edges_path = with_suffix(prefix, ".edges");
    const auto membership_path = with_suffix(prefix, ".membership");
    write_edge_list(edges_path, generated.graph);

    ordered_json j = header("generate", args);
    j["model"] = flags.model;
    j["seed"] = seed;
    for (auto& [key, value] : generated.details.items()) {
        j[key] = value;
    }
    j["node_count"] = generated.graph.node_count();
    j["edge_count"] = generated.graph.edge_count();
    j["files"] = {{"edges", edges_path.filename().string()}};
    if (generated.truth) {
        write_membership(membership_path, *generated.truth);
        j["files"]["membership"] = membership_path.filename().string();
        j["community_count"] = generated.truth->community_count();
        j["overlapping"] = generated.truth->is_overlapping();
    }
    const auto json_path = with_suffix(prefix, ".json");
    write_json(json_path, j);
    out << "wrote " << edges_path.string();
    if (generated.truth) out << ", " << membership_path.string();
    out << ", " << json_path.string() << '\n';
    return kSuccess;
}

// ----------------------------------------------------------------- analyze

ordered_json histogram_json(const DegreeHistogram& h) {
    ordered_json j = ordered_json::object();
    for (const auto& [degree, count] : h) {
        j[std::to_string(degree)] = count;
    }
    return j;
}

int cmd_analyze(const std::string& graph_path, const std::string& membership_path, std::optional<std::size_t> n,
                std::optional<std::size_t> samples, std::uint64_t seed, std::string prefix,
                const std::vector<std::string>& args, std::ostream& out) {
    std::optional<CommunityAssignment> asg;
    if (!membership_path.empty()) {
        asg = read_membership(fs::path(membership_path));
        if (!n) n = asg->node_count();
    }
    const Graph g = read_edge_list(fs::path(graph_path), n);
    if (asg && asg->node_count() != g.node_count()) {
        throw ParameterError("membership", "covers " + std::to_string(asg->node_count()) +
                                               " nodes but the graph has " + std::to_string(g.node_count()));
    }
    if (!samples) samples = default_path_sample_size(g.node_count());
    Rng rng(seed);
    const auto report = analyze(g, asg ? &*asg : nullptr, samples, rng);

    if (prefix.empty()) {
        prefix = (fs::path(graph_path).parent_path() / fs::path(graph_path).stem()).string() + ".properties";
    }
    ordered_json j = header("analyze", args);
    j["seed"] = seed;
    j["inputs"] = {{"edges", graph_path}, {"membership", membership_path}};
    j["node_count"] = report.node_count;
    j["edge_count"] = report.edge_count;
    j["avg_degree"] = report.avg_degree;
    j["avg_clustering"] = report.avg_clustering;
    j["degree_assortativity"] = report.degree_assortativity.value;
    j["assortativity_degenerate"] = report.degree_assortativity.degenerate;
    if (report.avg_shortest_path) {
        j["avg_shortest_path"] = report.avg_shortest_path->mean;
        j["path_component_size"] = report.avg_shortest_path->component_size;
        j["path_sources"] = report.avg_shortest_path->sources;
    } else {
        j["avg_shortest_path"] = nullptr;
    }
    j["degree_histogram"] = histogram_json(report.degree_histogram);
    j["per_node_clustering"] = report.per_node_clustering;
    if (report.realized_mixing) {
        j["mean_within_ratio"] = report.realized_mixing->mean();
        j["realized_mixing_per_node"] = report.realized_mixing->within_ratio;
        ordered_json hists = ordered_json::array();
        for (const auto& h : report.per_community_degree_histograms) hists.push_back(histogram_json(h));
        j["per_community_degree_histograms"] = std::move(hists);
    }
    const auto json_path = with_suffix(prefix, ".json");
    write_json(json_path, j);

    const auto csv_path = with_suffix(prefix, ".csv");
    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv) throw std::runtime_error("cannot open " + csv_path.string() + " for writing");
    csv << "node,degree,clustering,within_ratio,communities\n";
    for (NodeId v = 0; v < g.node_count(); ++v) {
        csv << v + 1 << ',' << g.degree(v) << ',' << format_number(report.per_node_clustering[v]) << ',';
        if (report.realized_mixing && !report.realized_mixing->isolated[v]) {
            csv << format_number(report.realized_mixing->within_ratio[v]);
        }
        csv << ',';
        if (asg) {
            const auto m = asg->memberships(v);
            for (std::size_t t = 0; t < m.size(); ++t) csv << (t ? " " : "") << m[t] + 1;
        }
        csv << '\n';
    }
    out << "wrote " << json_path.string() << ", " << csv_path.string() << '\n';
    return kSuccess;
}

// ----------------------------------------------------------------- compare

struct Agreement {
    double ari = 0.0;
    double nmi = 0.0;
    bool overlap_reduced = false;
};

Agreement score(const CommunityAssignment& a, const CommunityAssignment& b) {
    if (a.node_count() != b.node_count()) {
        throw ParameterError("membership", "assignments cover " + std::to_string(a.node_count()) + " and " +
                                               std::to_string(b.node_count()) + " nodes");
    }
    Agreement s;
    s.overlap_reduced = a.is_overlapping() || b.is_overlapping();
    const auto la = primary_labels(a);
    const auto lb = primary_labels(b);
    s.ari = ari_score(la, lb).value;
    s.nmi = nmi_score(la, lb).value;
    return s;
}

int cmd_compare(const std::string& first, const std::string& second, const std::string& detect_graph,
                std::size_t max_iters, std::uint64_t seed, const std::string& out_path,
                const std::vector<std::string>& args, std::ostream& out) {
    if (second.empty() == detect_graph.empty()) {
        throw UsageError("compare needs either a second membership file or --detect GRAPH");
    }
    const auto truth = read_membership(fs::path(first));
    ordered_json j = header("compare", args);
    j["first"] = first;
    std::optional<CommunityAssignment> other;
    if (!second.empty()) {
        other = read_membership(fs::path(second));
        j["second"] = second;
    } else {
        const Graph g = read_edge_list(fs::path(detect_graph), truth.node_count());
        Rng rng(seed);
        other = label_propagation(g, rng, max_iters);
        j["detected_on"] = detect_graph;
        j["detector"] = "label_propagation";
        j["seed"] = seed;
        j["detected_communities"] = other->community_count();
    }
    const auto s = score(truth, *other);
    j["ari"] = s.ari;
    j["nmi"] = s.nmi;
    j["overlap_reduced"] = s.overlap_reduced;
    const std::string text = j.dump(2);
    out << text << '\n';
    if (!out_path.empty()) write_json(out_path, j);
    return kSuccess;
}

// ------------------------------------------------------------------- sweep

const std::vector<std::string> kSweepColumns{
    "model",          "param",        "value",        "replicate",     "seed",        "n",
    "m",              "k",            "alpha",        "beta",          "gamma",       "phi",
    "r",              "q",            "epsilon",      "start",         "start_params", "assign",
    "mu",             "size_exponent", "c_min",       "c_max",         "edge_count",  "skipped_connections",
    "avg_degree",     "avg_clustering", "assortativity", "avg_path",   "mean_mixing", "community_size_cv",
    "rewired_total",  "ari",          "nmi",          "overlap_reduced"};

std::size_t as_count(const std::string& param, double value) {
    if (!(value >= 1.0) || std::floor(value) != value) {
        throw ParameterError(param, "sweep value " + format_number(value) + " must be a positive integer");
    }
    return static_cast<std::size_t>(value);
}

struct SweepJob {
    double value;
    std::size_t replicate;
    std::string strategy;
};

std::string start_params_text(const ThetaG& theta) {
    std::string text;
    const auto params = to_json(theta);
    for (const auto& [key, value] : params.items()) {
        if (key == "model") continue;
        if (!text.empty()) text += ';';
        text += key + '=' + (value.is_number_float() ? format_number(value.get<double>()) : value.dump());
    }
    return text;
}

std::string sweep_row(const ModelFlags& base, const std::string& param, const SweepJob& job, std::uint64_t seed,
                      bool detect, std::size_t max_iters) {
    ModelFlags flags = base;
    std::map<std::string, std::string> row;
    if (flags.model == "farz") {
        if (param == "beta") flags.farz.beta = job.value;
        else if (param == "k") flags.farz.k = as_count(param, job.value);
        else if (param == "m") flags.farz.m = as_count(param, job.value);
        else if (param == "phi") flags.farz.phi = job.value;
        else if (param == "q") flags.farz.q = job.value;
        else if (param == "gamma") flags.farz.gamma = job.value;
    } else {
        flags.theta_c.mu = job.value;
    }
    auto generated = generate_model(flags, job.strategy, seed);
    const Graph& g = generated.graph;

    row["model"] = flags.model;
    row["param"] = param;
    row["value"] = format_number(job.value);
    row["replicate"] = std::to_string(job.replicate);
    row["seed"] = std::to_string(seed);
    if (flags.model == "farz") {
        const auto p = flags.farz_params();
        row["n"] = std::to_string(p.n);
        row["m"] = std::to_string(p.m);
        row["k"] = std::to_string(p.k);
        row["alpha"] = format_number(p.alpha);
        row["beta"] = format_number(p.beta);
        row["gamma"] = format_number(p.gamma);
        row["phi"] = format_number(p.phi);
        row["r"] = std::to_string(p.r);
        row["q"] = format_number(p.q);
        row["epsilon"] = format_number(p.epsilon);
        row["skipped_connections"] = std::to_string(generated.details["skipped_connections"].get<std::size_t>());
    } else {
        const auto theta_g = flags.theta_g(flags.start);
        row["n"] = std::to_string(node_count(theta_g));
        row["start"] = flags.start;
        row["start_params"] = start_params_text(theta_g);
        row["assign"] = job.strategy;
        row["mu"] = format_number(flags.theta_c.mu);
        row["size_exponent"] = format_number(flags.theta_c.size_exponent);
        row["c_min"] = std::to_string(flags.theta_c.c_min);
        row["c_max"] = std::to_string(flags.theta_c.c_max);
        row["rewired_total"] =
            std::to_string(generated.details["rewire_stats"]["rewired_total"].get<std::size_t>());
    }
    row["edge_count"] = std::to_string(g.edge_count());

    Rng rng(seed);
    const auto report = analyze(g, &*generated.truth, default_path_sample_size(g.node_count()), rng);
    row["avg_degree"] = format_number(report.avg_degree);
    row["avg_clustering"] = format_number(report.avg_clustering);
    row["assortativity"] = format_number(report.degree_assortativity.value);
    row["avg_path"] = report.avg_shortest_path ? format_number(report.avg_shortest_path->mean) : "";
    row["mean_mixing"] = format_number(1.0 - report.realized_mixing->mean());
    row["community_size_cv"] = format_number(coefficient_of_variation(generated.truth->community_sizes()));
    if (detect) {
        const auto detected = label_propagation(g, rng, max_iters);
        const auto s = score(*generated.truth, detected);
        row["ari"] = format_number(s.ari);
        row["nmi"] = format_number(s.nmi);
        row["overlap_reduced"] = s.overlap_reduced ? "1" : "0";
    }

    std::string line;
    for (std::size_t c = 0; c < kSweepColumns.size(); ++c) {
        if (c) line += ',';
        line += row[kSweepColumns[c]];
    }
    return line;
}

int cmd_sweep(const ModelFlags& flags, const std::string& param, const std::string& values_text,
              std::size_t replicates, std::uint64_t seed, const std::string& detector, std::size_t max_iters,
              std::size_t threads, const std::string& prefix, const std::vector<std::string>& args,
              std::ostream& out) {
    static const std::set<std::string> farz_params{"beta", "k", "m", "phi", "q", "gamma"};
    if (flags.model == "farz" ? !farz_params.contains(param) : param != "mu") {
        throw UsageError("cannot sweep '" + param + "' for model " + flags.model + " (farz: beta, k, m, phi, q, " +
                         "gamma; 3pass: mu)");
    }
    if (!detector.empty() && detector != "lpa") {
        throw UsageError("unknown detector '" + detector + "' (expected lpa)");
    }
    if (replicates == 0) {
        throw UsageError("--replicates must be positive");
    }
    flags.check_applicable();
    if (flags.given(param == "eps" ? "eps" : param)) {
        throw UsageError("--" + param + " is the swept parameter; pass its values with --values");
    }
    const auto values = parse_values(values_text);
    std::vector<std::string> strategies{""};
    if (flags.model == "3pass") {
        strategies.clear();
        for (auto s : flags.strategies()) strategies.emplace_back(strategy_name(s));
    }

    std::vector<SweepJob> jobs;
    for (const auto& strategy : strategies) {
        for (double v : values) {
            for (std::size_t rep = 0; rep < replicates; ++rep) {
                jobs.push_back({v, rep, strategy});
            }
        }
    }
    // Workers fill fixed slots, so row order never depends on scheduling.
    std::vector<std::string> rows(jobs.size());
    std::vector<std::exception_ptr> failures(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            try {
                rows[i] = sweep_row(flags, param, jobs[i], seed + jobs[i].replicate, !detector.empty(), max_iters);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    const std::size_t workers = std::clamp<std::size_t>(threads, 1, jobs.size());
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(worker);
        worker();
    }
    for (const auto& failure : failures) {
        if (failure) std::rethrow_exception(failure);
    }

    const auto csv_path = with_suffix(prefix, ".csv");
    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv) throw std::runtime_error("cannot open " + csv_path.string() + " for writing");
    for (std::size_t c = 0; c < kSweepColumns.size(); ++c) csv << (c ? "," : "") << kSweepColumns[c];
    csv << '\n';
    for (const auto& row : rows) csv << row << '\n';

    ordered_json j = header("sweep", args);
    j["model"] = flags.model;
    j["param"] = param;
    j["values"] = values;
    j["replicates"] = replicates;
    j["base_seed"] = seed;
    j["seed_rule"] = "base_seed + replicate";
    j["detector"] = detector.empty() ? ordered_json(nullptr) : ordered_json(detector);
    if (flags.model == "farz") {
        j["params"] = to_json(flags.farz_params());
    } else {
        j["start"] = to_json(flags.theta_g(flags.start));
        j["assign"] = strategies;
        j["theta_c"] = to_json(flags.theta_c);
    }
    j["columns"] = kSweepColumns;
    j["rows"] = rows.size();
    write_json(with_suffix(prefix, ".json"), j);
    out << "wrote " << rows.size() << " rows to " << csv_path.string() << '\n';
    return kSuccess;
}

} // namespace

std::uint64_t default_seed() {
    if (const char* env = std::getenv(kSeedEnv); env && *env) {
        std::uint64_t value = 0;
        const std::string_view text(env);
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || ptr != text.data() + text.size()) {
            throw UsageError(std::string(kSeedEnv) + " must be an unsigned integer, got '" + env + "'");
        }
        return value;
    }
    return 42;
}

std::vector<double> parse_values(const std::string& text) {
    auto number = [&](const std::string& s) {
        try {
            std::size_t used = 0;
            const double v = std::stod(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw UsageError("invalid number '" + s + "' in --values");
        }
    };
    std::vector<double> values;
    if (text.find(':') != std::string::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3) throw UsageError("range must be start:stop:step");
        const double start = number(parts[0]);
        const double stop = number(parts[1]);
        const double step = number(parts[2]);
        if (!(step > 0.0) || stop < start) throw UsageError("range needs step > 0 and stop >= start");
        const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
        for (std::size_t i = 0; i < count; ++i) {
            values.push_back(std::round((start + static_cast<double>(i) * step) * 1e12) / 1e12);
        }
    } else {
        for (const auto& part : split(text, ',')) values.push_back(number(part));
    }
    if (values.empty()) throw UsageError("--values is empty");
    return values;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generate community-detection benchmark networks, analyze them, and score partitions.", kToolName};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    std::string prefix;

    ModelFlags gen_flags;
    auto* gen = app.add_subcommand("generate", "Generate a network with ground-truth communities");
    gen->add_option("--model", gen_flags.model, "farz, 3pass, cf, ba, ff, er or gn")
        ->required()
        ->check(CLI::IsMember({"farz", "3pass", "cf", "ba", "ff", "er", "gn"}));
    gen->add_option("--out", prefix, "Output prefix for .edges, .membership and .json")->default_val("benchmark");
    auto* gen_seed = gen->add_option("--seed", seed, "Random seed");
    gen_flags.add_to(*gen, false);

    std::string graph_path;
    std::string membership_path;
    std::size_t analyze_n = 0;
    std::size_t samples = 0;
    auto* ana = app.add_subcommand("analyze", "Compute structural properties of an edge list");
    ana->add_option("graph", graph_path, "Edge list")->required();
    ana->add_option("--membership", membership_path, "Membership file (enables mixing and per-community output)");
    auto* ana_n = ana->add_option("--n", analyze_n, "Node count (keeps trailing isolated nodes)");
    auto* ana_samples = ana->add_option("--samples", samples, "BFS sources for path length (default: exact up to 2000 nodes)");
    auto* ana_seed = ana->add_option("--seed", seed, "Seed for sampled path lengths");
    std::string ana_prefix;
    ana->add_option("--out", ana_prefix, "Output prefix for .json and .csv");

    std::string first;
    std::string second;
    std::string detect_graph;
    std::size_t max_iters = 100;
    std::string compare_out;
    auto* cmp = app.add_subcommand("compare", "Score two partitions with ARI and NMI");
    cmp->add_option("first", first, "Ground-truth membership file")->required();
    cmp->add_option("second", second, "Second membership file");
    cmp->add_option("--detect", detect_graph, "Run label propagation on this edge list instead of a second file");
    cmp->add_option("--max-iters", max_iters, "Label propagation sweep limit");
    auto* cmp_seed = cmp->add_option("--seed", seed, "Label propagation seed");
    cmp->add_option("--out", compare_out, "Also write the JSON result to this file");

    ModelFlags sweep_flags;
    std::string param;
    std::string values;
    std::size_t replicates = 10;
    std::string detector;
    std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
    std::string sweep_prefix;
    auto* swp = app.add_subcommand("sweep", "Sweep one parameter over replicates and write CSV rows");
    swp->add_option("--model", sweep_flags.model, "farz or 3pass")->required()->check(CLI::IsMember({"farz", "3pass"}));
    swp->add_option("--param", param, "Swept parameter: beta, k, m, phi, q, gamma (farz) or mu (3pass)")->required();
    swp->add_option("--values", values, "Comma list or start:stop:step")->required();
    swp->add_option("--replicates", replicates, "Replicates per value")->default_val(10);
    auto* swp_seed = swp->add_option("--seed", seed, "Base seed; replicate i uses base + i");
    swp->add_option("--detect", detector, "Score a detector against ground truth (lpa)");
    swp->add_option("--max-iters", max_iters, "Label propagation sweep limit");
    swp->add_option("--threads", threads, "Worker threads");
    swp->add_option("--out", sweep_prefix, "Output prefix for .csv and .json")->default_val("sweep");
    sweep_flags.add_to(*swp, true);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    try {
        auto seed_or_default = [&](CLI::Option* opt) { return opt->count() ? seed : default_seed(); };
        if (gen->parsed()) {
            return cmd_generate(gen_flags, seed_or_default(gen_seed), prefix, args, out);
        }
        if (ana->parsed()) {
            return cmd_analyze(graph_path, membership_path,
                               ana_n->count() ? std::optional<std::size_t>(analyze_n) : std::nullopt,
                               ana_samples->count() ? std::optional<std::size_t>(samples) : std::nullopt,
                               seed_or_default(ana_seed), ana_prefix, args, out);
        }
        if (cmp->parsed()) {
            return cmd_compare(first, second, detect_graph, max_iters, seed_or_default(cmp_seed), compare_out, args,
                               out);
        }
        return cmd_sweep(sweep_flags, param, values, replicates, seed_or_default(swp_seed), detector, max_iters,
                         threads, sweep_prefix, args, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const ParameterError& e) {
        err << "invalid parameter " << e.what() << '\n';
        return kDomainError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
}

} // namespace benchgen::cli
