#include "cli.hpp"

#include <benchgen/io.hpp>

#include <json.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace benchgen::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
        dir_ = fs::temp_directory_path() / (std::string("benchgen_cli_") + info->name());
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    int run_cli(std::vector<std::string> args) {
        out_.str("");
        err_.str("");
        return run(args, out_, err_);
    }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    static std::string slurp(const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream s;
        s << in.rdbuf();
        return s.str();
    }

    static json load(const std::string& p) { return json::parse(slurp(p)); }

    static std::vector<std::vector<std::string>> csv(const std::string& p) {
        std::vector<std::vector<std::string>> rows;
        std::istringstream in(slurp(p));
        std::string line;
        while (std::getline(in, line)) {
            std::vector<std::string> cells;
            std::string cell;
            std::istringstream l(line);
            while (std::getline(l, cell, ',')) cells.push_back(cell);
            if (!line.empty() && line.back() == ',') cells.emplace_back();
            rows.push_back(cells);
        }
        return rows;
    }

    fs::path dir_;
    std::ostringstream out_;
    std::ostringstream err_;
};

TEST_F(Cli, GenerateFarzWithExplicitParameters) {
    ASSERT_EQ(run_cli({"generate", "--model", "farz", "--n", "1000", "--k", "4", "--m", "5", "--beta", "0.8", "--phi",
                       "1", "--r", "1", "--eps", "1e-7", "--alpha", "0.5", "--gamma", "0.5", "--seed", "42", "--out",
                       path("farz")}),
              kSuccess)
        << err_.str();
    const auto header = load(path("farz.json"));
    EXPECT_EQ(header["model"], "farz");
    EXPECT_EQ(header["seed"], 42);
    EXPECT_EQ(header["params"]["beta"], 0.8);
    const Graph g = read_edge_list(fs::path(path("farz.edges")), 1000);
    EXPECT_EQ(header["edge_count"], g.edge_count());
    EXPECT_EQ(g.edge_count() + header["skipped_connections"].get<std::size_t>(), 4999u);
    EXPECT_EQ(read_membership(fs::path(path("farz.membership"))).node_count(), 1000u);
}

TEST_F(Cli, GenerateIsByteIdenticalPerSeed) {
    for (const std::string model : {"farz", "3pass", "cf", "ba", "ff", "er", "gn"}) {
        ASSERT_EQ(run_cli({"generate", "--model", model, "--seed", "3", "--out", path("a")}), kSuccess) << err_.str();
        ASSERT_EQ(run_cli({"generate", "--model", model, "--seed", "3", "--out", path("b")}), kSuccess);
        EXPECT_EQ(slurp(path("a.edges")), slurp(path("b.edges"))) << model;
        EXPECT_FALSE(slurp(path("a.edges")).empty()) << model;
        if (fs::exists(path("a.membership"))) {
            EXPECT_EQ(slurp(path("a.membership")), slurp(path("b.membership"))) << model;
        }
        fs::remove(path("a.membership"));
        fs::remove(path("b.membership"));
    }
}

TEST_F(Cli, ThreePassHeaderCarriesRewireStats) {
    ASSERT_EQ(run_cli({"generate", "--model", "3pass", "--start", "ff", "--assign", "ne", "--mu", "0.3", "--p-fwd",
                       "0.1", "--rp", "0", "--out", path("tp")}),
              kSuccess)
        << err_.str();
    const auto header = load(path("tp.json"));
    const auto stats = header["rewire_stats"];
    EXPECT_EQ(stats["rewired_total"], stats["edges_added"].get<int>() + stats["edges_removed"].get<int>());
    EXPECT_EQ(header["start"]["model"], "ff");
    EXPECT_EQ(header["assign"], "ne");
    EXPECT_EQ(header["theta_c"]["mu"], 0.3);
}

TEST_F(Cli, CompareIdenticalFilesScoresOne) {
    ASSERT_EQ(run_cli({"generate", "--model", "gn", "--out", path("truth")}), kSuccess);
    ASSERT_EQ(run_cli({"compare", path("truth.membership"), path("truth.membership")}), kSuccess) << err_.str();
    const auto result = json::parse(out_.str());
    EXPECT_EQ(result["ari"], 1.0);
    EXPECT_EQ(result["nmi"], 1.0);
    EXPECT_EQ(result["overlap_reduced"], false);
}

TEST_F(Cli, CompareWithDetection) {
    ASSERT_EQ(run_cli({"generate", "--model", "gn", "--p-in", "0.5", "--p-out", "0.01", "--out", path("g")}), kSuccess);
    ASSERT_EQ(run_cli({"compare", path("g.membership"), "--detect", path("g.edges"), "--out", path("cmp.json")}),
              kSuccess)
        << err_.str();
    const auto result = load(path("cmp.json"));
    EXPECT_GT(result["ari"].get<double>(), 0.9);
    EXPECT_EQ(result["detector"], "label_propagation");
}

TEST_F(Cli, CompareNeedsExactlyOneTarget) {
    ASSERT_EQ(run_cli({"generate", "--model", "gn", "--out", path("g")}), kSuccess);
    EXPECT_EQ(run_cli({"compare", path("g.membership")}), kUsageError);
    EXPECT_EQ(run_cli({"compare", path("g.membership"), path("g.membership"), "--detect", path("g.edges")}),
              kUsageError);
}

TEST_F(Cli, AnalyzeWritesReportAndCsv) {
    ASSERT_EQ(run_cli({"generate", "--model", "farz", "--n", "300", "--out", path("f")}), kSuccess);
    ASSERT_EQ(run_cli({"analyze", path("f.edges"), "--membership", path("f.membership"), "--out", path("rep")}),
              kSuccess)
        << err_.str();
    const auto report = load(path("rep.json"));
    const auto edges = report["edge_count"].get<double>();
    EXPECT_EQ(report["avg_degree"].get<double>(), 2.0 * edges / 300.0);
    EXPECT_EQ(report["realized_mixing_per_node"].size(), 300u);
    EXPECT_EQ(report["per_community_degree_histograms"].size(), 4u);
    const auto rows = csv(path("rep.csv"));
    ASSERT_EQ(rows.size(), 301u);
    EXPECT_EQ(rows[0][0], "node");
}

TEST_F(Cli, AnalyzeWithoutMembership) {
    ASSERT_EQ(run_cli({"generate", "--model", "er", "--n", "100", "--p", "0.1", "--out", path("e")}), kSuccess);
    ASSERT_EQ(run_cli({"analyze", path("e.edges"), "--n", "100", "--out", path("rep")}), kSuccess) << err_.str();
    const auto report = load(path("rep.json"));
    EXPECT_EQ(report["node_count"], 100);
    EXPECT_FALSE(report.contains("realized_mixing_per_node"));
}

TEST_F(Cli, BetaSweepRowCount) {
    ASSERT_EQ(run_cli({"sweep", "--model", "farz", "--param", "beta", "--values", "0.5:1.0:0.05", "--replicates", "10",
                       "--n", "200", "--seed", "1", "--out", path("beta")}),
              kSuccess)
        << err_.str();
    const auto rows = csv(path("beta.csv"));
    ASSERT_EQ(rows.size(), 111u);
    EXPECT_EQ(rows[0][0], "model");
    EXPECT_EQ(rows[1][2], "0.5");
    EXPECT_EQ(rows[110][2], "1");
    EXPECT_EQ(rows[110][3], "9");
    EXPECT_EQ(rows[110][4], "10");
    for (const auto& row : rows) EXPECT_EQ(row.size(), rows[0].size());
    EXPECT_EQ(load(path("beta.json"))["rows"], 110);
}

TEST_F(Cli, SweepRowsDoNotDependOnThreadCount) {
    const std::vector<std::string> base{"sweep", "--model", "farz", "--param", "k",     "--values",
                                        "2,4,8", "--replicates", "3", "--n", "200", "--detect", "lpa"};
    auto one = base, many = base;
    one.insert(one.end(), {"--threads", "1", "--out", path("one")});
    many.insert(many.end(), {"--threads", "4", "--out", path("many")});
    ASSERT_EQ(run_cli(one), kSuccess) << err_.str();
    ASSERT_EQ(run_cli(many), kSuccess);
    EXPECT_EQ(slurp(path("one.csv")), slurp(path("many.csv")));
}

TEST_F(Cli, SweepRowIsReproducibleByGenerate) {
    ASSERT_EQ(run_cli({"sweep", "--model", "farz", "--param", "beta", "--values", "0.7", "--replicates", "2", "--n",
                       "150", "--seed", "20", "--out", path("s")}),
              kSuccess);
    const auto rows = csv(path("s.csv"));
    ASSERT_EQ(rows[2][4], "21");
    ASSERT_EQ(run_cli({"generate", "--model", "farz", "--beta", "0.7", "--n", "150", "--seed", "21", "--out",
                       path("g")}),
              kSuccess);
    std::size_t col = 0;
    while (rows[0][col] != "edge_count") ++col;
    EXPECT_EQ(rows[2][col], std::to_string(load(path("g.json"))["edge_count"].get<int>()));
}

TEST_F(Cli, MuSweepPerStrategy) {
    ASSERT_EQ(run_cli({"sweep", "--model", "3pass", "--start", "ff", "--param", "mu", "--values", "0.1,0.5",
                       "--assign", "lfr,cn,ne", "--replicates", "2", "--out", path("mu")}),
              kSuccess)
        << err_.str();
    const auto rows = csv(path("mu.csv"));
    ASSERT_EQ(rows.size(), 13u);
    std::size_t assign = 0, rewired = 0;
    for (std::size_t c = 0; c < rows[0].size(); ++c) {
        if (rows[0][c] == "assign") assign = c;
        if (rows[0][c] == "rewired_total") rewired = c;
    }
    EXPECT_EQ(rows[1][assign], "lfr");
    EXPECT_EQ(rows[5][assign], "cn");
    EXPECT_EQ(rows[12][assign], "ne");
    for (std::size_t r = 1; r < rows.size(); ++r) EXPECT_FALSE(rows[r][rewired].empty());
}

TEST_F(Cli, PhiSweepBalancesSizes) {
    ASSERT_EQ(run_cli({"sweep", "--model", "farz", "--param", "phi", "--values", "1,10,100,1000", "--replicates", "10",
                       "--out", path("phi")}),
              kSuccess)
        << err_.str();
    const auto rows = csv(path("phi.csv"));
    std::size_t cv = 0;
    while (rows[0][cv] != "community_size_cv") ++cv;
    std::vector<double> mean(4, 0.0);
    for (std::size_t r = 1; r < rows.size(); ++r) mean[(r - 1) / 10] += std::stod(rows[r][cv]) / 10;
    for (std::size_t i = 1; i < mean.size(); ++i) EXPECT_LE(mean[i], mean[i - 1]);
}

TEST_F(Cli, UsageErrors) {
    EXPECT_EQ(run_cli({}), kUsageError);
    EXPECT_EQ(run_cli({"generate", "--model", "nope"}), kUsageError);
    EXPECT_EQ(run_cli({"generate", "--model", "farz", "--mu", "0.3", "--out", path("x")}), kUsageError);
    EXPECT_NE(err_.str().find("--mu"), std::string::npos);
    EXPECT_EQ(run_cli({"generate", "--model", "3pass", "--p-fwd", "0.2", "--out", path("x")}), kUsageError);
    EXPECT_EQ(run_cli({"sweep", "--model", "farz", "--param", "alpha", "--values", "1"}), kUsageError);
    EXPECT_EQ(run_cli({"sweep", "--model", "3pass", "--param", "beta", "--values", "1"}), kUsageError);
    EXPECT_EQ(run_cli({"sweep", "--model", "farz", "--param", "beta", "--values", "a,b"}), kUsageError);
    EXPECT_EQ(run_cli({"generate", "--bogus"}), kUsageError);
}

TEST_F(Cli, DomainErrorsNameTheParameter) {
    EXPECT_EQ(run_cli({"generate", "--model", "farz", "--beta", "1.5", "--out", path("x")}), kDomainError);
    EXPECT_NE(err_.str().find("beta"), std::string::npos);
    EXPECT_EQ(run_cli({"generate", "--model", "3pass", "--mu", "-1", "--out", path("x")}), kDomainError);
    EXPECT_NE(err_.str().find("mu"), std::string::npos);
    EXPECT_EQ(run_cli({"generate", "--model", "cf", "--kmax", "5000", "--out", path("x")}), kDomainError);
    EXPECT_NE(err_.str().find("k_max"), std::string::npos);
    EXPECT_EQ(run_cli({"analyze", path("missing.edges")}), kDomainError);
    EXPECT_EQ(run_cli({"sweep", "--model", "farz", "--param", "k", "--values", "2.5", "--out", path("x")}),
              kDomainError);
}

TEST_F(Cli, HelpExitsZero) {
    EXPECT_EQ(run_cli({"--help"}), kSuccess);
    EXPECT_NE(out_.str().find("generate"), std::string::npos);
    EXPECT_EQ(run_cli({"sweep", "--help"}), kSuccess);
}

TEST_F(Cli, SeedFromEnvironment) {
    ::setenv(kSeedEnv, "77", 1);
    const int code = run_cli({"generate", "--model", "er", "--n", "50", "--out", path("e")});
    ::unsetenv(kSeedEnv);
    ASSERT_EQ(code, kSuccess) << err_.str();
    EXPECT_EQ(load(path("e.json"))["seed"], 77);
    EXPECT_EQ(default_seed(), 42u);
}

TEST(ParseValues, ListsAndRanges) {
    EXPECT_EQ(parse_values("0.5,1,2"), (std::vector<double>{0.5, 1, 2}));
    const auto r = parse_values("0.5:1.0:0.05");
    ASSERT_EQ(r.size(), 11u);
    EXPECT_EQ(r[3], 0.65);
    EXPECT_EQ(r.back(), 1.0);
    EXPECT_THROW(parse_values("1:0:0.1"), UsageError);
    EXPECT_THROW(parse_values("1:2"), UsageError);
    EXPECT_THROW(parse_values(""), UsageError);
}

} // namespace
} // namespace benchgen::cli
