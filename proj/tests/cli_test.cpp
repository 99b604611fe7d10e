#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "extrema_ga/cli.hpp"
#include "json.hpp"

namespace ega::cli {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = parse_and_dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

TEST(Cli, RunPrintsJsonSummary) {
    const Result r = invoke({"run", "--function", "f1", "--range", "2", "130", "--mode", "max",
                             "--stop", "converge:1000", "--seed", "7"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc.at("config").at("seed"), 7);
    EXPECT_EQ(doc.at("config").at("population"), 64);
    EXPECT_EQ(doc.at("config").at("p_mut"), 0.01);
    EXPECT_EQ(doc.at("config").at("p_cross"), 0.5);
    EXPECT_EQ(doc.at("config").at("selection"), "linear-ranking");
    EXPECT_LE(doc.at("generations").get<int>(), 1000);
    EXPECT_GE(doc.at("best_x").get<double>(), 2.0);
}

TEST(Cli, UnknownCrossoverListsValidNames) {
    const Result r = invoke({"run", "--crossover", "four-point"});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("four-point"), std::string::npos);
    EXPECT_NE(r.err.find("two-point"), std::string::npos);
    EXPECT_NE(r.err.find("arith-random"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(invoke({}).code, kExitUsage);
    EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(invoke({"run", "--pop", "ten"}).code, kExitUsage);
    EXPECT_EQ(invoke({"run", "--range", "5", "1"}).code, kExitUsage);
    EXPECT_EQ(invoke({"run", "--selection", "lottery"}).code, kExitUsage);
    EXPECT_EQ(invoke({"run", "--selection", "tournament:65"}).code, kExitUsage);
    EXPECT_EQ(invoke({"run", "--stop", "forever"}).code, kExitUsage);
    EXPECT_EQ(invoke({"run", "--stop", "fixed:0"}).code, kExitUsage);
    EXPECT_EQ(invoke({"run", "--scaling", "sigma"}).code, kExitUsage);
    EXPECT_EQ(invoke({"run", "--p-mut", "2"}).code, kExitUsage);
    EXPECT_EQ(invoke({"run", "--format", "xml"}).code, kExitUsage);
    EXPECT_EQ(invoke({"run", "--mode", "sideways"}).code, kExitUsage);
    EXPECT_EQ(invoke({"run", "--function", "f3"}).code, kExitUsage);
    EXPECT_EQ(invoke({"run", "--isa", "mmx"}).code, kExitUsage);
}

TEST(Cli, HelpExitsCleanly) {
    const Result r = invoke({"--help"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("convergence"), std::string::npos);
}

TEST(Cli, UnwritableOutputIsRuntimeError) {
    const Result r = invoke({"run", "--stop", "fixed:1", "--out", "/nonexistent-dir/x.json"});
    EXPECT_EQ(r.code, kExitRuntime);
}

TEST(Cli, WritesToOutPath) {
    const auto path = std::filesystem::temp_directory_path() / "extrema_ga_cli_test.csv";
    const Result r = invoke({"run", "--stop", "fixed:3", "--format", "csv", "--out", path.string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "generation,best,mean,worst,best_x,best_raw");
    std::filesystem::remove(path);
}

TEST(Cli, ConvergenceCsvCoversEveryCell) {
    const Result r = invoke({"convergence", "--function", "f2", "--seeds", "1", "--stop",
                             "converge:5", "--format", "csv", "--oracle-step", "0.01"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "function,mode,crossover,selection,seed,generations,converged,best_x,best_raw,correct");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    // 2 modes x 4 selections x 12 crossovers.
    EXPECT_EQ(rows, 96);
}

TEST(Cli, ConvergenceTableForFunctionTwo) {
    const Result r = invoke({"convergence", "--function", "f2", "--seeds", "1", "--stop",
                             "converge:3", "--oracle-step", "0.01"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find("Function II (Minimum)"), std::string::npos);
    EXPECT_NE(r.out.find("Function II (Maximum)"), std::string::npos);
    EXPECT_NE(r.out.find("Linear Ranking / Roulette"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("Tournament (tournament group: 10) / (tournament group: 2)"),
              std::string::npos);
}

TEST(Cli, ProfileAndScaling) {
    Result r = invoke({"profile", "--pop", "256", "--stop", "fixed:2", "--format", "csv"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "phase,seconds,percent");

    r = invoke({"scaling", "--pop", "256", "--stop", "fixed:2", "--thread-list", "1,2",
                "--format", "json"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc.at("rows").size(), 2U);

    EXPECT_EQ(invoke({"scaling", "--thread-list", "0"}).code, kExitUsage);
}

TEST(Cli, ThreadsDefaultFromEnvironment) {
    ::setenv("EXTREMA_GA_THREADS", "3", 1);
    Result r = invoke({"run", "--stop", "fixed:1"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out).at("config").at("threads"), 3);
    ::setenv("EXTREMA_GA_THREADS", "zero", 1);
    EXPECT_EQ(invoke({"run", "--stop", "fixed:1"}).code, kExitUsage);
    ::unsetenv("EXTREMA_GA_THREADS");
}

} // namespace
} // namespace ega::cli
