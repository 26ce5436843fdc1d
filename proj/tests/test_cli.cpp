#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "support.hpp"

using namespace logenr;
using namespace testing_support;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "logenr");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

fs::path scratch_dir() {
    const fs::path d = fs::temp_directory_path() / "logenr_cli_test";
    fs::create_directories(d);
    return d;
}

}  // namespace

TEST_SUITE("parse_subset") {
    TEST_CASE("examples") {
        CHECK(cli::parse_subset("8,12") == SubsetT::from_labels({8, 12}));
        CHECK(cli::parse_subset("1,1,2") == SubsetT::from_labels({1, 2}));
        CHECK(cli::parse_subset("15") == SubsetT::from_labels({15}));
        CHECK(cli::parse_subset(" 3, 4") == SubsetT::from_labels({3, 4}));
    }

    TEST_CASE("rejections") {
        for (const char* bad : {"16", "0", "-1", "", "1,,2", "1,", "a", "1.5", "8;12", "99999999999"})
            CHECK_MESSAGE(error_code([&] { cli::parse_subset(bad); }) == Errc::ParseError, bad);
    }
}

TEST_SUITE("cli") {
    TEST_CASE("extract z2 prints the chain and the drop") {
        const Result r = run({"extract", "--model", "z2"});
        CHECK(r.code == 0);
        CHECK(r.out == "(−3,3/7)−(−2,2/7)−(−2,1/7)−(−1,0)−C̄\nΔC² = −7/2\n");
    }

    TEST_CASE("extract z3") {
        const Result r = run({"extract", "--model", "z3"});
        CHECK(r.code == 0);
        CHECK(r.out.find("ΔC² = −14/3") != std::string::npos);
    }

    TEST_CASE("extract with two boundary curves reports both drops") {
        const Result r = run({"extract", "--model", "nc-red"});
        CHECK(r.code == 0);
        CHECK(r.out.find("ΔC1² = −6\n") != std::string::npos);
        CHECK(r.out.find("ΔC2² = −6\n") != std::string::npos);
        CHECK(run({"extract", "--model", "nc-irr"}).out.find("ΔC² = −14\n") != std::string::npos);
    }

    TEST_CASE("extract a global model recovers the model self-intersections") {
        const Result r = run({"extract", "--model", "a26"});
        CHECK(r.code == 0);
        CHECK(r.out.find("ΔC1² = −85/6") != std::string::npos);  // -14 - 1/6
        CHECK(r.out.find("ΔC2² = −20") != std::string::npos);    // -14 - 6
    }

    TEST_CASE("extract --dot-out") {
        const fs::path dot = scratch_dir() / "z2.dot";
        CHECK(run({"extract", "--model", "z2", "--dot-out", dot.string()}).code == 0);
        const std::string text = slurp(dot);
        CHECK(text.rfind("graph \"z2\" {", 0) == 0);
        CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 5 + 4 + 1);
    }

    TEST_CASE("check-subset") {
        Result r = run({"check-subset", "--case", "a26", "--t", "8,12"});
        CHECK(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["case"] == "a26");
        CHECK(j["valid"] == true);
        CHECK(j["rho"] == 1);
        CHECK(j["rank_delta"] == 15);
        CHECK(r.out.find(R"("valid":true)") != std::string::npos);

        r = run({"check-subset", "--case", "a26", "--t", "3,11,14"});
        CHECK(r.code == 0);
        CHECK(r.out.find(R"("valid":false,"reason":"PairNotNegativeDefinite")") != std::string::npos);
    }

    TEST_CASE("usage errors exit with 2") {
        CHECK(run({}).code == 2);
        CHECK(run({"frobnicate"}).code == 2);
        CHECK(run({"extract"}).code == 2);
        CHECK(run({"extract", "--model", "z5"}).code == 2);
        CHECK(run({"extract", "--model", "z2", "--bogus"}).code == 2);
        CHECK(run({"check-subset", "--case", "a26", "--t", "16"}).code == 2);
        CHECK(run({"check-subset", "--case", "a26", "--t", "1,,2"}).code == 2);
        CHECK(run({"check-subset", "--case", "d4", "--t", "1"}).code == 2);
        CHECK(run({"catalog", "--case", "a26", "--format", "xml", "--out", "x"}).code == 2);
        CHECK(run({"export", "--case", "a26", "--what", "minimal", "--out", "/nonexistent/dir/x.json"}).code == 2);
        const Result r = run({"check-subset", "--case", "a26", "--t", "abc"});
        CHECK(r.out.empty());
        CHECK_FALSE(r.err.empty());
    }

    TEST_CASE("help exits with 0") {
        const Result r = run({"--help"});
        CHECK(r.code == 0);
        CHECK(r.out.find("check-subset") != std::string::npos);
    }

    TEST_CASE("export json round-trips") {
        for (const char* what : {"minimal", "golden"}) {
            for (const char* c : {"a26", "i22"}) {
                const fs::path out = scratch_dir() / (std::string(c) + "_" + what + ".json");
                CHECK(run({"export", "--case", c, "--what", what, "--out", out.string()}).code == 0);
                const DualGraph g = deserialize(graph_doc_from_json(slurp(out)));
                const ModelCase mc = *parse_model_case(c);
                const LogPair expect = std::string(what) == "minimal" ? minimal_resolution_graph(mc) : golden_graph(mc);
                CHECK(g == expect.graph);
            }
        }
    }

    TEST_CASE("export dot") {
        const fs::path out = scratch_dir() / "golden.dot";
        CHECK(run({"export", "--case", "i22", "--what", "golden", "--format", "dot", "--out", out.string()}).code == 0);
        const std::string text = slurp(out);
        CHECK(text.rfind("graph \"i22_golden\" {", 0) == 0);
        CHECK(std::count(text.begin(), text.end(), '[') == 47);
    }

    TEST_CASE("verify one case") {
        const fs::path report = scratch_dir() / "report.json";
        const Result r = run({"verify", "--case", "a26", "--report-out", report.string()});
        CHECK(r.code == 0);
        CHECK(r.out.find("0 mismatches") != std::string::npos);
        const auto j = nlohmann::json::parse(slurp(report));
        CHECK(j.size() == 1);
        CHECK(j[0]["mismatches"].empty());
    }
}
