// End-to-end tests of the qgain command line tool. The binary path and the
// sample data directory come in through compile definitions.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout only
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(QGAIN_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer{};
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buffer.data(), buffer.size(), pipe) != nullptr) {
        result.output += buffer.data();
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string diamond_path() { return std::string(QGAIN_DATA_DIR) + "/diamond.json"; }

std::string write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path);
    out << content;
    return path.string();
}

} // namespace

TEST_CASE("det --method both on the diamond graph") {
    const RunResult r = run_cli("det --input " + diamond_path() + " --method both");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("direct         3.34314575051") != std::string::npos);
    CHECK(r.output.find("combinatorial  3.34314575051") != std::string::npos);
}

TEST_CASE("det --json") {
    const RunResult r = run_cli("det --input " + diamond_path() + " --json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["detDirect"] == "3.34314575051");
    CHECK(doc["detCombinatorial"] == "3.34314575051");
    CHECK(doc["agree"] == true);
}

TEST_CASE("det on a path graph is zero") {
    const std::string path = write_temp(
        "qgain_p3.json",
        R"({"vertices": ["a","b","c"],
            "edges": [{"from":"a","to":"b","gain":"1"},{"from":"b","to":"c","gain":"i"}]})");
    const RunResult r = run_cli("det --input " + path + " --method both");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("combinatorial  0") != std::string::npos);
}

TEST_CASE("exit 2 on parse errors") {
    const std::string path = write_temp("qgain_bad.json", "{not json");
    CHECK(run_cli("det --input " + path).exit_code == 2);
    CHECK(run_cli("det --input /nonexistent.json").exit_code == 2);
}

TEST_CASE("exit 3 on non-unit gains") {
    const std::string path = write_temp(
        "qgain_nonunit.json",
        R"({"vertices": ["a","b"], "edges": [{"from":"a","to":"b","gain":[0.5,0.5,0,0]}]})");
    CHECK(run_cli("det --input " + path).exit_code == 3);
}

TEST_CASE("exit 4 when the reduction budget is exceeded") {
    // 14 vertices, 24 edges: C(24, 14) is about 1.96M column subsets, past
    // the default 10^6 budget, so the combinatorial route refuses up front.
    std::string doc = R"({"vertices": [)";
    for (int v = 1; v <= 14; ++v) {
        doc += (v > 1 ? std::string(",") : std::string()) + "\"v" + std::to_string(v) + "\"";
    }
    doc += R"(], "edges": [)";
    int id = 0;
    auto add_edge = [&](int u, int v) {
        ++id;
        doc += (id > 1 ? std::string(",") : std::string()) + R"({"id":"e)" +
               std::to_string(id) + R"(","from":"v)" + std::to_string(u) + R"(","to":"v)" +
               std::to_string(v) + R"(","gain":"i"})";
    };
    for (int v = 1; v < 14; ++v) {
        add_edge(v, v + 1); // path, 13 edges
    }
    for (int v = 3; v <= 13; ++v) {
        add_edge(1, v); // 11 chords
    }
    doc += "]}";
    const std::string path = write_temp("qgain_budget.json", doc);
    CHECK(run_cli("det --input " + path + " --method combinatorial").exit_code == 4);
}

TEST_CASE("balanced command") {
    const RunResult unbalanced = run_cli("balanced --input " + diamond_path());
    CHECK(unbalanced.exit_code == 1);
    CHECK(unbalanced.output.find("unbalanced") != std::string::npos);

    const std::string tree = write_temp(
        "qgain_tree.json",
        R"({"vertices": ["a","b","c"],
            "edges": [{"from":"a","to":"b","gain":"j"},{"from":"b","to":"c","gain":"k"}]})");
    const RunResult balanced = run_cli("balanced --input " + tree);
    CHECK(balanced.exit_code == 0);
    CHECK(balanced.output.find("balanced") == 0);
}

TEST_CASE("reductions listing") {
    const RunResult r = run_cli("reductions --input " + diamond_path() + " --json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    REQUIRE(doc["reductions"].size() == 5);
    CHECK(doc["total"] == "3.34314575051");
    CHECK(doc["unicycleLike"] == 5);

    std::size_t unit_contributions = 0;
    for (const auto& entry : doc["reductions"]) {
        CHECK(entry["unicycleLike"] == true);
        if (entry["det"] == "1") {
            ++unit_contributions;
            CHECK(entry["columns"] == nlohmann::json({1, 2, 3, 5}));
        } else {
            CHECK(entry["det"] == "0.585786437627");
        }
    }
    CHECK(unit_contributions == 1);
}

TEST_CASE("verify command") {
    const RunResult r =
        run_cli("verify --input " + diamond_path() + " --trials 5 --seed 0 --json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.output);
    CHECK(doc["pass"] == true);
    CHECK(doc["crossCheck"]["detDirect"] == "3.34314575051");
    CHECK(doc["lemmaSuite"]["lemmaResults"].size() > 0);

    const RunResult vacuous = run_cli("verify --trials 0");
    CHECK(vacuous.exit_code == 0);
}
