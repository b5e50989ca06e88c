#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

std::filesystem::path fixture_path(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "moncat-cli-tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::filesystem::path write_fixture(const std::string& name, const std::string& body) {
    const auto path = fixture_path(name);
    std::ofstream out(path, std::ios::trunc);
    out << body;
    return path;
}

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(MONCAT_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    while (std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe))
        result.output.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

const std::string kTwoElementGroup =
    R"({"backend": "finset", "table": [[0, 1], [1, 0]], "unit": 0})";

}  // namespace

TEST_CASE("check accepts a lawful monoid") {
    const auto path = write_fixture("c2.json", kTwoElementGroup);
    const auto run = run_cli("--input " + path.string() + " --command check");
    CAPTURE(run.output);
    REQUIRE(run.exit_code == 0);
    REQUIRE(run.output.find("result: PASS") != std::string::npos);
}

TEST_CASE("check reports a broken law with a witness and exits 1") {
    const auto path = write_fixture(
        "bad.json", R"({"backend": "finset", "table": [[0,1,2],[1,2,0],[2,1,0]], "unit": 0})");
    const auto run = run_cli("--input " + path.string() + " --command check");
    CAPTURE(run.output);
    REQUIRE(run.exit_code == 1);
    REQUIRE(run.output.find("FAIL  associativity") != std::string::npos);
    REQUIRE(run.output.find("result: FAIL") != std::string::npos);
}

TEST_CASE("malformed or ill-shaped payloads exit 2") {
    const auto truncated = write_fixture("trunc.json", R"({"backend": "finset", "table": [[0,1])");
    REQUIRE(run_cli("--input " + truncated.string() + " --command check").exit_code == 2);

    const auto bad_unit = write_fixture(
        "bad_unit.json", R"({"backend": "finset", "table": [[0, 1], [1, 0]], "unit": 7})");
    REQUIRE(run_cli("--input " + bad_unit.string() + " --command check").exit_code == 2);

    const auto ragged = write_fixture(
        "ragged.json", R"({"backend": "finset", "table": [[0, 1], [1]], "unit": 0})");
    REQUIRE(run_cli("--input " + ragged.string() + " --command check").exit_code == 2);
}

TEST_CASE("usage errors exit 2") {
    const auto path = write_fixture("c2.json", kTwoElementGroup);
    REQUIRE(run_cli("--input " + path.string() + " --command frobnicate").exit_code == 2);
    REQUIRE(run_cli("--command check").exit_code == 2);
    REQUIRE(run_cli("--input " + path.string() + " --command check --report yaml").exit_code == 2);
    REQUIRE(run_cli("--input /nonexistent.json --command check").exit_code == 2);
}

TEST_CASE("repeated runs emit byte-identical reports") {
    const auto path = write_fixture("c2.json", kTwoElementGroup);
    const std::string args =
        "--input " + path.string() + " --command monoid-ring --report json";
    const auto first = run_cli(args);
    const auto second = run_cli(args);
    REQUIRE(first.exit_code == 0);
    REQUIRE(first.output == second.output);
}

TEST_CASE("coequalize collapses a cyclic group by an identified pair") {
    const auto path = write_fixture("coeq.json", R"({
      "monoid": {"backend": "finset",
                 "table": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]], "unit": 0},
      "left":  {"dom": {"size": 1}, "cod": {"size": 4}, "table": [0]},
      "right": {"dom": {"size": 1}, "cod": {"size": 4}, "table": [2]}
    })");
    const auto run = run_cli("--input " + path.string() +
                             " --command coequalize --verify-depth full --report json");
    CAPTURE(run.output);
    REQUIRE(run.exit_code == 0);
    const auto out = nlohmann::json::parse(run.output);
    REQUIRE(out.at("quotient").at("carrier").at("size") == 2);
    REQUIRE(out.at("projection").at("table") == nlohmann::json({0, 1, 0, 1}));
    REQUIRE(out.at("report").at("passed") == true);
}

TEST_CASE("coequalize rejects a non-parallel pair as a schema problem") {
    const auto path = write_fixture("skew.json", R"({
      "monoid": {"backend": "finset", "table": [[0, 1], [1, 0]], "unit": 0},
      "left":  {"dom": {"size": 1}, "cod": {"size": 4}, "table": [0]},
      "right": {"dom": {"size": 1}, "cod": {"size": 4}, "table": [2]}
    })");
    REQUIRE(run_cli("--input " + path.string() + " --command coequalize").exit_code == 2);
}

TEST_CASE("monoid-ring reports the free group ring of the two-element group") {
    const auto path = write_fixture("c2.json", kTwoElementGroup);
    const auto run = run_cli("--input " + path.string() +
                             " --command monoid-ring --verify-depth full --report json");
    CAPTURE(run.output);
    REQUIRE(run.exit_code == 0);
    const auto out = nlohmann::json::parse(run.output);
    REQUIRE(out.at("carrier_invariants") == "free_rank=2 torsion=[]");
    REQUIRE(out.at("ring").at("carrier").at("gens") == 2);
    REQUIRE(out.at("ring").at("carrier").at("relations").empty());
    REQUIRE(out.at("report").at("passed") == true);
}

TEST_CASE("monoid-ring refuses truncation below three") {
    const auto path = write_fixture("c2.json", kTwoElementGroup);
    const auto run = run_cli("--input " + path.string() + " --command monoid-ring --truncation 2");
    REQUIRE(run.exit_code == 2);
}

TEST_CASE("hom-check matches morphism counts between backends") {
    const auto path = write_fixture("hom.json", R"({
      "monoid": {"backend": "finset", "table": [[0, 1], [1, 0]], "unit": 0},
      "ring": {"backend": "finab",
               "group": {"gens": 1, "relations": [[6]]},
               "mult": [[1]], "unit": [1]}
    })");
    const auto run =
        run_cli("--input " + path.string() + " --command hom-check --report json");
    CAPTURE(run.output);
    REQUIRE(run.exit_code == 0);
    const auto out = nlohmann::json::parse(run.output);
    REQUIRE(out.at("counts").at("monoid_morphisms") == 2);
    REQUIRE(out.at("counts").at("ring_morphisms") == 2);
    REQUIRE(out.at("report").at("passed") == true);
}
