#include "schema_check.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    const std::string err_file =
        (std::filesystem::temp_directory_path() / ("oinv_cli_err_" + std::to_string(++counter)))
            .string();
    const std::string cmd = env_prefix + std::string(OINV_CLI_PATH) + " " + args + " 2>" + err_file;
    CliResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
    const int status = pclose(pipe);
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream err(err_file);
    result.err.assign(std::istreambuf_iterator<char>(err), std::istreambuf_iterator<char>());
    std::filesystem::remove(err_file);
    return result;
}

nlohmann::json load_schema(const std::string& name) {
    std::ifstream in(std::string(OINV_SCHEMA_DIR) + "/" + name);
    REQUIRE(in.good());
    nlohmann::json schema;
    in >> schema;
    return schema;
}

void require_schema(const nlohmann::json& value, const std::string& schema_name) {
    std::string error;
    const bool ok = schema_check::validate(value, load_schema(schema_name), error);
    INFO(schema_name << ": " << error);
    REQUIRE(ok);
}

} // namespace

TEST_CASE("cli dim: text, json, raw degree", "[cli]") {
    const CliResult r = run_cli("dim --r 3 --m 2");
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "5\n");

    const CliResult j = run_cli("dim --r 8 --m 6 --json");
    REQUIRE(j.code == 0);
    const auto parsed = nlohmann::json::parse(j.out);
    require_schema(parsed, "dim.schema.json");
    REQUIRE(parsed["r"] == 8);
    REQUIRE(parsed["m"] == 6);
    REQUIRE(parsed["dim"] == "284615877731708760168866");

    const CliResult odd = run_cli("dim --r 4 --d 5");
    REQUIRE(odd.code == 0);
    REQUIRE(odd.out == "0\n");
}

TEST_CASE("cli dim: usage errors exit 2", "[cli]") {
    REQUIRE(run_cli("dim --r 0 --m 2").code == 2);
    REQUIRE(run_cli("dim --r 3").code == 2);             // neither --m nor --d
    REQUIRE(run_cli("dim --r 3 --m 2 --d 4").code == 2); // both
    REQUIRE(run_cli("bogus").code == 2);
    const CliResult r = run_cli("dim --r 0 --m 2");
    REQUIRE(r.err.rfind("oinv: error: usage:", 0) == 0); // single machine-parsable line
    REQUIRE(std::count(r.err.begin(), r.err.end(), '\n') == 1);
}

TEST_CASE("cli table: values, schema, determinism", "[cli]") {
    const CliResult t = run_cli("table --rmax 3 --mmax 3");
    REQUIRE(t.code == 0);
    REQUIRE(t.out.find("16") != std::string::npos);

    const CliResult j = run_cli("table --rmax 4 --mmax 4 --json");
    REQUIRE(j.code == 0);
    const auto parsed = nlohmann::json::parse(j.out);
    require_schema(parsed, "table.schema.json");
    REQUIRE(parsed["values"][1] == nlohmann::json({"1", "2", "3", "5"}));
    REQUIRE(parsed["values"][3][3] == "4154");

    REQUIRE(run_cli("table --rmax 4 --mmax 4 --json").out == j.out); // byte-identical
    REQUIRE(run_cli("table --rmax 3 --mmax 3").out == t.out);
}

TEST_CASE("cli orbits: json schema, dot export, caps", "[cli]") {
    const CliResult j = run_cli("orbits --r 3 --m 2 --json");
    REQUIRE(j.code == 0);
    const auto parsed = nlohmann::json::parse(j.out);
    require_schema(parsed, "orbits.schema.json");
    REQUIRE(parsed["count"] == 5);
    REQUIRE(parsed["orbits"].size() == 5);
    // the all-distinct representative is the last, with every color class distinct
    REQUIRE(parsed["orbits"][4]["colors"] ==
            nlohmann::json::parse("[[[1,2],[3,4]],[[1,3],[2,4]],[[1,4],[2,3]]]"));

    const auto dir = std::filesystem::temp_directory_path() / "oinv_dot_test";
    std::filesystem::remove_all(dir);
    const CliResult d = run_cli("orbits --r 3 --m 2 --dot " + dir.string());
    REQUIRE(d.code == 0);
    for (int k = 1; k <= 5; ++k)
        REQUIRE(std::filesystem::exists(dir / ("orbit_" + std::to_string(k) + ".dot")));
    std::ifstream dot(dir / "orbit_5.dot");
    const std::string content{std::istreambuf_iterator<char>(dot),
                              std::istreambuf_iterator<char>()};
    REQUIRE(content.rfind("graph orbit_5 {", 0) == 0);
    REQUIRE(content.find("[color=\"red\"]") != std::string::npos);
    std::filesystem::remove_all(dir);

    const CliResult cap = run_cli("orbits --r 2 --m 7");
    REQUIRE(cap.code == 3);
    REQUIRE(cap.err.rfind("oinv: error: cap:", 0) == 0);
}

TEST_CASE("cli invariant: rendering and machine form", "[cli]") {
    const CliResult t = run_cli("invariant --r 3 --m 2 --orbit 5 --dims 2,2,2");
    REQUIRE(t.code == 0);
    REQUIRE(t.out.find("x_{a^(1)_1 a^(2)_1 a^(3)_1}") != std::string::npos);

    const CliResult j = run_cli("invariant --r 3 --m 2 --orbit 5 --json");
    REQUIRE(j.code == 0);
    const auto parsed = nlohmann::json::parse(j.out);
    require_schema(parsed, "invariant.schema.json");
    REQUIRE(parsed["dims"] == nlohmann::json({4, 4, 4})); // stable default: all 2m
    REQUIRE(parsed["cycles"] ==
            nlohmann::json::parse("[[1,1,2,2],[1,2,1,2],[1,2,2,1]]"));
    REQUIRE(parsed["forest"].size() == 3);
    REQUIRE(parsed["forest"][0] == "((1,2),3);"); // tree of (1 2)(3 4)

    REQUIRE(run_cli("invariant --r 3 --m 2 --orbit 6").code == 2);
}

TEST_CASE("cli verify: pass, fail, determinism", "[cli]") {
    const std::string args = "verify --r 3 --m 2 --dims 2,2,2 --trials 5 --seed 7 --json";
    const CliResult j = run_cli(args);
    REQUIRE(j.code == 0);
    const auto parsed = nlohmann::json::parse(j.out);
    require_schema(parsed, "verify.schema.json");
    REQUIRE(parsed["pass"] == true);
    REQUIRE(parsed["results"].size() == 5);
    REQUIRE(parsed["max_residual"].get<double>() <= 1e-8);

    REQUIRE(run_cli(args).out == j.out); // same seed, same bytes

    const CliResult fail = run_cli("verify --r 2 --m 1 --dims 2,2 --trials 2 --tolerance 0");
    REQUIRE(fail.code == 1);
    REQUIRE(fail.err.rfind("oinv: error: verify:", 0) == 0);
}

TEST_CASE("cli trees: matching to newick and forest action", "[cli]") {
    const CliResult t = run_cli("trees --matching \"(1 4)(2 3)(5 8)(6 7)\"");
    REQUIRE(t.code == 0);
    REQUIRE(t.out == "(((1,4),(2,3)),5);\n");

    const CliResult j = run_cli("trees --matching \"(1 4)(2 3)(5 8)(6 7)\" --json");
    REQUIRE(j.code == 0);
    require_schema(nlohmann::json::parse(j.out), "trees.schema.json");

    // forest action on the worked three-tree forest
    const auto file = std::filesystem::temp_directory_path() / "oinv_forest_test.json";
    {
        std::ofstream out(file);
        out << R"(["(4,(2,(1,3)));","((1,3),(2,4));","(1,((2,4),3));"])";
    }
    const CliResult acted = run_cli("trees --act \"(1 3 5)(2 4)\" --forest " + file.string());
    REQUIRE(acted.code == 0);
    const auto forest = nlohmann::json::parse(acted.out);
    require_schema(forest, "forest.schema.json");
    REQUIRE(forest.size() == 3);
    REQUIRE(forest[0] == "(((1,4),3),2);"); // forest of (1 4)(2 6)(3 5)
    std::filesystem::remove(file);

    REQUIRE(run_cli("trees").code == 2);
    REQUIRE(run_cli("trees --act \"(1 2)\"").code == 2); // --forest missing
}

TEST_CASE("cli caps: environment override", "[cli]") {
    std::string big;
    for (int a = 1; a <= 18; a += 2) big += "(" + std::to_string(a) + " " + std::to_string(a + 1) + ")";
    REQUIRE(run_cli("trees --matching \"" + big + "\"").code == 3);
    const CliResult ok = run_cli("trees --matching \"" + big + "\"", "OINV_MAX_POINTS=18 ");
    REQUIRE(ok.code == 0);
    REQUIRE(run_cli("--max-points 18 trees --matching \"" + big + "\"").code == 0);
}
