#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(UNIPART_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data_file(const char* name) {
    return std::string(UNIPART_DATA_DIR) + "/" + name;
}

std::string write_temp(const char* name, const std::string& content) {
    std::string path = std::string("/tmp/") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

using Json = nlohmann::ordered_json;

} // namespace

TEST_CASE("usage errors exit with code 2 and help with 0") {
    CHECK_EQ(run_cli("--help").exit_code, 0);
    CHECK_EQ(run_cli("").exit_code, 2);
    CHECK_EQ(run_cli("analyze").exit_code, 2);
    CHECK_EQ(run_cli("frobnicate").exit_code, 2);
    CHECK_EQ(run_cli("discrete --n 4 --p 2 --format yaml").exit_code, 2);
    CHECK_EQ(run_cli("l2 --axis --re 1").exit_code, 2);
}

TEST_CASE("analyze handles the bundled examples and is byte-stable") {
    RunResult r = run_cli("analyze --input " + data_file("d32.json"));
    REQUIRE_EQ(r.exit_code, 0);
    Json report = Json::parse(r.output);
    CHECK_EQ(report["schema_version"], "1");
    CHECK_EQ(report["verdict"], "ContractibleByMainTheorem");
    CHECK_EQ(report["route"], "A");
    CHECK_EQ(report["contractible"], true);
    CHECK(report["witness"].is_object());

    RunResult again = run_cli("analyze --input " + data_file("d32.json"));
    CHECK_EQ(again.exit_code, 0);
    CHECK_EQ(again.output, r.output);

    // Prime read from the input file; route B example in dimension 3.
    RunResult h3 = run_cli("analyze --input " + data_file("h3.json"));
    REQUIRE_EQ(h3.exit_code, 0);
    Json h3_report = Json::parse(h3.output);
    CHECK_EQ(h3_report["verdict"], "ContractibleByDimensionCriterion");
    CHECK_EQ(h3_report["route"], "B");
    CHECK_EQ(h3_report["witness"]["mu"]["classes"].size(), 2);

    RunResult text = run_cli("analyze --input " + data_file("h3.json") + " --format text");
    CHECK_EQ(text.exit_code, 0);
    CHECK(text.output.find("verdict: ContractibleByDimensionCriterion") != std::string::npos);
}

TEST_CASE("analyze separates domain errors from schema errors") {
    std::string nonunitary =
        write_temp("cli_nonunitary.json", R"({"m":4,"generators":[[[2,0],[0,1]]]})");
    RunResult r = run_cli("analyze --input " + nonunitary + " --p 2");
    CHECK_EQ(r.exit_code, 1);
    Json err = Json::parse(r.output);
    CHECK_EQ(err["error"], "NotUnitary");

    std::string malformed = write_temp("cli_malformed.json", "not json at all");
    RunResult bad = run_cli("analyze --input " + malformed + " --p 2");
    CHECK_EQ(bad.exit_code, 2);
    CHECK_EQ(Json::parse(bad.output)["error"], "Schema");

    std::string missing_rows =
        write_temp("cli_missing_rows.json", R"({"generators":[{"m":4}]})");
    CHECK_EQ(run_cli("analyze --input " + missing_rows + " --p 2").exit_code, 2);

    CHECK_EQ(run_cli("analyze --input " + data_file("h3.json") + " --p 6").exit_code, 2);
    CHECK_EQ(run_cli("analyze --input /tmp/does_not_exist_anywhere.json --p 2").exit_code, 2);
}

TEST_CASE("l2 classifies the bundled sample points") {
    RunResult iso = run_cli("l2 --re 1 --im 0 --format text");
    CHECK_EQ(iso.exit_code, 0);
    CHECK_EQ(iso.output, "IsolatedPoint\n");

    RunResult circle = run_cli("l2 --im 3/2 --format json");
    REQUIRE_EQ(circle.exit_code, 0);
    Json j = Json::parse(circle.output);
    CHECK_EQ(j["classification"], "CircleComponent");
    CHECK_EQ(j["partition"]["classes"].size(), 2);

    RunResult axis = run_cli("l2 --axis");
    REQUIRE_EQ(axis.exit_code, 0);
    CHECK_EQ(Json::parse(axis.output)["classification"], "CircleComponent");

    RunResult off = run_cli("l2 --re 2 --im 1 --format text");
    CHECK_EQ(off.exit_code, 0);
    CHECK_EQ(off.output, "NotFixed\n");

    // z = 0 names no pair of lines: a domain error, not a usage error.
    CHECK_EQ(run_cli("l2 --re 0 --im 0").exit_code, 1);
    CHECK_EQ(run_cli("l2 --re nonsense").exit_code, 2);
}

TEST_CASE("discrete emits the implication column in every format") {
    RunResult csv = run_cli("discrete --n 4 --p 2 --format csv");
    REQUIRE_EQ(csv.exit_code, 0);
    std::string header = csv.output.substr(0, csv.output.find('\n'));
    CHECK_EQ(header,
             "subgroup_generators,order,elementary_abelian,fixed_poset_size,"
             "reduced_betti,torsion,acyclic,implication_holds");
    // Every data line ends with the implication column set to true.
    size_t lines = 0;
    for (size_t pos = csv.output.find('\n'); pos + 1 < csv.output.size();
         pos = csv.output.find('\n', pos + 1))
        ++lines;
    size_t true_tails = 0;
    for (size_t pos = 0; (pos = csv.output.find(",true\n", pos)) != std::string::npos; ++pos)
        ++true_tails;
    CHECK_EQ(lines, 7);
    CHECK_EQ(true_tails, 7);

    RunResult json = run_cli("discrete --n 3 --p 3 --format json");
    REQUIRE_EQ(json.exit_code, 0);
    Json table = Json::parse(json.output);
    CHECK_EQ(table["n"], 3);
    CHECK_EQ(table["p"], 3);
    for (const auto& row : table["rows"]) CHECK_EQ(row["implication_holds"], true);

    CHECK_EQ(run_cli("discrete --n 9 --p 2").exit_code, 1);
    CHECK_EQ(run_cli("discrete --n 4 --p 9").exit_code, 2);
}

TEST_CASE("homology reads a facet complex file") {
    RunResult r = run_cli("homology --input " + data_file("rp2.json"));
    REQUIRE_EQ(r.exit_code, 0);
    Json j = Json::parse(r.output);
    CHECK_EQ(j["reduced_betti"], Json::array({0, 0, 0}));
    CHECK_EQ(j["torsion"][1], Json::array({"2"}));
    CHECK_EQ(j["pretty"], "H~1 = Z/2");

    RunResult text = run_cli("homology --input " + data_file("rp2.json") + " --format text");
    CHECK_EQ(text.exit_code, 0);
    CHECK_EQ(text.output, "H~1 = Z/2\n");
}

TEST_CASE("output lands in the requested file") {
    std::string path = "/tmp/cli_out_report.json";
    std::remove(path.c_str());
    RunResult r = run_cli("analyze --input " + data_file("h3.json") + " --output " + path);
    CHECK_EQ(r.exit_code, 0);
    CHECK(r.output.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    Json j = Json::parse(in);
    CHECK_EQ(j["verdict"], "ContractibleByDimensionCriterion");
}
