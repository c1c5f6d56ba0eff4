// End-to-end checks of the installed CLI: exit codes, deterministic output,
// and schema-valid JSON reports.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "support/schema_check.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(STURMPART_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buf{};
    size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.output.append(buf.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "cli_test_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

nlohmann::json schema_root() {
    static nlohmann::json schema = [] {
        std::ifstream in(STURMPART_SCHEMA_PATH);
        REQUIRE(in.good());
        nlohmann::json j;
        in >> j;
        return j;
    }();
    return schema;
}

void check_schema(const std::string& output) {
    nlohmann::json j = nlohmann::json::parse(output);
    std::string why;
    bool ok = schema_check::validate_report(schema_root(), j, &why);
    INFO(why);
    CHECK(ok);
}

const char* kSturmianSpec = R"({
  "alpha": {"quadratic": {"p": -1, "q": 1, "d": 5, "r": 2}},
  "cuts": [{"orbit": 0, "label": "0"}, {"orbit": 1, "label": "1"}]
})";

} // namespace

TEST_CASE("cf table is correct and byte-identical across runs") {
    RunResult a = run_cli("cf --alpha golden --depth 6");
    CHECK(a.exit_code == 0);
    RunResult b = run_cli("cf --alpha golden --depth 6");
    CHECK(a.output == b.output);
    // Extract the q column.
    std::vector<std::string> qs;
    std::istringstream lines(a.output);
    std::string line;
    std::getline(lines, line); // header
    while (std::getline(lines, line)) {
        size_t tab = 0;
        std::vector<std::string> cols;
        std::istringstream ls(line);
        std::string col;
        while (std::getline(ls, col, '\t')) cols.push_back(col);
        REQUIRE(cols.size() >= 5);
        qs.push_back(cols[3]);
        (void)tab;
    }
    CHECK(qs == std::vector<std::string>{"1", "1", "2", "3", "5", "8", "13"});
    RunResult j = run_cli("cf --alpha golden --depth 6 --format json");
    CHECK(j.exit_code == 0);
    check_schema(j.output);
}

TEST_CASE("verify-thm2 on the Sturmian partition") {
    std::string spec = write_temp("p.json", kSturmianSpec);
    RunResult r = run_cli("partition verify-thm2 " + spec);
    CHECK(r.exit_code == 0);
    check_schema(r.output);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["holds"] == true);
    CHECK(j["bound"]["K"] == 9);
    CHECK(j["bound"]["M"] == 9);
}

TEST_CASE("verify-thm1 reports the collapse") {
    std::string spec = write_temp("p1.json", kSturmianSpec);
    RunResult r = run_cli("partition verify-thm1 " + spec);
    CHECK(r.exit_code == 0);
    check_schema(r.output);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["found"] == true);
    CHECK(j["k"] == 1);
}

TEST_CASE("partition refine emits names") {
    std::string spec = write_temp("p2.json", kSturmianSpec);
    RunResult r = run_cli("partition refine " + spec + " --n 3");
    CHECK(r.exit_code == 0);
    check_schema(r.output);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["arc_count"] == 4);
    CHECK(j["arcs"][0]["name"].get<std::string>().size() == 3);
}

TEST_CASE("sbc analyze on the example rule") {
    std::string rule = write_temp("rule.json", R"({
      "model": {"full_shift": ["0", "1"]},
      "width": 2,
      "table": {"00": "2", "01": "1", "10": "0", "11": "0"}
    })");
    RunResult r = run_cli("sbc analyze " + rule);
    CHECK(r.exit_code == 0);
    check_schema(r.output);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["minimal"] == true);
    CHECK(j["ignores_first_letter"] == false);
    CHECK(j["search"]["first_injective_n"].is_null());
}

TEST_CASE("sbc minimal-n on a Sturmian rule") {
    std::string rule = write_temp("srule.json", R"({
      "model": {"sturmian": {"quadratic": {"p": -1, "q": 1, "d": 5, "r": 2}}},
      "width": 2,
      "table": {"01": "1", "10": "0", "11": "2"}
    })");
    RunResult r = run_cli("sbc minimal-n " + rule);
    CHECK(r.exit_code == 0);
    check_schema(r.output);
    auto j = nlohmann::json::parse(r.output);
    CHECK(j["n_min"].is_number_integer());
    CHECK(j["n_min"].get<long long>() <= j["n_bound"].get<long long>());
}

TEST_CASE("demos") {
    RunResult ex1 = run_cli("demo example1 --n-max 6");
    CHECK(ex1.exit_code == 0);
    check_schema(ex1.output);
    RunResult sym = run_cli("demo symmetric --max-n 10");
    CHECK(sym.exit_code == 0);
    check_schema(sym.output);
    RunResult sym3 = run_cli("demo symmetric --max-n 10 --fold 3");
    CHECK(sym3.exit_code == 0);
}

TEST_CASE("towers rendering and codes") {
    RunResult show = run_cli("towers show --k 3");
    CHECK(show.exit_code == 0);
    CHECK(show.output.find("<0>") != std::string::npos);
    std::string spec = write_temp("p3.json", kSturmianSpec);
    RunResult with_codes = run_cli("towers show --k 3 --partition " + spec);
    CHECK(with_codes.exit_code == 0);
    RunResult codes = run_cli("towers codes --k 2 --partition " + spec);
    CHECK(codes.exit_code == 0);
    check_schema(codes.output);
    RunResult names = run_cli("towers names --k 1 --partition " + spec);
    CHECK(names.exit_code == 0);
    check_schema(names.output);
    CHECK(nlohmann::json::parse(names.output)["holds"] == true);
    // Render cap produces the resource-cap exit code.
    RunResult too_big = run_cli("towers show --k 30");
    CHECK(too_big.exit_code == 3);
}

TEST_CASE("verify-thm1 exhausting its search cap exits with the resource code") {
    std::string spec = write_temp("p5.json", R"({
      "alpha": {"quadratic": {"p": -1, "q": 1, "d": 5, "r": 2}},
      "cuts": [{"orbit": 0, "label": "A"}, {"orbit": 2, "label": "B"},
               {"orbit": 4, "label": "C"}]})");
    RunResult r = run_cli("partition verify-thm1 " + spec + " --max-power 1");
    CHECK(r.exit_code == 3);
}

TEST_CASE("experiment random is deterministic per seed") {
    RunResult a = run_cli("experiment random --trials 5 --n 6 --labels 2 --seed 9");
    CHECK(a.exit_code == 0);
    RunResult b = run_cli("experiment random --trials 5 --n 6 --labels 2 --seed 9");
    CHECK(a.output == b.output);
    RunResult c = run_cli("experiment random --trials 5 --n 6 --labels 2 --seed 10");
    CHECK(c.exit_code == 0);
}

TEST_CASE("error exit codes") {
    RunResult missing = run_cli("partition verify-thm2 /nonexistent.json");
    CHECK(missing.exit_code == 2);
    std::string bad = write_temp("bad.json", R"({"alpha": {"quadratic":
      {"p": 0, "q": 1, "d": 4, "r": 2}}, "cuts": [{"orbit": 0, "label": "A"}]})");
    RunResult square_d = run_cli("partition verify-thm2 " + bad);
    CHECK(square_d.exit_code == 2);
    std::string trivial = write_temp("triv.json", R"({
      "alpha": {"quadratic": {"p": -1, "q": 1, "d": 5, "r": 2}},
      "cuts": [{"orbit": 0, "label": "A"}, {"orbit": 1, "label": "A"}]})");
    RunResult triv = run_cli("partition verify-thm2 " + trivial);
    CHECK(triv.exit_code == 2);
    // Resource caps: a tiny power cap cannot reach the bound.
    std::string spec = write_temp("p4.json", kSturmianSpec);
    RunResult capped = run_cli("--max-power 5 partition verify-thm2 " + spec);
    CHECK(capped.exit_code == 3);
}
