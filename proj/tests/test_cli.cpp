#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

using Json = nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
};

// Runs the CLI with stdin fed from a temp file; captures stdout only.
RunResult run_cli(const std::string& args, const std::string& input = "",
                  const std::string& env = "") {
    static int serial = 0;
    std::string cmd = env.empty() ? std::string() : env + " ";
    cmd += std::string(JKRES_BIN) + " " + args;
    std::string path;
    if (!input.empty()) {
        path = "/tmp/jkres_cli_" + std::to_string(::getpid()) + "_" +
               std::to_string(serial++) + ".json";
        std::ofstream f(path);
        f << input;
        f.close();
        cmd += " < " + path;
    }
    cmd += " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
    int status = pclose(p);
    if (!path.empty()) ::unlink(path.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const char* kTriple =
    R"({"betas": [[1,0],[1,0],[1,0],[0,1],[0,1],[0,1],[1,1],[1,1],[1,1]], "xi": [5, 2]})";

} // namespace

TEST_CASE("count and volume on worked instances") {
    RunResult r = run_cli("count", kTriple);
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["count"] == "321");

    r = run_cli("volume", R"({"betas": [[1],[1]], "xi": [5]})");
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["volume"] == "5");

    r = run_cli("count --format text", kTriple);
    CHECK(r.code == 0);
    CHECK(r.out == "count: 321\n");
}

TEST_CASE("non-unimodular count gates, oracle route does not") {
    std::string inst = R"({"betas": [[2],[1]], "xi": [4]})";
    RunResult gated = run_cli("count", inst);
    CHECK(gated.code == 4);
    CHECK(Json::parse(gated.out)["error"] == "NonUnimodular");
    RunResult dp = run_cli("count --oracle", inst);
    CHECK(dp.code == 0);
    CHECK(Json::parse(dp.out)["count"] == "3");
}

TEST_CASE("validation failures exit 2") {
    CHECK(run_cli("count", "{not json").code == 2);
    CHECK(run_cli("count", R"({"betas": [[1],[1]]})").code == 2);
    CHECK(run_cli("volume", R"({"betas": [[1],[-1]], "xi": [0]})").code == 2);
}

TEST_CASE("budget exhaustion exits 3 and the flag beats the environment") {
    std::string inst = R"({"betas": [[1],[1],[1]], "xi": [1000000]})";
    RunResult env_only = run_cli("oracle-count", inst, "JKRES_BUDGET=100");
    CHECK(env_only.code == 3);
    CHECK(Json::parse(env_only.out)["error"] == "BudgetExceeded");
    RunResult flag_wins = run_cli("oracle-count --budget 100", inst, "JKRES_BUDGET=999999999");
    CHECK(flag_wins.code == 3);
    RunResult env_ok = run_cli("oracle-count", inst, "JKRES_BUDGET=99999999");
    CHECK(env_ok.code == 0);
    CHECK(Json::parse(env_ok.out)["count"] == "500001500001");
}

TEST_CASE("chamber output") {
    RunResult r = run_cli("chamber", R"({"betas": [[1,0],[0,1],[1,1]], "xi": [2, 1]})");
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["feasible_bases"] == Json::parse("[[0,1],[0,2]]"));
}

TEST_CASE("ehrhart output") {
    RunResult r = run_cli("ehrhart", R"({"betas": [[1],[1],[1]], "xi": [1]})");
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["ehrhart"] == Json::parse(R"(["1/2", "3/2", "1"])"));
}

TEST_CASE("check compares the two routes") {
    std::string inst =
        R"({"betas": [[1,0,0],[0,1,0],[0,0,1],[1,1,0],[0,1,1],[1,1,1]], "xi": [3,2,4]})";
    RunResult r = run_cli("check", inst);
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["agree"] == true);
    CHECK(j["count"]["residues"] == j["count"]["oracle"]);
    CHECK(j["volume"]["residues"] == j["volume"]["oracle"]);
}

TEST_CASE("gen subcommands") {
    RunResult k = run_cli("gen kostant --rank 2");
    CHECK(k.code == 0);
    CHECK(Json::parse(k.out)["betas"] == Json::parse("[[1,0],[0,1],[1,1]]"));

    RunResult t = run_cli("gen transport --rows 2,1 --cols 1,2");
    CHECK(t.code == 0);
    Json tj = Json::parse(t.out);
    CHECK(tj["xi"] == Json::parse(R"(["2","1","1"])"));
    RunResult counted = run_cli("count", t.out);
    CHECK(counted.code == 0);
    CHECK(Json::parse(counted.out)["count"] == "2");

    RunResult n = run_cli("gen network --arcs '0>1,1>2,0>2'");
    CHECK(n.code == 0);
    CHECK(Json::parse(n.out)["betas"] == Json::parse("[[1,-1],[0,1],[1,0]]"));

    CHECK(run_cli("gen network --arcs '0>1,2>3'").code == 2);
}

TEST_CASE("selftest quick passes and output is byte-stable") {
    RunResult a = run_cli("selftest --quick");
    CHECK(a.code == 0);
    Json j = Json::parse(a.out);
    CHECK(j["all_passed"] == true);
    RunResult b = run_cli("selftest --quick");
    CHECK(b.out == a.out);

    RunResult c1 = run_cli("count", kTriple);
    RunResult c2 = run_cli("count", kTriple);
    CHECK(c1.out == c2.out);
}

TEST_CASE("fault injection makes the selftest fail") {
    RunResult r = run_cli("selftest --quick", "", "JKRES_FAULT_TODD=1");
    CHECK(r.code == 1);
    Json j = Json::parse(r.out);
    CHECK(j["all_passed"] == false);
    bool c1_failed = false;
    for (const auto& entry : j["criteria"])
        if (entry["number"] == 1) c1_failed = !entry["passed"].get<bool>();
    CHECK(c1_failed);
}
