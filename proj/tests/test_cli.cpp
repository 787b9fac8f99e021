#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "trigather/textio.hpp"

namespace fs = std::filesystem;

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string output;
};

std::string cli_path() {
    const char* env = std::getenv("TRIGATHER_CLI");
    REQUIRE(env != nullptr);
    return env;
}

CmdResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + cli_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult res;
    char buf[512];
    while (std::fgets(buf, sizeof buf, pipe)) res.output += buf;
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

fs::path temp_dir() {
    static const fs::path dir = [] {
        fs::path p = fs::temp_directory_path() / "trigather_cli_tests";
        fs::remove_all(p);
        fs::create_directories(p);
        return p;
    }();
    return dir;
}

std::string last_json_line(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string line, last;
    while (std::getline(in, line)) {
        if (!line.empty()) last = line;
    }
    return last;
}

}  // namespace

TEST_CASE("run: fsync line gathers with the expected epoch count") {
    const fs::path trace = temp_dir() / "line3.jsonl";
    const CmdResult res =
        run_cli("run --gen line:3:0 --scheduler fsync --trace " + trace.string());
    CAPTURE(res.output);
    REQUIRE(res.exit_code == 0);
    REQUIRE_THAT(res.output, Catch::Matchers::ContainsSubstring("outcome=gathered"));

    const auto footer = nlohmann::json::parse(last_json_line(trace.string()));
    REQUIRE(footer.at("outcome") == "gathered");
    REQUIRE(footer.at("epochs") == 2);
}

TEST_CASE("run: exceeding the round limit exits 3") {
    const CmdResult res = run_cli("run --gen line:3:0 --scheduler fsync --max-rounds 1");
    REQUIRE(res.exit_code == 3);
    REQUIRE_THAT(res.output,
                 Catch::Matchers::ContainsSubstring("outcome=max_rounds_exceeded"));
}

TEST_CASE("run: disconnected configuration exits 1 with a message") {
    const fs::path cfg = temp_dir() / "disconnected.cfg";
    trigather::atomic_write_file(cfg.string(), "trigrid 1\n0 0 1\n2 0 1\n");
    const CmdResult res = run_cli("run --config " + cfg.string());
    REQUIRE(res.exit_code == 1);
    REQUIRE_THAT(res.output, Catch::Matchers::ContainsSubstring(
                                 "disconnected initial configuration"));
}

TEST_CASE("run: malformed flags and files exit 1") {
    REQUIRE(run_cli("run").exit_code == 1);  // neither --config nor --gen
    REQUIRE(run_cli("run --gen line:3:0 --scheduler warp").exit_code == 1);
    REQUIRE(run_cli("run --gen line:zero:0").exit_code == 1);
    REQUIRE(run_cli("bogus-subcommand").exit_code == 1);

    const fs::path cfg = temp_dir() / "parity.cfg";
    trigather::atomic_write_file(cfg.string(), "trigrid 1\n0 1 1\n");
    const CmdResult res = run_cli("run --config " + cfg.string());
    REQUIRE(res.exit_code == 1);
    REQUIRE_THAT(res.output, Catch::Matchers::ContainsSubstring("line 2"));
}

TEST_CASE("run: TRIGATHER_SEED overrides the generation seed") {
    const fs::path t_env = temp_dir() / "env_seed.jsonl";
    const fs::path t_flag = temp_dir() / "flag_seed.jsonl";
    const CmdResult env_run =
        run_cli("run --gen blob:6:1 --scheduler fsync --trace " + t_env.string(),
                "TRIGATHER_SEED=42 ");
    const CmdResult flag_run =
        run_cli("run --gen blob:6:42 --scheduler fsync --trace " + t_flag.string());
    REQUIRE(env_run.exit_code == 0);
    REQUIRE(flag_run.exit_code == 0);
    REQUIRE(trigather::read_file(t_env.string()) ==
            trigather::read_file(t_flag.string()));
}

TEST_CASE("run: svg frames are written") {
    const fs::path prefix = temp_dir() / "frames";
    const CmdResult res = run_cli("run --gen line:3:0 --svg-every 1 --svg-prefix " +
                                  prefix.string());
    REQUIRE(res.exit_code == 0);
    REQUIRE(fs::exists(prefix.string() + "_0000.svg"));
    REQUIRE(fs::exists(prefix.string() + "_0001.svg"));
    REQUIRE(fs::exists(prefix.string() + "_0002.svg"));
    const std::string svg = trigather::read_file(prefix.string() + "_0000.svg");
    REQUIRE_THAT(svg, Catch::Matchers::ContainsSubstring("<svg"));
}

TEST_CASE("stats: line shape reports both bounds") {
    const CmdResult res = run_cli("stats --n-range 2..3 --seeds 2 --scheduler fsync --csv");
    CAPTURE(res.output);
    REQUIRE(res.exit_code == 0);
    REQUIRE_THAT(res.output, Catch::Matchers::ContainsSubstring(
                                 "n,runs,max_epochs,mean_epochs,bound,ok,lower_bound,lb_ok"));
    REQUIRE_THAT(res.output, Catch::Matchers::ContainsSubstring("2,2,1,1.00,8,pass,1,pass"));
    REQUIRE_THAT(res.output, Catch::Matchers::ContainsSubstring("3,2,2,2.00,10,pass,1,pass"));
}

TEST_CASE("stats: empty range exits 1") {
    REQUIRE(run_cli("stats --n-range 5..2").exit_code == 1);
    REQUIRE(run_cli("stats --n-range nope").exit_code == 1);
}

TEST_CASE("stats: a run missing its bound produces a fail row and exit 2") {
    // one round is never enough for three robots, so the run cannot gather
    const CmdResult res =
        run_cli("stats --n-range 3..3 --scheduler fsync --max-rounds 1 --csv");
    REQUIRE(res.exit_code == 2);
    REQUIRE_THAT(res.output, Catch::Matchers::ContainsSubstring("fail"));
}

TEST_CASE("run: monitors can be switched off") {
    const CmdResult res = run_cli("run --gen line:4:0 --monitors off");
    REQUIRE(res.exit_code == 0);
    REQUIRE_THAT(res.output, Catch::Matchers::ContainsSubstring("outcome=gathered"));
}

TEST_CASE("check: exhaustive accepts an explicit starting configuration") {
    const fs::path cfg = temp_dir() / "pair.cfg";
    trigather::atomic_write_file(cfg.string(), "trigrid 1\n0 0 1\n0 2 1\n");
    const CmdResult res = run_cli("check --mode exhaustive --config " + cfg.string() +
                                  " --window 2 --horizon 10");
    CAPTURE(res.output);
    REQUIRE(res.exit_code == 0);
}

TEST_CASE("check: impossibility mode classifies all seven choices") {
    const CmdResult res = run_cli("check --mode impossibility");
    CAPTURE(res.output);
    REQUIRE(res.exit_code == 0);
    REQUIRE_THAT(res.output, Catch::Matchers::ContainsSubstring("choice=stay fate=fixed-point"));
    REQUIRE_THAT(res.output, Catch::Matchers::ContainsSubstring("choice=toward fate=2-cycle"));
    REQUIRE_THAT(res.output, Catch::Matchers::ContainsSubstring("gathered=0/7"));
}

TEST_CASE("check: exhaustive mode verifies every fair schedule") {
    const CmdResult res = run_cli("check --mode exhaustive --n 2 --window 2 --horizon 10");
    CAPTURE(res.output);
    REQUIRE(res.exit_code == 0);
    REQUIRE_THAT(res.output,
                 Catch::Matchers::ContainsSubstring("gather under every fair schedule"));
}

TEST_CASE("check: too-small horizon exits 3 with a distinct message") {
    const CmdResult res = run_cli("check --mode exhaustive --n 3 --window 3 --horizon 2");
    CAPTURE(res.output);
    REQUIRE(res.exit_code == 3);
    REQUIRE_THAT(res.output, Catch::Matchers::ContainsSubstring("horizon too small"));
}
