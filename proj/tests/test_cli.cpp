#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

#ifndef EVDEG_CLI_PATH
#error "EVDEG_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(EVDEG_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = out;
    return r;
}

const std::string& fixture_dir() {
    static const std::string dir = [] {
        auto d = std::filesystem::temp_directory_path() / "evdeg_cli_fixtures";
        std::filesystem::create_directories(d);
        auto put = [&d](const char* name, const char* text) {
            std::ofstream out(d / name, std::ios::binary);
            out << text;
        };
        put("k1.el", "1 0\n");
        put("k2.el", "2 1\n0 1\n");
        put("k3.el", "3 3\n0 1\n0 2\n1 2\n");
        put("p3.el", "3 2\n0 1\n1 2\n");
        put("k2.g6", "A_\n");
        put("bad.el", "2 1\n0 5\n");
        return d.string();
    }();
    return dir;
}

std::string fx(const char* name) { return fixture_dir() + "/" + name; }

}  // namespace

TEST_CASE("compute reads edge lists and graph6") {
    RunResult r = run_cli("compute --input " + fx("k3.el"));
    REQUIRE(r.exit_code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["n"] == 3);
    CHECK(j["M1"] == 12);
    CHECK(j["eta"] == 1);
    CHECK(j["Mev"] == 27);
    CHECK(j["NKev"] == "27");
    CHECK(j["mMev"] == "1/3");

    RunResult g6 = run_cli("compute --format graph6 --input " + fx("k2.g6"));
    REQUIRE(g6.exit_code == 0);
    CHECK(nlohmann::json::parse(g6.out)["Mev"] == 4);

    RunResult stdin_run = run_cli("compute --input - < " + fx("k1.el"));
    REQUIRE(stdin_run.exit_code == 0);
    nlohmann::json k1 = nlohmann::json::parse(stdin_run.out);
    CHECK(k1["Mev"] == 0);
    CHECK(k1["NKev"] == "1");
}

TEST_CASE("compute honors the selection flag") {
    nlohmann::json classic =
        nlohmann::json::parse(run_cli("compute --select classic --input " + fx("k2.el")).out);
    CHECK(classic.contains("M1"));
    CHECK_FALSE(classic.contains("Mev"));
    nlohmann::json ev =
        nlohmann::json::parse(run_cli("compute --select ev --input " + fx("k2.el")).out);
    CHECK_FALSE(ev.contains("M1"));
    CHECK(ev.contains("Rev"));
}

TEST_CASE("transform emits canonical edge lists") {
    CHECK(run_cli("transform --op line --input " + fx("p3.el")).out == "2 1\n0 1\n");
    CHECK(run_cli("transform --op to --input " + fx("k1.el")).out == "1 0\n");
    RunResult sd = run_cli("transform --op sd --input " + fx("k3.el"));
    CHECK(sd.exit_code == 0);
    CHECK(sd.out.substr(0, 4) == "6 6\n");
}

TEST_CASE("products and f-sums from the command line") {
    CHECK(run_cli("product --op union " + fx("k1.el") + " " + fx("k1.el")).out == "2 0\n");
    CHECK(run_cli("product --op cartesian " + fx("k2.el") + " " + fx("k2.el")).out ==
          "4 4\n0 1\n0 2\n1 3\n2 3\n");
    std::string via_product =
        run_cli("product --op sum-sd " + fx("k2.el") + " " + fx("k2.el")).out;
    std::string via_fsum = run_cli("fsum --kind sd " + fx("k2.el") + " " + fx("k2.el")).out;
    CHECK(via_product == via_fsum);
    CHECK(via_product == "6 6\n0 1\n0 4\n1 5\n2 3\n2 4\n3 5\n");

    RunResult joined = run_cli("product --op join - " + fx("k2.el") + " < " + fx("k2.el"));
    CHECK(joined.exit_code == 0);
    CHECK(joined.out.substr(0, 4) == "4 6\n");
}

TEST_CASE("generator subcommand") {
    CHECK(run_cli("gen --family star --n 3").out == "4 3\n0 1\n0 2\n0 3\n");
    CHECK(run_cli("gen --family cycle --a 4").out == "4 4\n0 1\n0 3\n1 2\n2 3\n");
    RunResult gnp = run_cli("gen --family random_gnp --n 8 --p 0.5 --seed 5");
    CHECK(gnp.exit_code == 0);
    CHECK(gnp.out == run_cli("gen --family random_gnp --n 8 --p 0.5 --seed 5").out);
}

TEST_CASE("verify runs the builtin corpus clean") {
    auto report_path = std::filesystem::temp_directory_path() / "evdeg_cli_report.json";
    RunResult r = run_cli("verify --suite all --corpus builtin --seed 42 --report " +
                          report_path.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());  // silent on success when the report goes to a file
    std::ifstream in(report_path);
    nlohmann::json root = nlohmann::json::parse(in);
    CHECK(root["summary"]["T4"]["fail"] == 0);
    CHECK(root["summary"]["T9i"]["skip"] == 51);
    std::filesystem::remove(report_path);

    RunResult lemmas = run_cli("verify --suite lemmas --corpus builtin");
    CHECK(lemmas.exit_code == 0);
    CHECK(nlohmann::json::parse(lemmas.out)["suite"] == "lemmas");
}

TEST_CASE("verify is deterministic and supports CSV") {
    std::string spec = "verify --corpus random --samples 10 --n 6 --pair-samples 5 --pair-n 5 "
                       "--seed 3 --report -";
    RunResult a = run_cli(spec);
    RunResult b = run_cli(spec);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    RunResult csv = run_cli("verify --suite properties --corpus builtin --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.rfind("id,input_g,input_h,", 0) == 0);
}

TEST_CASE("failures exit with the usage/IO code") {
    CHECK(run_cli("compute --input " + fx("bad.el")).exit_code == 2);
    CHECK(run_cli("compute --input /nonexistent/file.el").exit_code == 2);
    CHECK(run_cli("transform --op bogus --input " + fx("k2.el")).exit_code == 2);
    CHECK(run_cli("product --op join - - < " + fx("k2.el")).exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);  // a subcommand is required
    CHECK(run_cli("gen --family bogus --n 3").exit_code == 2);
    CHECK(run_cli("verify --corpus random --n 1").exit_code == 2);
}
