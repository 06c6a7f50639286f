#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(OCCTOOL_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) result.output.append(buf.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("model build emits the canonical dump") {
    auto r = run("model build --weights mb --n 2 --r 2");
    REQUIRE(r.exit_code == 0);
    json dump = json::parse(r.output);
    CHECK(dump["n"] == 2);
    CHECK(dump["r"] == 2);
    REQUIRE(dump["pmf"].size() == 3);
    CHECK(dump["pmf"][0]["x"] == json::array({0, 2}));
    CHECK(dump["pmf"][0]["p"] == "1/4");
    CHECK(dump["pmf"][1]["p"] == "1/2");
}

TEST_CASE("identical invocations are byte-identical") {
    auto a = run("model build --weights pc:2 --n 3 --r 4");
    auto b = run("model build --weights pc:2 --n 3 --r 4");
    CHECK(a.output == b.output);
}

TEST_CASE("transform pipeline through files") {
    auto build = run("model build --weights be --n 4 --r 2 --dump " BUILD_DIR "/be42.json");
    REQUIRE(build.exit_code == 0);
    auto merged = run("transform merge " BUILD_DIR "/be42.json --s 2");
    REQUIRE(merged.exit_code == 0);
    json m = json::parse(merged.output);
    CHECK(m["n"] == 2);
    CHECK(m["pmf"][2]["x"] == json::array({2, 0}));
    CHECK(m["pmf"][2]["p"] == "3/10");

    auto dropped = run("transform drop " BUILD_DIR "/be42.json");
    REQUIRE(dropped.exit_code == 0);
    CHECK(json::parse(dropped.output)["r"] == 1);

    auto cond = run("transform condition " BUILD_DIR "/be42.json --prefix-n 2 --prefix-r 1");
    REQUIRE(cond.exit_code == 0);
    CHECK(json::parse(cond.output)["n"] == 2);
}

TEST_CASE("verify subcommands pass on their reference grids") {
    CHECK(run("verify closure --weights be --n 2 --r 2 --s 2").exit_code == 0);
    CHECK(run("verify composition --weights be --N 12 --r 3 --s1 2 --s2 3").exit_code == 0);
    CHECK(run("verify star --weights mb --n 3 --r 4").exit_code == 0);
    CHECK(run("verify drop-commute --weights mb --N 4 --r 3 --s 2").exit_code == 0);
    CHECK(run("verify cond-commute --weights be --Ns 8 --R 3 --n 2 --r 2 --s 2").exit_code == 0);
    CHECK(run("verify lambda-independence --weights mb --n 3 --r 3").exit_code == 0);
    CHECK(run("verify uosp --weights fd --t 2 --k 2").exit_code == 0);
    CHECK(run("verify norm-identity --weights mb --n 2 --r 4 --s 2").exit_code == 0);
}

TEST_CASE("verify closure reports the merged pmf") {
    auto r = run("verify closure --weights be --n 2 --r 2 --s 2");
    json report = json::parse(r.output);
    CHECK(report["result"] == "pass");
    CHECK(report["detail"]["pmf"][2]["p"] == "3/10");
}

TEST_CASE("verify star fails with a witness exit code") {
    std::ofstream(BUILD_DIR "/bad_weights.json")
        << R"({"x_max": 2, "values": ["1", "1", "5"]})";
    auto r = run("verify star --weights " BUILD_DIR "/bad_weights.json --n 3 --r 3");
    CHECK(r.exit_code == 1);
    CHECK(json::parse(r.output)["result"] == "fail");
}

TEST_CASE("deconvolve subcommand") {
    auto r = run("deconvolve --weights pc:2 --s 2 --x-max 5");
    REQUIRE(r.exit_code == 0);
    json report = json::parse(r.output);
    CHECK(report["status"] == "decomposable");
    CHECK(report["factor"]["values"] == json::array({"1", "1", "1", "1", "1", "1"}));

    auto fd = run("deconvolve --weights fd --s 2 --x-max 4");
    json fd_report = json::parse(fd.output);
    CHECK(fd_report["status"] == "indecomposable");
    CHECK(fd_report["certificate"]["x"] == 2);
    CHECK(fd_report["certificate"]["value"] == "-1/8");

    auto germ = run("deconvolve --weights pc:3 --max-s 4 --x-max 5");
    json germ_report = json::parse(germ.output);
    CHECK(germ_report["status"] == "merged");
    CHECK(germ_report["s"] == 2);  // binom(x+2,2) is already a convolution square
}

TEST_CASE("maxent subcommands") {
    auto solve = run("maxent solve --weights mb --n 2 --r 3");
    REQUIRE(solve.exit_code == 0);
    json sol = json::parse(solve.output);
    double lambda = std::stod(sol["multipliers"][0].get<std::string>());
    CHECK(lambda == doctest::Approx(-1.0).epsilon(1e-6));

    auto consistent = run("maxent consistency --weights mb --n 4 --n2 2 --r 3");
    CHECK(consistent.exit_code == 0);
    CHECK(json::parse(consistent.output)["consistent"] == true);

    auto inconsistent = run("maxent consistency --weights be --n 4 --n2 2 --r 2");
    CHECK(inconsistent.exit_code == 1);
    json rep = json::parse(inconsistent.output);
    CHECK(rep["consistent"] == false);
    CHECK(std::stod(rep["gap"].get<std::string>()) > 1e-3);
}

TEST_CASE("error contract") {
    CHECK(run("verify bogus-id").exit_code == 2);
    CHECK(run("model build --weights fd --n 2 --r 4").exit_code == 3);
    CHECK(run("nonsense").exit_code == 2);
}
