#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(TDL_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("invalid group parameters exit with 2") {
    CHECK(run("anyons --q 10").code == 2);
    CHECK(run("anyons --q 11 --p 3").code == 2);
    CHECK(run("anyons --n 10").code == 2);
    CHECK(run("anyons --u 7").code == 2);
}

TEST_CASE("inconsistent coloring exits with 3") {
    CHECK(run("invariant --braid s1 --strands 2 --colors 'B_{1,0}' 'A_{1,4}'").code == 3);
    CHECK(run("invariant --braid 's1 s1' --strands 2 --colors 'B_{1,0}' 'A_{1,4}'").code == 0);
}

TEST_CASE("anyons lists 49 labels") {
    const Run r = run("anyons --format json");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.size() == 49);
    CHECK(j[0]["label"] == "I_0");
    CHECK(j[0]["theta"]["coeffs"][0] == "1/1");
}

TEST_CASE("invariant prints an exact JSON value") {
    const Run r = run("invariant --format json --braid '[-2,-2,1,-2,1]' --strands 3 --colors 'B_{1,0}' A1_4 B1_0");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["components"] == 2);
    CHECK(j["zero_framed"]["order"] == 11);
}

TEST_CASE("modular data and lens spaces on a small group") {
    const Run m = run("modular --q 7 --p 3 --n 2 --u 1");
    CHECK(m.code == 0);
    CHECK(m.out.find("PASS") != std::string::npos);
    const Run l = run("lens --q 7 --p 3 --n 2 --surgery 1/1 --format json");
    REQUIRE(l.code == 0);
    CHECK(nlohmann::json::parse(l.out)["Z"]["coeffs"][0] == "1/21");
}

TEST_CASE("distinguish reports the obstruction for u = 1 and u = 4") {
    const Run r = run("distinguish --u 1 4");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("(S,T)   u=1 vs u=4: EQUIVALENT") != std::string::npos);
    CHECK(r.out.find("(S,T,W) u=1 vs u=4: NOT-EQUIVALENT") != std::string::npos);
    CHECK(r.out.find("W requires {A_{1,1}, A_{2,6}}") != std::string::npos);
}

TEST_CASE("quandle check and csv output") {
    CHECK(run("quandle --braid 's1^3' --strands 2").code == 0);
    const Run c = run("modular --q 7 --p 3 --n 2 --format csv");
    CHECK(c.out.find("row,col,re,im") != std::string::npos);
}

TEST_CASE("usage errors are not verification failures") {
    CHECK(run("").code != 0);
    CHECK(run("lens --surgery 4/2").code == 1);
    CHECK(run("invariant --braid s9 --strands 2 --colors I_0").code == 1);
}
