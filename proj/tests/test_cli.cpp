#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "json.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    Run r;
    std::string cmd = std::string("'") + CLI_PATH + "' " + args + " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    char buf[4096];
    std::size_t k;
    while ((k = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, k);
    int st = pclose(f);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

nlohmann::json json_of(const std::string& args) {
    Run r = run(args + " --format json");
    REQUIRE(r.code == 0);
    return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("cli: dims") {
    CHECK(json_of("dims P 2 1")["dim"] == 3);
    CHECK(json_of("dims \"P'\" 4 2")["dim"] == 6);
    CHECK(json_of("dims graphs 2 1")["dim"] == 3);
    CHECK(json_of("dims P 4 2 --strict")["dim"] == 6);
    Run t = run("dims P 3 1 --format text");
    CHECK(t.code == 0);
    CHECK(t.out == "10\n");
    Run c = run("dims P 2 1 --format csv");
    CHECK(c.out == "functor,p,q,dim\nP,2,1,3\n");
}

TEST_CASE("cli: compare") {
    auto a = json_of("compare --n 4 --degree 1");
    REQUIRE(a.size() == 1);
    CHECK(a[0]["dim"] == 24);
    CHECK(a[0]["dim_R"] == 24);
    CHECK(a[0]["injective"] == true);
    CHECK(a[0]["surjective"] == true);
    auto b = json_of("compare --n 2 --degree 0");
    CHECK(b[0]["dim"] == 1);
    CHECK(b[0]["dim_R"] == 1);
    auto r = json_of("compare --n-range 3:5 --degree 1");
    CHECK(r.size() == 3);
}

TEST_CASE("cli: decompose") {
    auto one = json_of("decompose --degree 1");
    REQUIRE(one.size() == 1);
    CHECK(one[0]["terms"].size() == 2);
    CHECK(one[0]["convention"] == "mu-dual");
    auto raw = json_of("decompose --degree 1 --convention lambda-dual");
    CHECK(raw[0]["convention"] == "lambda-dual");
    auto zero = json_of("decompose --degree 0");
    REQUIRE(zero[0]["terms"].size() == 1);
    CHECK(zero[0]["terms"][0]["lambda"].empty());
    CHECK(zero[0]["terms"][0]["mu"].empty());
    CHECK(json_of("decompose --degree 4 --with-y").size() == 2);
}

TEST_CASE("cli: other subcommands") {
    CHECK(json_of("coend --n 3 --degree 1")[0]["dim"] == 9);
    CHECK(json_of("albanese --n 3 --degree 1")[0]["dim"] == 9);
    auto k = json_of("kan K 1 1 --n 3");
    CHECK(k.dump().find("\"rank\":9") != std::string::npos);
    auto nf = json_of("normalize \"V=1; out=[(v1→v1.in2)]; legs=[(1→v1.in1)]\" --p 1 --q 0");
    CHECK(nf["partition"] == "{1;·}");
}

TEST_CASE("cli: selftest quick") {
    Run r = run("selftest quick");
    CHECK(r.code == 0);
}

TEST_CASE("cli: errors and guardrails") {
    CHECK(run("dims Q 1 1").code == 2);
    CHECK(run("dims P -1 2").code == 2);
    CHECK(run("no-such-command").code == 2);
    CHECK(run("dims P 12 2").code == 3);
    CHECK(run("decompose --degree 6").code == 3);
    CHECK(run("--help").code == 0);
    Run forced = run("dims P 3 1 --format text --force-size");
    CHECK(forced.out == "10\n");
}
