// End-to-end tests of the installed binary: argument handling, exit codes,
// and byte-level reproducibility of the emitted payloads.

#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

const char* cli_path() { return OCTRMT_CLI_PATH; }

int run(const std::string& args) {
    const std::string cmd = std::string(cli_path()) + " " + args;
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("same seed twice produces byte-identical csv") {
    REQUIRE(run("spacing --ensemble gauss2 --trials 2000 --bins 30 --seed 42 "
                "--out csv --out-file /tmp/octrmt_a.csv") == 0);
    REQUIRE(run("spacing --ensemble gauss2 --trials 2000 --bins 30 --seed 42 "
                "--out csv --out-file /tmp/octrmt_b.csv") == 0);
    const std::string a = slurp("/tmp/octrmt_a.csv");
    const std::string b = slurp("/tmp/octrmt_b.csv");
    CHECK(!a.empty());
    CHECK(a == b);
    CHECK(a.rfind("bin_center,empirical_density,surmise_density\n", 0) == 0);
}

TEST_CASE("worker count does not change the payload") {
    REQUIRE(run("smallest --n 2 --trials 2000 --bins 25 --seed 9 --workers 1 "
                "--out json --out-file /tmp/octrmt_w1.json") == 0);
    REQUIRE(run("smallest --n 2 --trials 2000 --bins 25 --seed 9 --workers 4 "
                "--out json --out-file /tmp/octrmt_w4.json") == 0);
    CHECK(slurp("/tmp/octrmt_w1.json") == slurp("/tmp/octrmt_w4.json"));
}

TEST_CASE("json output parses and carries the documented fields") {
    REQUIRE(run("spacing --ensemble gauss3 --trials 1000 --bins 20 --seed 3 "
                "--out json --out-file /tmp/octrmt_g3.json") == 0);
    const nlohmann::json j = nlohmann::json::parse(slurp("/tmp/octrmt_g3.json"));
    CHECK(j.at("command") == "spacing");
    CHECK(j.at("spec").at("ensemble") == "gauss3");
    CHECK(j.at("stats").contains("ks_s21"));
    CHECK(j.at("stats").contains("ks_s32"));
    CHECK(j.at("histogram").at("density").size() == 20);
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run("spacing --ensemble nonsense --trials 10 --seed 1 "
              ">/dev/null 2>&1") == 1);
    CHECK(run("no-such-command >/dev/null 2>&1") == 1);
    CHECK(run("smallest --n 1 --trials 10 --seed 1 >/dev/null 2>&1") == 1);
}

TEST_CASE("omitting the seed still reports one for replay") {
    REQUIRE(run("detsign --trials 5 --out csv --out-file /tmp/octrmt_d.csv "
                "2>/tmp/octrmt_d.err") == 0);
    const std::string err = slurp("/tmp/octrmt_d.err");
    CHECK(err.find("seed: ") != std::string::npos);
}

TEST_CASE("diagonal-only positivity run reports a zero rate") {
    REQUIRE(run("jordan-positivity --trials 200 --seed 8 --diagonal-only "
                "--out csv --out-file /tmp/octrmt_j.csv") == 0);
    const std::string csv = slurp("/tmp/octrmt_j.csv");
    CHECK(csv.find("negative_rate,0\n") != std::string::npos);
}

TEST_CASE("verify exits clean, and exits 3 naming the broken invariant under fault injection") {
    CHECK(run("verify --quick >/tmp/octrmt_v.out 2>&1") == 0);

    CHECK(run("verify --quick --inject-table-fault >/tmp/octrmt_vf.out 2>&1") == 3);
    const std::string out = slurp("/tmp/octrmt_vf.out");
    CHECK(out.find("[FAIL] octonion.norm-multiplicativity") != std::string::npos);
}
