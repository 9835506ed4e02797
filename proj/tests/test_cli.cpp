#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(GCODIM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
        out.append(buf.data(), n);
    int st = pclose(p);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string data(const char* f) { return std::string(GCODIM_DATA_DIR) + "/" + f; }

} // namespace

TEST_CASE("analyze") {
    auto r = run("analyze --structure " + data("d3_g.json"));
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["H_g"] == json::array({"e"}));
    CHECK(j["dim_Ae"] == 14);
    CHECK(j["b"] == "-13/2");
    CHECK(j["d"] == 36);
    CHECK(j["component_dims"]["s"] == 12);

    j = json::parse(run("analyze --structure " + data("trivial_m2.json")).out);
    CHECK(j["dim_Ae"] == 4);
    CHECK(j["b"] == "-3/2");
    CHECK(j["d"] == 4);

    j = json::parse(run("analyze --structure " + data("fine_s3.json")).out);
    CHECK(j["Hprime_order"] == 3);
    CHECK(j["b"] == "0");
    CHECK(j["d"] == 6);

    j = json::parse(run("analyze --structure " + data("custom_group.json")).out);
    CHECK(j["H_g"] == json::array({"e"}));
}

TEST_CASE("exit codes") {
    CHECK(run("analyze --structure " + data("malformed.json")).code == 2);
    CHECK(run("analyze --structure " + data("coset_collision.json")).code == 3);
    CHECK(run("analyze --structure /nonexistent/file.json").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("codim --structure " + data("z2.json") + " --mode bogus").code == 2);
    CHECK(run("verify --fleet " + data("small_fleet.json") + " --inject-fault t-graded").code == 1);
}

TEST_CASE("verify reports") {
    auto e = run("verify --no-timing --fleet " + data("empty_fleet.json"));
    CHECK(e.code == 0);
    CHECK(json::parse(e.out)["records"].empty());

    auto a = run("verify --no-timing --jobs 1 --fleet " + data("small_fleet.json"));
    auto b = run("verify --no-timing --jobs 3 --fleet " + data("small_fleet.json"));
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto j = json::parse(a.out);
    CHECK(j["failed"] == 0);
    CHECK(j["total"].get<int>() > 0);
    CHECK_FALSE(j["records"][0].contains("elapsed_ms"));
}

TEST_CASE("sequences") {
    auto r = run("codim --structure " + data("trivial_m2.json") + " --n-range 1..3 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out == "n,value\n1,1\n2,2\n3,6\n");

    r = run("codim --structure " + data("trivial_m2.json") + " --n 2 --mode proxy");
    auto j = json::parse(r.out);
    CHECK(j["values"][0]["value"] == "5");
    CHECK(j["tag"] == "asymptotic proxy, not exact c_n");

    r = run("codim --structure " + data("z2.json") + " --n-range 0..3 --mode t --exact");
    j = json::parse(r.out);
    CHECK(j["values"][3]["value"] == "10");

    r = run("converge --structure " + data("trivial_m2.json") + " --n 250,500 --mode printed");
    CHECK(r.code == 0);
    CHECK(r.out.rfind("n,exact,asymptotic,ratio\n", 0) == 0);
    CHECK(r.out.find("# DIVERGENT-FROM-1") != std::string::npos);
    r = run("converge --structure " + data("trivial_m2.json") + " --n 250,500");
    CHECK(r.out.find("DIVERGENT") == std::string::npos);
}

TEST_CASE("asymptotic constants") {
    auto j = json::parse(
        run("asym --structure " + data("d3_g.json") + " --target c --mode printed --digits 12").out);
    CHECK(j["constant_exact"]["q"] == "6561");
    CHECK(j["constant_exact"]["r"] == "6");
    CHECK(j["constant_exact"]["pi_pow"] == -5);
    CHECK(j["constant_float"] == "918.694214099");
    CHECK(j["b"] == "-13/2");

    j = json::parse(run("asym --structure " + data("trivial_m2.json") + " --target t").out);
    CHECK(j["constant_float"] == "0.564189583548");

    j = json::parse(run("asym --structure " + data("fine_s3.json")).out);
    CHECK(j["constant_exact"]["q"] == "3");
}

TEST_CASE("example-d3 and helpers") {
    auto r = run("example-d3");
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["fingerprint"]["reason"] == "component of dimension 12 unmatched");
    CHECK(j["gradings"][0]["alpha_float"] == j["gradings"][1]["alpha_float"]);
    CHECK(j["gradings"][1]["b"] == "-13/2");

    CHECK(run("partition-dim 3,2,1").out == "16\n");
    CHECK(run("t-ungraded --n 4 --m 2").out == "14\n");
    j = json::parse(run("group Q8").out);
    CHECK(j["commutator_subgroup"].size() == 2);
}
