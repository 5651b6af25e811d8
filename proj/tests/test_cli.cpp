// Integration tests driving the compiled CLI through its public surface.
// The binary path arrives in ELLSURF_BIN (set by CMake).

#include "ellsurf/report.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

using namespace ellsurf;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("ELLSURF_BIN");
    REQUIRE(bin != nullptr);
    const std::string cmd = std::string(bin) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) res.output.append(buf.data(), n);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = std::string("/tmp/ellsurf_test_") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

std::string s_model_path() {
    const Polynomial t = Polynomial::variable();
    const Polynomial shift = t - 1728;
    const auto m = model_from_polynomials(shift, {}, {}, (-36) * shift.pow(3), -shift.pow(5));
    return write_temp("s_model.json", to_json(m).dump());
}

} // namespace

TEST_CASE("analyze: the j-line model") {
    const auto res = run_cli("analyze --model " + s_model_path() + " --json");
    REQUIRE(res.exit_code == 0);
    const Json j = Json::parse(res.output);
    CHECK(j.at("euler").get<int>() == 12);
    CHECK(j.at("configuration").at("fibers")[0].at("type") == "II");
    CHECK(j.at("configuration").at("fibers")[1].at("type") == "III*");
    CHECK(j.at("configuration").at("fibers")[2].at("type") == "I1");
    SECTION("byte-identical output on identical input") {
        const auto again = run_cli("analyze --model " + s_model_path() + " --json");
        CHECK(again.output == res.output);
    }
    SECTION("text mode") {
        const auto text = run_cli("analyze --model " + s_model_path());
        CHECK(text.exit_code == 0);
        CHECK(text.output.find("III*@t - 1728") != std::string::npos);
    }
}

TEST_CASE("analyze: exit codes") {
    SECTION("malformed JSON exits 1") {
        const auto path = write_temp("garbage.json", "{not json");
        CHECK(run_cli("analyze --model " + path).exit_code == 1);
    }
    SECTION("missing file exits 1") {
        CHECK(run_cli("analyze --model /tmp/ellsurf_does_not_exist.json").exit_code == 1);
    }
    SECTION("a cuspidal model exits 1 (not an elliptic surface)") {
        const auto path = write_temp("cusp.json", R"({"a1":[],"a2":[],"a3":[],"a4":[],"a6":[]})");
        const auto res = run_cli("analyze --model " + path);
        CHECK(res.exit_code == 1);
        CHECK(res.output.find("not an elliptic surface") != std::string::npos);
    }
}

TEST_CASE("beauville subcommand") {
    const auto res = run_cli("beauville --entry 'Gamma(3)' --json");
    REQUIRE(res.exit_code == 0);
    const Json j = Json::parse(res.output);
    REQUIRE(j.is_array());
    CHECK(j[0].at("mordell_weil").at("group").at("display") == "(Z/3)^2");
    CHECK(j[0].at("components_match").get<bool>());
    SECTION("all entries") {
        const auto all = run_cli("beauville --entry all");
        CHECK(all.exit_code == 0);
        CHECK(all.output.find("Gamma0(8)") != std::string::npos);
        CHECK(all.output.find("MISMATCH") == std::string::npos);
    }
    SECTION("unknown entry exits 1") {
        CHECK(run_cli("beauville --entry nope").exit_code == 1);
    }
}

TEST_CASE("bielliptic subcommand") {
    const auto res = run_cli("bielliptic --t1 2 --t2 3 --json");
    REQUIRE(res.exit_code == 0);
    const Json j = Json::parse(res.output);
    CHECK(j.at("covers_verified").get<bool>());
    CHECK(j.at("change_identity_verified").get<bool>());
    SECTION("invalid parameters exit 1") {
        CHECK(run_cli("bielliptic --t1 2 --t2 2").exit_code == 1);
        CHECK(run_cli("bielliptic --t1 0 --t2 3").exit_code == 1);
    }
    SECTION("rational parameters parse") {
        CHECK(run_cli("bielliptic --t1 5/3 --t2 -7/2 --json").exit_code == 0);
    }
}

TEST_CASE("lattice subcommand") {
    const auto res = run_cli("lattice --name 'T(1,1,1)' --json");
    REQUIRE(res.exit_code == 0);
    const Json j = Json::parse(res.output);
    CHECK(j.at("disc") == "-2");
    CHECK(j.at("rank").get<int>() == 5);
    CHECK(j.at("signature") == Json::array({2, 3}));
    SECTION("embedding certificate") {
        const auto cert = run_cli("lattice --name U3-embed:3 --json");
        REQUIRE(cert.exit_code == 0);
        const Json cj = Json::parse(cert.output);
        CHECK(cj.at("primitive").get<bool>());
        CHECK(cj.at("gram_preserved").get<bool>());
    }
    SECTION("bad names exit 1") {
        CHECK(run_cli("lattice --name 'X(1)'").exit_code == 1);
    }
}

TEST_CASE("table subcommand") {
    const auto mw = run_cli("table mw");
    REQUIRE(mw.exit_code == 0);
    CHECK(mw.output.find("agree") != std::string::npos);
    CHECK(mw.output.find("(Z/3)^2") != std::string::npos);
    const auto sub = run_cli("table subgroups");
    REQUIRE(sub.exit_code == 0);
    CHECK(sub.output.find("h(P)=2-3.5/9=1/3") != std::string::npos);
    CHECK(sub.output.find("MISMATCH (documented)") != std::string::npos);
    const auto mwl = run_cli("table mwl");
    REQUIRE(mwl.exit_code == 0);
    CHECK(mwl.output.find("{8,9,18,25,108,162}") != std::string::npos);
    CHECK(run_cli("table bogus").exit_code == 1);
}
