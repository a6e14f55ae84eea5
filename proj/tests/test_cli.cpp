// End-to-end checks against the installed binary (path injected at
// compile time).  Runs the tool through popen and inspects stdout plus
// the exit status.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(TCONC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("compute laplace T json") {
    const auto r = run("compute --family laplace --fn T --y 1 --format json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["family"] == "laplace");
    CHECK(j["function"] == "T");
    CHECK(j["y"].get<double>() == 1.0);
    CHECK(j["value"].get<double>() == doctest::Approx(0.75688326556578579).epsilon(1e-15));
    CHECK(j["attained_at"] == "limit");
    CHECK(j["branch"] == "-");
    CHECK(j["search_bound"].is_null());
    CHECK(j.contains("tool_version"));
}

TEST_CASE("compute laplace C at and off y = 1") {
    const auto at = run("compute --family laplace --fn C --y 1 --format json");
    REQUIRE(at.exit_code == 0);
    CHECK(json::parse(at.out)["value"].get<double>() == 0.5);
    const auto off = run("compute --family laplace --fn C --y 2 --format json");
    REQUIRE(off.exit_code == 0);
    CHECK(json::parse(off.out)["value"].get<double>() == 0.0);
}

TEST_CASE("compute student-t T y=2 json") {
    const auto r = run("compute --family student-t --fn T --y 2 --format json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["value"].get<double>() ==
          doctest::Approx(0.95013276943111482).epsilon(1e-13));
    CHECK(j["attained_at"].get<int>() == 7);
    CHECK(j["branch"] == "y>sqrt3");
    CHECK(j["search_bound"].get<int>() == 4651);
}

TEST_CASE("compute student-t H y=3: limit beats the scan") {
    const auto r = run("compute --family student-t --fn H --y 3 --format json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["attained_at"] == "limit");
    CHECK(j["value"].get<double>() ==
          doctest::Approx(0.0026997960632601866).epsilon(1e-12));
    CHECK(j["search_bound"].get<int>() == 12375);
}

TEST_CASE("sqrt3 literal forces the y = sqrt(3) branch") {
    const auto lit = run("compute --family student-t --fn T --y sqrt3 --format json");
    REQUIRE(lit.exit_code == 0);
    const json j = json::parse(lit.out);
    CHECK(j["branch"] == "y=sqrt3");
    CHECK(j["search_bound"].get<int>() == 1321);
    CHECK(j["attained_at"] == "limit");

    // a decimal close to sqrt(3) but outside the tolerance goes elsewhere
    const auto off = run("compute --family student-t --fn T --y 1.733 --format json");
    REQUIRE(off.exit_code == 0);
    CHECK(json::parse(off.out)["branch"] == "y>sqrt3");
}

TEST_CASE("student-t C record") {
    const auto r = run("compute --family student-t --fn C --y 1.3 --format json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["value"].get<double>() == 0.5);
    CHECK(j["attained_at"].get<int>() == 3);
    CHECK(j["branch"] == "1<y<sqrt3");
}

TEST_CASE("csv output carries the fixed header") {
    const auto r = run("compute --family laplace --fn H --y 2 --format csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.rfind("family,function,y,value,attained_at,branch,search_bound,"
                      "tool_version\n",
                      0) == 0);
    CHECK(r.out.find("laplace,H,2,") != std::string::npos);
}

TEST_CASE("identical output across thread counts") {
    const auto a = run("compute --family student-t --fn T --y 2 --threads 1 --format json");
    const auto b = run("compute --family student-t --fn T --y 2 --threads 4 --format json");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("compute --family gaussian --fn T --y 1").exit_code == 2);
    CHECK(run("compute --family laplace --fn Q --y 1").exit_code == 2);
    CHECK(run("compute --family laplace --fn T --y -1").exit_code == 2);
    CHECK(run("compute --family laplace --fn T --y abc").exit_code == 2);
    CHECK(run("compute --family laplace --fn T").exit_code == 2);
    CHECK(run("audit --preset exhaustive").exit_code == 2);
    CHECK(run("verify --n 100").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("reproduce-remark json shape") {
    const auto r = run("reproduce-remark --format json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    REQUIRE(j["rows"].size() == 6);
    REQUIRE(j["ledgers"].size() == 14);
    // y=2, T row: attained at v=7, close to the published 0.9501
    bool found = false;
    for (const auto& row : j["rows"]) {
        if (row["y"].get<double>() == 2.0 && row["function"] == "T") {
            found = true;
            CHECK(row["attained_at"].get<int>() == 7);
            CHECK(row["abs_diff"].get<double>() < 5e-5);
        }
    }
    CHECK(found);
    for (const auto& row : j["ledgers"])
        CHECK(row["abs_diff"].get<double>() < 0.01);
}

TEST_CASE("audit quick passes with exit 0") {
    const auto r = run("audit --preset quick --format json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["all_pass"] == true);
    for (const auto& c : j["checks"]) {
        CHECK(c["pass"] == true);
        CHECK(c["slack"].get<double>() > 0.0);
    }
}

TEST_CASE("verify is reproducible for a fixed seed") {
    const auto a = run("verify --seed 7 --n 20000 --format json");
    const auto b = run("verify --seed 7 --n 20000 --format json");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(a.out == b.out);
    const json j = json::parse(a.out);
    CHECK(j["rng"] == "splitmix64-counter");
    CHECK(j["all_pass"] == true);
    REQUIRE(j["rows"].size() == 12);
    for (const auto& row : j["rows"]) CHECK(row["n_se"].get<double>() <= 4.0);
}

TEST_CASE("repeated runs are byte-identical") {
    for (const std::string cmd :
         {std::string("compute --family student-t --fn H --y sqrt3 --format json"),
          std::string("reproduce-remark --format csv"),
          std::string("audit --preset quick --format csv")}) {
        const auto a = run(cmd);
        const auto b = run(cmd);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.out == b.out);
    }
}
