#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "cli_runner.hpp"
#include "redcyc/report_io.hpp"

using redcyc::Json;

namespace {

std::string temp_file(const std::string& name, const std::string& content) {
    const std::string path = std::string(REDCYC_TEST_TMP) + "/" + name;
    std::ofstream(path) << content;
    return path;
}

}  // namespace

TEST_CASE("bounds") {
    const auto res = run_cli("bounds --n 4 --r 2 --q 3");
    REQUIRE(res.code == 0);
    const Json j = Json::parse(res.out);
    CHECK(j["theorem_lower"]["exact"] == "5/81");
    CHECK(j["theorem_upper"]["exact"] == "44/81");
    CHECK(j["theorem_upper_vacuous"] == false);
    CHECK(Json::parse(run_cli("bounds --n 4 --r 2 --q 2").out)["theorem_upper_vacuous"] == true);
    CHECK(run_cli("bounds --n 2 --r 2 --q 3").code == 1);
    CHECK(run_cli("bounds --n 4 --r 2 --q 6").code == 1);
    CHECK(run_cli("bounds --n 4 --r 2").code == 1);
    CHECK(run_cli("frobnicate").code == 1);
    const auto csv = run_cli("bounds --n 4 --r 2 --q 2 --format csv");
    CHECK(csv.out.find("theorem_upper,41/24,1.70833333333,true") != std::string::npos);
}

TEST_CASE("extension fields echo the modulus") {
    const Json j = Json::parse(run_cli("bounds --n 3 --r 1 --q 2^3").out);
    CHECK(j["field"]["modulus"] == "t^3+t+1");
    CHECK(j["field"]["q"] == 8);
}

TEST_CASE("enumerate") {
    const auto res = run_cli("enumerate --n 2 --r 1 --q 3");
    REQUIRE(res.code == 0);
    const Json j = Json::parse(res.out);
    CHECK(j["pi"]["exact"] == "1/9");
    CHECK(j["n3"] == "3");
    CHECK(run_cli("enumerate --n 10 --r 5 --q 5").code == 3);
    CHECK(run_cli("enumerate --n 3 --r 1 --q 2 --mode bogus").code == 1);
    const auto csv = run_cli("enumerate --n 2 --r 1 --q 3 --format csv");
    CHECK(csv.out.rfind("n,r,q,mode,method,pi,pi1,pi2,pi3,lower,upper,verdicts,seed,trials\n", 0) == 0);
}

TEST_CASE("estimate and worker-count independence") {
    const auto one = run_cli("estimate --n 5 --r 2 --q 3 --trials 20000 --seed 9 --workers 1");
    const auto four = run_cli("estimate --n 5 --r 2 --q 3 --trials 20000 --seed 9 --workers 4");
    REQUIRE(one.code == 0);
    CHECK(one.out == four.out);
    const Json j = Json::parse(one.out);
    CHECK(j["seed"] == 9);
    CHECK(j["trials"] == 20000);
    CHECK(run_cli("estimate --n 5 --r 2 --q 3 --trials 0").code == 1);
}

TEST_CASE("worker count from the environment") {
    const std::string cmd = "estimate --n 4 --r 1 --q 2 --trials 5000 --seed 2";
    const auto plain = run_cli(cmd);
    setenv("REDCYC_WORKERS", "3", 1);
    const auto with_env = run_cli(cmd);
    setenv("REDCYC_WORKERS", "0", 1);
    const auto invalid = run_cli(cmd);
    unsetenv("REDCYC_WORKERS");
    CHECK(with_env.code == 0);
    CHECK(with_env.out == plain.out);
    CHECK(invalid.code == 1);
}

TEST_CASE("sweep") {
    const auto res = run_cli("sweep --n 2..3 --q 2,3 --method exact");
    REQUIRE(res.code == 0);
    const Json j = Json::parse(res.out);
    REQUIRE(j["points"].size() == 6);
    CHECK(j["points"][0]["n"] == 2);
    CHECK(j["points"][5]["r"] == 2);
    const auto over = run_cli("sweep --n 2,10 --r 1,5 --q 5 --method exact");
    CHECK(over.code == 3);
    const Json jo = Json::parse(over.out);
    CHECK(jo["points"].size() == 3);
    CHECK(jo["points"][2]["budget_exceeded"] == true);
    CHECK(run_cli("sweep --n 5..2 --q 2").code == 1);
    CHECK(run_cli("sweep --n 2..3 --q 2,6").code == 1);
    const auto mc1 = run_cli("sweep --n 3..4 --q 2 --method mc --trials 3000 --seed 4 --workers 1");
    const auto mc2 = run_cli("sweep --n 3..4 --q 2 --method mc --trials 3000 --seed 4 --workers 2");
    CHECK(mc1.code == 0);
    CHECK(mc1.out == mc2.out);
    const auto csv = run_cli("sweep --n 2..3 --q 2 --format csv");
    CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 4);
}

TEST_CASE("lemma") {
    const Json a = Json::parse(run_cli("lemma --r 2 --s 1 --q 3").out);
    CHECK(a["closed_form"] == "18");
    CHECK(a["recurrence"] == "18");
    CHECK(a["brute_force"] == "18");
    const auto b = run_cli("lemma --r 1 --s 1 --q 3 --d 1");
    CHECK(b.code == 0);
    const Json jb = Json::parse(b.out);
    CHECK(jb["lower_bound"] == "2");
    CHECK(jb["per_f"].size() == 3);
    for (const auto& e : jb["per_f"]) CHECK(e["holds"] == true);
    CHECK(Json::parse(run_cli("lemma --r 0 --s 3 --q 2").out)["closed_form"] == "8");
    CHECK(run_cli("lemma --r 1 --s 1 --q 3 --d 2").code == 1);
}

TEST_CASE("probe") {
    const std::string stab = temp_file("stab.txt",
                                       "4 2\n"
                                       "1,0,0,0;0,0,0,0;0,0,0,0;0,0,0,0\n"
                                       "0,1,0,0;0,0,0,0;0,0,0,0;0,0,0,0\n"
                                       "0,0,0,0;1,0,0,0;0,0,0,0;0,0,0,0\n"
                                       "0,0,0,0;0,1,0,0;0,0,0,0;0,0,0,0\n"
                                       "0,0,0,0;0,0,0,0;1,0,0,0;0,0,0,0\n"
                                       "0,0,0,0;0,0,0,0;0,1,0,0;0,0,0,0\n"
                                       "0,0,0,0;0,0,0,0;0,0,1,0;0,0,0,0\n"
                                       "0,0,0,0;0,0,0,0;0,0,0,1;0,0,0,0\n"
                                       "0,0,0,0;0,0,0,0;0,0,0,0;1,0,0,0\n"
                                       "0,0,0,0;0,0,0,0;0,0,0,0;0,1,0,0\n"
                                       "0,0,0,0;0,0,0,0;0,0,0,0;0,0,1,0\n"
                                       "0,0,0,0;0,0,0,0;0,0,0,0;0,0,0,1\n");
    const auto r1 = run_cli("probe --file " + stab + " --seed 3");
    CHECK(r1.code == 0);
    CHECK(Json::parse(r1.out)["verdict"] == "reducible_with_witness");

    std::string full = "3 2\n";
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            std::string m;
            for (int a = 0; a < 3; ++a) {
                for (int b = 0; b < 3; ++b) m += std::string(b ? "," : "") + ((a == i && b == j) ? "1" : "0");
                if (a < 2) m += ";";
            }
            full += m + "\n";
        }
    const auto r2 = run_cli("probe --file " + temp_file("full.txt", full) + " --max-tries 50 --seed 8");
    CHECK(r2.code == 0);
    const Json j2 = Json::parse(r2.out);
    CHECK(j2["verdict"] == "cyclic_pair_found");
    CHECK(j2["seed"] == 8);

    CHECK(run_cli("probe --file " + temp_file("bad.txt", "2 2\n1,0;0\n")).code == 1);
    CHECK(run_cli("probe --file /nonexistent/gens.txt").code == 1);
    CHECK(run_cli("probe --file " + stab + " --max-tries 0").code == 1);
}

TEST_CASE("series") {
    const auto res = run_cli("series --r 1 --q 5");
    REQUIRE(res.code == 0);
    const Json j = Json::parse(res.out);
    CHECK(j["series"][0]["coefficients"] == Json::array({1, 0, -1, -2, -1, 0, 2, 3}));
    CHECK(j["series"][0]["evaluations"][0]["non_cyclic"]["decimal"].get<double>() == doctest::Approx(0.0574336).epsilon(1e-6));
    CHECK(Json::parse(run_cli("series").out)["series"].size() == 7);
    CHECK(run_cli("series --r 9").code == 1);
}

TEST_CASE("output file") {
    const std::string path = std::string(REDCYC_TEST_TMP) + "/out.json";
    std::remove(path.c_str());
    CHECK(run_cli("enumerate --n 2 --r 1 --q 2 --output " + path).code == 0);
    std::ifstream in(path);
    CHECK(Json::parse(in)["pi"]["exact"] == "1/4");
}
