#include "doctest.h"

#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "mcdg/catfile.hpp"
#include "mcdg/cli.hpp"
#include "mcdg/complexes.hpp"
#include "util.hpp"

using namespace mcdg;

namespace {

struct RunResult {
    int rc = 0;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int rc = cli_run(args, out, err);
    return {rc, out.str(), err.str()};
}

std::string sample(const char* name) {
    return std::string(MCDG_SOURCE_DIR) + "/data/" + name;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("help and argument errors use the documented exit codes") {
    RunResult help = run({"--help"});
    CHECK(help.rc == 0);
    CHECK(help.out.find("check") != std::string::npos);
    CHECK(help.out.find("variety-count") != std::string::npos);
    CHECK(run({}).rc == 2);                        // a subcommand is required
    CHECK(run({"frobnicate"}).rc == 2);            // unknown subcommand
    CHECK(run({"check"}).rc == 2);                 // missing file argument
    RunResult sub = run({"lift", "--help"});
    CHECK(sub.rc == 0);
    CHECK(sub.out.find("--seed") != std::string::npos);
}

TEST_CASE("check prints a verdict and the failing axiom") {
    RunResult ok = run({"check", sample("endo-111.cat")});
    CHECK(ok.rc == 0);
    CHECK(ok.out == "axioms: OK\n");

    // corrupt the unit coefficients and expect a named failure
    std::string doc = read_file(sample("endo-111.cat"));
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(doc);
    j["identities"][0]["coeffs"][0] = "2";
    std::string tmp = "/tmp/mcdg_cli_broken.cat";
    write_file(tmp, j.dump(2) + "\n");
    RunResult bad = run({"check", tmp});
    CHECK(bad.rc == 1);
    CHECK(bad.out.find("axioms: FAIL") != std::string::npos);
    CHECK(bad.out.find("unit") != std::string::npos);
    std::remove(tmp.c_str());

    RunResult missing = run({"check", "/nonexistent.cat"});
    CHECK(missing.rc == 2);
    CHECK(missing.err.find("/nonexistent.cat") != std::string::npos);
}

TEST_CASE("mc-verify reports curvature exactly") {
    RunResult ok = run({"mc-verify", sample("endo-111.cat"), "--object", "E",
                        "--eta", "1,0"});
    CHECK(ok.rc == 0);
    CHECK(ok.out == "MC: OK\n");

    RunResult bad = run({"mc-verify", sample("endo-111.cat"), "--object", "E",
                         "--eta", "1,1"});
    CHECK(bad.rc == 1);
    CHECK(bad.out.find("MC: FAIL curvature = (1)") != std::string::npos);

    RunResult wrong_len = run({"mc-verify", sample("endo-111.cat"), "--object", "E",
                               "--eta", "1,0,0"});
    CHECK(wrong_len.rc == 2);
    CHECK(wrong_len.err.find("input error") != std::string::npos);

    RunResult wrong_obj = run({"mc-verify", sample("endo-111.cat"), "--object", "X",
                               "--eta", "1,0"});
    CHECK(wrong_obj.rc == 2);
}

TEST_CASE("variety-count matches the frozen point counts") {
    CHECK(run({"variety-count", sample("endo-111.cat"), "--object", "E", "--field",
               "F3"}).out == "5 points\n");
    CHECK(run({"variety-count", sample("endo-111.cat"), "--object", "E", "--field",
               "F2"}).out == "3 points\n");
    CHECK(run({"variety-count", sample("endo-111.cat"), "--object", "E", "--field",
               "F2", "--dual-numbers"}).out == "8 points\n");
    CHECK(run({"variety-count", sample("endo-1111.cat"), "--object", "E", "--field",
               "F2"}).out == "5 points\n");
    RunResult inf = run({"variety-count", sample("endo-111.cat"), "--object", "E"});
    CHECK(inf.rc == 2);
    CHECK(inf.err.find("finite") != std::string::npos);
}

TEST_CASE("variety-emit is deterministic and names the generators") {
    RunResult a = run({"variety-emit", sample("endo-121.cat"), "--object", "E"});
    RunResult b = run({"variety-emit", sample("endo-121.cat"), "--object", "E"});
    CHECK(a.rc == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("# curvature ideal") != std::string::npos);
    CHECK(a.out.find("1*x3*x1 + 1*x4*x2") != std::string::npos);

    std::string tmp = "/tmp/mcdg_cli_ideal.txt";
    RunResult filed = run({"variety-emit", sample("endo-121.cat"), "--object", "E",
                           "--out", tmp});
    CHECK(filed.rc == 0);
    CHECK(read_file(tmp) == a.out);
    std::remove(tmp.c_str());
    CHECK(run({"variety-emit", sample("endo-121.cat"), "--object", "E", "--out",
               "/nonexistent/dir/x.txt"}).rc == 2);
}

TEST_CASE("lift certificates are reproducible per seed") {
    std::vector<std::string> args{"lift", sample("endo-111.cat"), "--object", "E",
                                  "--field", "F5", "--ring", "dual", "--seed", "7"};
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.rc == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("square-zero lift certificate") != std::string::npos);
    CHECK(a.out.find("step 1") != std::string::npos);
    CHECK(a.out.find("step 2") != std::string::npos);
    CHECK(a.out.find("verified exactly") != std::string::npos);

    RunResult poly = run({"lift", sample("endo-111.cat"), "--object", "E", "--field",
                          "F7", "--ring", "poly3", "--seed", "3"});
    CHECK(poly.rc == 0);
    CHECK(poly.out.find("F7[x]/(x^3)") != std::string::npos);

    CHECK(run({"lift", sample("endo-111.cat"), "--object", "E", "--ring",
               "tropical"}).rc == 2);
}

TEST_CASE("dp-emit produces a labeled simplicial module") {
    RunResult a = run({"dp-emit", sample("endo-121.cat"), "--src", "E", "--dst", "E",
                       "--level", "3"});
    CHECK(a.rc == 0);
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(a.out);
    CHECK(j["format"] == "dp-module");
    CHECK(j["level"] == 3);
    CHECK(j["ranks"].size() == 4);
    CHECK(j["complex"]["dims"] == nlohmann::ordered_json::array({6, 4, 1}));
    // rank_n = sum_k C(n,k) dim C_k for dims (6,4,1)
    CHECK(j["ranks"] == nlohmann::ordered_json::array({6, 10, 15, 21}));
    CHECK(j["face"].size() == 3);
    CHECK(j["degen"].size() == 3);
    CHECK(run({"dp-emit", sample("endo-121.cat"), "--src", "E", "--dst",
               "nope"}).rc == 2);
}

TEST_CASE("nerve-emit is stable across runs") {
    std::vector<std::string> args{"nerve-emit", sample("two-object.cat"), "--level", "2"};
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.rc == 0);
    CHECK(a.out == b.out);
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(a.out);
    CHECK(j["format"] == "nerve");
    CHECK(j["objects"].size() == 2);
    CHECK(j["cap"] == 2);
}

TEST_CASE("prestack summarizes points and interior counts") {
    RunResult a = run({"prestack", sample("endo-111.cat"), "--level", "1", "--field",
                       "F2"});
    CHECK(a.rc == 0);
    CHECK(a.out.find("mc-points: 3") != std::string::npos);
    CHECK(a.out.find("level 1: total 20 (tuples 9)") != std::string::npos);

    RunResult dual = run({"prestack", sample("endo-111.cat"), "--level", "1", "--field",
                          "F2", "--dual-numbers"});
    CHECK(dual.rc == 0);
    CHECK(dual.out.find("mc-points: 8") != std::string::npos);

    RunResult inf = run({"prestack", sample("endo-111.cat"), "--level", "1"});
    CHECK(inf.rc == 2);
    CHECK(inf.err.find("finite") != std::string::npos);
}

} // TEST_SUITE
