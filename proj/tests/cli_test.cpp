#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fps/cli.hpp"
#include "fps/serialize.hpp"

#include "testutil.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace fps;
using fps::test::Rng;

namespace {

const FieldContextPtr Q = make_field(FieldKind::rational);

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    std::ostringstream out, err;
    std::istringstream in(stdin_text);
    const int code = cli::run(args, out, err, in);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "cli_test_" + name + ".json";
    std::ofstream file(path);
    file << content;
    return path;
}

const std::string kInvolution5 =
    R"({"field":{"kind":"rational"},"N":5,"coeffs":["-1","-1","-1","-1","-1"]})";

} // namespace

TEST_CASE("order golden") {
    const RunResult r =
        run_cli({"order", R"({"field":{"kind":"rational"},"N":3,"coeffs":["-1","0","0"]})"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"order\":2}\n");
}

TEST_CASE("build and verify pipeline on the involution fixture") {
    const RunResult built =
        run_cli({"build", "--order", "2", "--N", "5", "--free", "2=-1,4=-1"});
    REQUIRE(built.code == 0);
    const Json record = Json::parse(built.out);
    CHECK(record.at("forced").dump() == R"({"3":"-1","5":"-1"})");
    CHECK(record.at("series").dump() == Json::parse(kInvolution5).dump());

    const std::string path = write_temp("series", record.at("series").dump());
    const RunResult verified = run_cli({"verify", path, "--order", "2"});
    CHECK(verified.code == 0);
    CHECK(verified.out == "{\"verified\":true}\n");

    const RunResult failed = run_cli({"verify", path, "--order", "3"});
    CHECK(failed.code == 1);
    CHECK(failed.out == "{\"verified\":false}\n");
}

TEST_CASE("exit codes") {
    // malformed JSON -> 2
    CHECK(run_cli({"order", "{broken"}).code == 2);
    // missing input file -> 2
    CHECK(run_cli({"order", "no_such_file.json"}).code == 2);
    // a_1 = 0 -> 3, diagnostic names the coefficient
    const RunResult zero_lead =
        run_cli({"order", R"({"field":{"kind":"rational"},"N":2,"coeffs":["0","1"]})"});
    CHECK(zero_lead.code == 3);
    CHECK(zero_lead.err.find("a_1") != std::string::npos);
    // wrong coordinate count -> 2, names the index and expected degree
    const RunResult bad_coords = run_cli(
        {"order", R"({"field":{"kind":"cyclotomic","n":4},"N":1,"coeffs":[["1/1"]]})"});
    CHECK(bad_coords.code == 2);
    CHECK(bad_coords.err.find("degree 2") != std::string::npos);
    // star of an infinite-order series -> 3
    CHECK(run_cli({"star", R"({"field":{"kind":"rational"},"N":2,"coeffs":["2","0"]})"}).code ==
          3);
    // unknown verb -> 2
    CHECK(run_cli({"frobnicate"}).code == 2);
    // help -> 0
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("compose, invert and iterate") {
    const std::string f = R"({"field":{"kind":"rational"},"N":3,"coeffs":["1","1","0"]})";
    const RunResult composed = run_cli({"compose", f, f});
    CHECK(composed.code == 0);
    CHECK(Json::parse(composed.out).at("coeffs").dump() == R"(["1","2","2"])");

    const RunResult inverted = run_cli({"invert", f, "--format", "text"});
    CHECK(inverted.code == 0);
    CHECK(inverted.out == "1·z + -1·z^2 + 2·z^3\n");

    const RunResult iterated = run_cli({"iterate", f, "--m", "3"});
    CHECK(iterated.code == 0);
    CHECK(Json::parse(iterated.out).at("coeffs")[1] == Json("3"));
}

TEST_CASE("star and linearize") {
    const std::string path = write_temp("invol", kInvolution5);
    const RunResult starred = run_cli({"star", path});
    CHECK(starred.code == 0);
    CHECK(Json::parse(starred.out).at("coeffs").dump() ==
          R"(["1","1/2","1/2","1/2","1/2"])");

    const RunResult linearized = run_cli({"linearize", path});
    CHECK(linearized.code == 0);
    const Json j = Json::parse(linearized.out);
    CHECK(j.at("omega") == Json("-1"));
    CHECK(j.at("conjugator").at("coeffs")[0] == Json("1"));
}

TEST_CASE("centralizer and complete-conjugator") {
    const RunResult inside = run_cli(
        {"centralizer", R"({"field":{"kind":"rational"},"N":3,"coeffs":["1","0","1"]})",
         "--order", "2"});
    CHECK(inside.code == 0);
    CHECK(inside.out == "{\"in_centralizer\":true}\n");

    const RunResult outside = run_cli(
        {"centralizer", R"({"field":{"kind":"rational"},"N":3,"coeffs":["1","1","0"]})",
         "--order", "3"});
    CHECK(outside.out == "{\"in_centralizer\":false}\n");

    const std::string path = write_temp("invol2", kInvolution5);
    const RunResult completed =
        run_cli({"complete-conjugator", path, "--free", "1=2,3=0,5=0"});
    CHECK(completed.code == 0);
    const Jet g = parse_series(completed.out);
    CHECK(g.a(1) == Q->from_integer(2));
    CHECK(compose(compose(g, parse_series(kInvolution5)), invert(g)) ==
          linear(Q, Q->from_integer(-1), 5));
}

TEST_CASE("forced verb") {
    const RunResult r = run_cli(
        {"forced", R"({"field":{"kind":"rational"},"N":2,"coeffs":["-1","-1"]})", "--k", "3",
         "--order", "2"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("a_k") == Json("-1"));
    CHECK(j.at("p_value") == Json("-2"));
}

TEST_CASE("build-existence carries the helper") {
    const RunResult r = run_cli({"build-existence", "--order", "2", "--N", "5", "--free",
                                 "2=-1,4=-1", "--free-h", "3=1"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("series").dump() == Json::parse(kInvolution5).dump());
    CHECK_FALSE(j.at("helper").is_null());
    CHECK(j.at("helper").at("coeffs")[2] == Json("1"));
}

TEST_CASE("cyclotomic build via flags") {
    const RunResult r = run_cli({"build", "--order", "4", "--N", "5", "--field",
                                 "cyclotomic:4", "--free", "2=1,3=0,4=0"});
    REQUIRE(r.code == 0);
    const Jet series = jet_from_json(Json::parse(r.out).at("series"));
    CHECK(is_identity_iterate(series, 4));
}

TEST_CASE("schroder, normalize, stanley verbs") {
    const RunResult h = run_cli(
        {"schroder", R"({"field":{"kind":"rational"},"N":2,"coeffs":["2","1"]})"});
    CHECK(h.code == 0);
    CHECK(Json::parse(h.out).at("coeffs").dump() == R"(["1","-1/2"])");

    const RunResult nf = run_cli(
        {"normalize", R"({"field":{"kind":"rational"},"N":3,"coeffs":["-1","1","0"]})"});
    CHECK(nf.code == 0);
    CHECK(Json::parse(nf.out).at("g").at("coeffs").dump() == R"(["-1","0","1"])");

    const RunResult check_id = run_cli(
        {"stanley-check", R"({"field":{"kind":"rational"},"N":3,"coeffs":["1","0","0"]})"});
    CHECK(check_id.out == "{\"stanley_involution\":true}\n");

    const RunResult built = run_cli(
        {"stanley-build", R"({"field":{"kind":"rational"},"N":3,"coeffs":["1","1","0"]})"});
    CHECK(built.code == 0);
    CHECK(Json::parse(built.out).at("coeffs").dump() == R"(["1","-2","4"])");
    const RunResult round =
        run_cli({"stanley-check", Json::parse(built.out).dump()});
    CHECK(round.out == "{\"stanley_involution\":true}\n");
}

TEST_CASE("growth verb") {
    const RunResult r =
        run_cli({"growth", "--N", "6", "--free", "2=-1,4=-1,6=-1", "--bound", "10"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("exceeded") == Json(false));
    CHECK(j.at("roots").size() == 5);
}

TEST_CASE("stdin input and output file") {
    const RunResult r = run_cli({"order", "-"}, kInvolution5);
    CHECK(r.code == 0);
    CHECK(r.out == "{\"order\":2}\n");

    const RunResult w =
        run_cli({"order", "-", "--out", "cli_test_order_out.json"}, kInvolution5);
    CHECK(w.code == 0);
    std::ifstream file("cli_test_order_out.json");
    std::string line;
    std::getline(file, line);
    CHECK(line == "{\"order\":2}");
}

TEST_CASE("emit and parse agree with the library across verbs") {
    Rng rng(501);
    for (int trial = 0; trial < 10; ++trial) {
        const Jet f = test::random_group_jet(Q, 6, rng);
        const Jet g = test::random_group_jet(Q, 6, rng);
        const RunResult r = run_cli({"compose", emit_series_json(f), emit_series_json(g)});
        REQUIRE(r.code == 0);
        CHECK(parse_series(r.out) == compose(f, g));
    }
}

#ifdef FPS_CLI_BINARY
TEST_CASE("real binary end to end") {
    const std::string binary = FPS_CLI_BINARY;
    const int built = std::system(
        (binary + " build --order 2 --N 5 --free 2=-1,4=-1 > cli_test_record.json").c_str());
    REQUIRE(built == 0);
    {
        std::ifstream record("cli_test_record.json");
        Json j;
        record >> j;
        CHECK(j.at("forced").dump() == R"({"3":"-1","5":"-1"})");
        std::ofstream series("cli_test_series.json");
        series << j.at("series").dump();
    }
    CHECK(std::system((binary + " verify cli_test_series.json --order 2").c_str()) == 0);
    const int rc_bad =
        std::system((binary + " verify cli_test_series.json --order 3 >/dev/null").c_str());
    CHECK(WEXITSTATUS(rc_bad) == 1);
}
#endif
