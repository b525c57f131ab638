#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "logdr/cli.hpp"
#include "logdr/io.hpp"

using namespace logdr;

namespace {

std::string data(const std::string& name) { return std::string(LOGDR_DATA_DIR "/") + name; }

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = dispatch(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("arrangement files parse") {
    ArrangementFile af = load_arrangement_file(data("deletedB3.json"));
    CHECK(af.variables == std::vector<std::string>{"x", "y", "z"});
    CHECK(af.hyperplanes.size() == 8);
    REQUIRE(af.weights);
    CHECK(af.weights->total() == Rational(1));
    Arrangement A = af.to_arrangement();
    CHECK(A.rank() == 3);

    CHECK_THROWS_AS(parse_arrangement_json("{"), ValidationError);
    CHECK_THROWS_AS(parse_arrangement_json(R"({"variables":["x"],"hyperplanes":[]})")
                        .to_arrangement(),
                    ValidationError);
}

TEST_CASE("lattice subcommand") {
    Run r = run({"lattice", data("boolean2.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("os betti: 1 2 1") != std::string::npos);
    CHECK(r.out.find("poincare polynomial: 1 + 2*t + t^2") != std::string::npos);
}

TEST_CASE("betti subcommand reproduces the known example") {
    Run r = run({"betti", data("deletedB3.json"), "--weights",
                 "1/2,1/2,1/4,1/4,1/4,1/4,-1/2,-1/2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("betti: 0 1 8 7") != std::string::npos);
    CHECK(r.out.find("weight conditions: PASS") != std::string::npos);
    CHECK(r.out.find("certified: yes") != std::string::npos);
}

TEST_CASE("betti with file weights and grade override") {
    Run base = run({"betti", data("deletedB3.json")});
    CHECK(base.code == 0);
    CHECK(base.out.find("betti: 0 1 8 7") != std::string::npos);

    Run off = run({"betti", data("deletedB3.json"), "--grade", "2"});
    CHECK(off.code == 0);
    CHECK(off.out.find("betti: 0 0 0 0") != std::string::npos);
}

TEST_CASE("normalize flag") {
    Run r = run({"betti", data("boolean2.json"), "--weights", "1,1", "--normalize"});
    CHECK(r.code == 0);
    CHECK(r.out.find("normalization shift z = 1") != std::string::npos);
    CHECK(r.out.find("betti: 1 2 1") != std::string::npos);
}

TEST_CASE("hilbert subcommand") {
    Run r = run({"hilbert", data("threelines.json"), "-j", "1", "--q-range", "0..2"});
    CHECK(r.code == 0);
    // dim R_{q+1} + dim R_q in two variables: 3, 5, 7 for q = 0,1,2
    CHECK(r.out.find("0     3") != std::string::npos);
    CHECK(r.out.find("1     5") != std::string::npos);
    CHECK(r.out.find("2     7") != std::string::npos);
}

TEST_CASE("bs-candidates subcommand") {
    Run r = run({"bs-candidates", data("threelines.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("-4/3 -1 -2/3") != std::string::npos);
    CHECK(r.out.find("interval (-5/3, 0): all roots inside") != std::string::npos);

    Run lin = run({"bs-candidates", data("boolean2.json"), "--factorization", "1;2"});
    CHECK(lin.code == 0);
    CHECK(lin.out.find("s1 + 1 = 0") != std::string::npos);
    CHECK(lin.out.find("s2 + 1 = 0") != std::string::npos);
}

TEST_CASE("verify subcommand") {
    Run r = run({"verify", data("threelines.json"), "--weights", "1/2,1/3,1/6", "--seed", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("all checks passed") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("json output round-trips byte-identically") {
    for (std::vector<std::string> args :
         {std::vector<std::string>{"--json", "lattice", data("braid3.json")},
          {"--json", "betti", data("deletedB3.json")},
          {"--json", "hilbert", data("fourlines.json"), "-j", "2", "--q-range", "-1..3"},
          {"--json", "bs-candidates", data("threelines.json")}}) {
        Run r = run(args);
        REQUIRE(r.code == 0);
        auto doc = nlohmann::ordered_json::parse(r.out);
        CHECK(doc.dump(2) + "\n" == r.out);
    }
}

TEST_CASE("deterministic output across runs") {
    Run a = run({"betti", data("deletedB3.json")});
    Run b = run({"betti", data("deletedB3.json")});
    CHECK(a.out == b.out);
}

TEST_CASE("exit codes") {
    SUBCASE("missing file is a validation error") {
        Run r = run({"lattice", "/nonexistent/file.json"});
        CHECK(r.code == 1);
        CHECK_FALSE(r.err.empty());
    }
    SUBCASE("bad weights are a validation error") {
        Run r = run({"betti", data("boolean2.json"), "--weights", "1/2"});
        CHECK(r.code == 1);
    }
    SUBCASE("unknown subcommand") {
        Run r = run({"frobnicate"});
        CHECK(r.code == 1);
    }
    SUBCASE("max-degree guard aborts cleanly") {
        Run r = run({"--max-degree", "2", "hilbert", data("deletedB3.json"), "-j", "0",
                     "--q-range", "0..6"});
        CHECK(r.code == 1);
        CHECK(r.err.find("max-degree") != std::string::npos);
    }
}
