#include "doctest.h"
#include "json.hpp"
#include "qh/cli.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome qhtool(std::vector<std::string> args) {
    args.insert(args.begin(), "qhtool");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = qh::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Outcome& o) {
    REQUIRE(o.code == 0);
    return nlohmann::json::parse(o.out);
}

const std::string a2_diag = R"({"quiver":"A2","p":2,"mats":[[[1,0],[0,0]]]})";

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("classify reports kind and delta") {
        auto j = json_of(qhtool({"--json", "classify", "kronecker"}));
        CHECK(j["kind"] == "ExtendedDynkin");
        CHECK(j["delta"] == nlohmann::json({1, 1}));
        j = json_of(qhtool({"classify", R"({"vertices":3,"arrows":[[1,2],[2,3]]})", "--json"}));
        CHECK(j["kind"] == "Dynkin");
        CHECK(j["delta"].is_null());
    }

    TEST_CASE("euler and roots") {
        CHECK(json_of(qhtool({"--json", "euler", "A2", "[1,0]", "[0,1]"}))["euler"] == -1);
        auto j = json_of(qhtool({"--json", "roots", "kronecker", "[2,2]"}));
        CHECK(j["count"] == 6);
    }

    TEST_CASE("flagcount matches the Grassmannian count and its polynomial") {
        // Gr_(1,1) of diag(1,0) on A2 over F2: lines in F2^2 at the source whose image
        // lands in a chosen line at the sink.
        CHECK(json_of(qhtool({"--json", "flagcount", a2_diag, "[[0,0],[1,1],[2,2]]"}))["count"] == 5);
        auto j = json_of(qhtool({"--json", "flagcount", "--interpolate", a2_diag, "[[0,0],[1,1],[2,2]]"}));
        CHECK(j["poly"] == "1 + 2*q");
        CHECK(j["constant_term"] == "1");
        j = json_of(qhtool({"--json", "--trace", "flagcount", a2_diag, "[[0,0],[1,1],[2,2]]"}));
        CHECK(j["mod_q"] == "one");
        CHECK(json_of(qhtool({"--json", "--primes", "3", "flagcount", a2_diag, "[[0,0],[1,1],[2,2]]"}))["count"] == 7);
        CHECK(!j["trace"].empty());
    }

    TEST_CASE("reflection of dimension vectors and representations") {
        CHECK(json_of(qhtool({"--json", "reflect", "A2", "2", "[1,1]"}))["d"] == nlohmann::json({1, 0}));
        auto j = json_of(qhtool({"--json", "reflect", "A2", "2", R"({"quiver":"A2","p":3,"mats":[[[1,0]]]})"}));
        CHECK(j["rep"]["dims"] == nlohmann::json({2, 1}));
        CHECK(j["rep"]["quiver"]["arrows"] == nlohmann::json({{2, 1}}));
    }

    TEST_CASE("word-expand on Dynkin and cyclic quivers") {
        auto j = json_of(qhtool({"--json", "word-expand", "A2", "[1,2,1]"}));
        CHECK(j["count"] == 2);
        j = json_of(qhtool({"--json", "word-expand", "C1", "[[1,0],[0,1]]"}));
        CHECK(j["count"] == 2);
    }

    TEST_CASE("normalform and pbw") {
        CHECK(json_of(qhtool({"--json", "normalform", "kronecker", "[[1,[1,1]],[1,[1,1]]]"}))["normal_form"] == "R[δ^2]");
        auto j = json_of(qhtool({"--json", "pbw", "kronecker", "[2,2]"}));
        CHECK(j["count"] == 6);
        CHECK(j["match"] == true);
    }

    TEST_CASE("verify runs a suite and exits 0 on success") {
        auto o = qhtool({"verify", "cyclic"});
        CHECK(o.code == 0);
        CHECK(o.out.find("FAIL") == std::string::npos);
    }

    TEST_CASE("usage and malformed input exit with 2") {
        CHECK(qhtool({}).code == 2);
        CHECK(qhtool({"bogus"}).code == 2);
        CHECK(qhtool({"euler", "A2", "[1,0]"}).code == 2);
        CHECK(qhtool({"classify", "A2", "--bogus"}).code == 2);
        CHECK(qhtool({"classify", "{bad"}).code == 2);
        CHECK(qhtool({"verify", "nosuch"}).code == 2);
        CHECK(qhtool({"reflect", "A2", "1", a2_diag}).code == 2);  // vertex 1 is not a sink
        CHECK(qhtool({"flagcount", a2_diag, "[[0,0],[1,1],[2,1]]"}).code == 2);
        CHECK(qhtool({"flagcount", R"({"quiver":"A2","p":4,"mats":[[[1]]]})", "[[0,0],[1,1]]"}).code == 2);
        CHECK(qhtool({"--primes", "x", "classify", "A2"}).code == 2);
        auto o = qhtool({"classify", "{bad"});
        CHECK(o.err.find("error") != std::string::npos);
    }
}
