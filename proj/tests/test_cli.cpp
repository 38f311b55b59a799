#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cayley::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("census with both methods pairs records and agreement") {
    const auto r = run({"census", "--n", "2", "--field", "2", "--rank", "1", "--method", "both"});
    REQUIRE(r.code == 0);
    const auto doc = json::parse(r.out);
    REQUIRE(doc.size() == 2);
    CHECK(doc[0]["method"] == "formula");
    CHECK(doc[1]["method"] == "oracle");
    CHECK(doc[0]["count"] == "2");
    CHECK(doc[1]["count"] == "2");
    CHECK(doc[0]["agrees"] == true);
    CHECK(doc[0]["rank"] == 1);
    CHECK(doc[0]["q"] == 2);
}

TEST_CASE("census record keys keep their order") {
    const auto r = run({"census", "--n", "2", "--field", "3", "--rank", "0", "--method", "formula"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("\"n\"") < r.out.find("\"q\""));
    CHECK(r.out.find("\"q\"") < r.out.find("\"rank\""));
    CHECK(r.out.find("\"method\"") < r.out.find("\"count\""));
    CHECK(json::parse(r.out)[0].contains("agrees") == false);
}

TEST_CASE("census --rank all covers every rank") {
    const auto r = run({"census", "--n", "3", "--field", "2", "--rank", "all", "--method", "formula"});
    REQUIRE(r.code == 0);
    const auto doc = json::parse(r.out);
    REQUIRE(doc.size() == 4);
    const char* expected[] = {"168", "72", "56", "48"};
    for (int i = 0; i < 4; ++i) {
        CHECK(doc[i]["rank"] == i);
        CHECK(doc[i]["count"] == expected[i]);
    }
}

TEST_CASE("census over GF(4)") {
    const auto r = run({"census", "--n", "2", "--field", "4", "--rank", "2", "--method", "oracle"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)[0]["count"] == "124");
}

TEST_CASE("census csv") {
    const auto r = run({"census", "--n", "2", "--field", "2", "--rank", "1", "--output", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "n,q,rank,method,count,agrees\n2,2,1,formula,2,true\n2,2,1,oracle,2,true\n");
}

TEST_CASE("census without a closed form reports unknown agreement") {
    const auto r = run({"census", "--n", "4", "--field", "2", "--rank", "3"});
    REQUIRE(r.code == 0);
    const auto doc = json::parse(r.out);
    REQUIRE(doc.size() == 1);
    CHECK(doc[0]["method"] == "oracle");
    CHECK(doc[0]["agrees"].is_null());
}

TEST_CASE("verify checks") {
    const auto l31 = run({"verify", "--check", "lemma31", "--n", "3", "--field", "2"});
    REQUIRE(l31.code == 0);
    const auto doc = json::parse(l31.out);
    CHECK(doc["passed"] == true);
    CHECK(doc["checks"][0]["expected"] == "72");
    CHECK(doc["checks"][0]["actual"] == "72");

    CHECK(run({"verify", "--check", "recurrence", "--n", "4", "--field", "3"}).code == 0);
    CHECK(run({"verify", "--check", "rank-reduction", "--n", "2", "--field", "3", "--seed", "7"}).code == 0);
    CHECK(run({"verify", "--check", "lemma27", "--n", "2", "--field", "3"}).code == 0);

    const auto l32 = run({"verify", "--check", "lemma32", "--n", "3", "--field", "3", "--output", "text"});
    CHECK(l32.code == 0);
    CHECK(l32.out.find("PASS lemma32-case1") != std::string::npos);

    CHECK(run({"verify", "--check", "all", "--n", "1", "--field", "5"}).code == 0);
    CHECK(run({"verify", "--check", "lemma32", "--n", "1", "--field", "5"}).code == 2);
}

TEST_CASE("verify a single pair from matrix literals") {
    const auto r = run({"verify", "--check", "rank-reduction", "--n", "2", "--field", "3", "--matrix-a", "1,0;0,0",
                        "--matrix-b", "0,0;0,0"});
    REQUIRE(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["checks"][0]["actual"] == "30");

    CHECK(run({"verify", "--check", "rank-reduction", "--n", "2", "--field", "3", "--matrix-a", "1,0;0,0",
               "--matrix-b", "1,0;0,0"})
              .code == 2);
    CHECK(run({"verify", "--check", "rank-reduction", "--n", "2", "--field", "3", "--matrix-a", "1,0;0,0"}).code == 2);
    CHECK(run({"verify", "--check", "rank-reduction", "--n", "3", "--field", "3", "--matrix-a", "1,0;0,0",
               "--matrix-b", "0,0;0,0"})
              .code == 2);
}

TEST_CASE("srg command") {
    const auto r = run({"srg", "--n", "2", "--field", "3"});
    REQUIRE(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["is_srg"] == true);
    CHECK(doc["parameters"] == json::array({"81", "48", "27", "30"}));
    CHECK(doc["witness"].is_null());

    const auto r3 = json::parse(run({"srg", "--n", "3", "--field", "2"}).out);
    CHECK(r3["is_srg"] == false);
    CHECK(r3["witness"]["rank_pair"] == json::array({1, 2}));
    CHECK(r3["witness"]["counts"] == json::array({"72", "56"}));
    CHECK(r3["mu_by_rank"]["1"] == "72");

    const auto r1 = run({"srg", "--n", "1", "--field", "5"});
    CHECK(r1.code == 0);
    const auto d1 = json::parse(r1.out);
    CHECK(d1["is_srg"] == false);
    CHECK(d1["parameters"].is_null());
    CHECK(d1["note"].get<std::string>().find("complete graph") != std::string::npos);
}

TEST_CASE("graph-build command") {
    const auto r = run({"graph-build", "--n", "2", "--field", "2"});
    REQUIRE(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["vertices"] == "16");
    CHECK(doc["edges"] == "48");
    CHECK(doc["agrees"] == true);
    CHECK(doc["pairwise"]["is_srg"] == true);
}

TEST_CASE("field-info command") {
    const auto doc = json::parse(run({"field-info", "--field", "2^2"}).out);
    CHECK(doc["q"] == 4);
    CHECK(doc["modulus"] == json::array({1, 1, 1}));
    CHECK(json::parse(run({"field-info", "--field", "7"}).out)["modulus"].is_null());
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"census", "--field", "2"}).code == 2);
    CHECK(run({"census", "--n", "2", "--field", "6"}).code == 2);
    CHECK(run({"census", "--n", "2", "--field", "2", "--rank", "3"}).code == 2);
    CHECK(run({"census", "--n", "2", "--field", "2", "--method", "guess"}).code == 2);
    CHECK(run({"census", "--n", "2", "--field", "2", "--threads", "zero"}).code == 2);
    CHECK(run({"verify", "--n", "2", "--field", "2", "--check", "lemma99"}).code == 2);

    const auto budget = run({"census", "--n", "3", "--field", "3", "--method", "oracle", "--budget", "1000"});
    CHECK(budget.code == 3);
    CHECK(budget.err.find("19683") != std::string::npos);
    CHECK(run({"srg", "--n", "3", "--field", "3", "--budget", "1000"}).code == 3);
    CHECK(run({"graph-build", "--n", "3", "--field", "4"}).code == 3);

    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is identical across thread counts") {
    for (const std::vector<std::string>& base : std::vector<std::vector<std::string>>{
             {"census", "--n", "3", "--field", "2", "--rank", "all"},
             {"srg", "--n", "3", "--field", "3"},
             {"verify", "--check", "all", "--n", "2", "--field", "3", "--seed", "11"},
             {"graph-build", "--n", "2", "--field", "3"}}) {
        auto one = base;
        one.insert(one.end(), {"--threads", "1"});
        auto many = base;
        many.insert(many.end(), {"--threads", "7"});
        const auto a = run(one);
        const auto b = run(many);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(a.out == run(one).out);
    }
}
