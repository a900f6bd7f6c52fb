#include "idens/error.hpp"
#include "idens/pipeline.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace idens;
using pipeline::RunConfig;

TEST_CASE("configuration validation") {
    RunConfig c;
    CHECK_THROWS_AS(pipeline::validate(c), Error);
    c.q_list = {5, 11, 25};
    CHECK_NOTHROW(pipeline::validate(c));
    for (std::uint32_t bad : {1U, 4U, 15U, 64U}) {
        c.q_list = {bad};
        try {
            pipeline::validate(c);
            FAIL("expected InvalidArgument for " << bad);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::InvalidArgument);
        }
    }
    c.q_list = {53};  // |PGL(2,53)| = 148824 is above the enumeration bound
    CHECK_THROWS_AS(pipeline::validate(c), Error);
}

TEST_CASE("odd prime powers") {
    CHECK(pipeline::odd_prime_powers(3, 30) ==
          std::vector<std::uint32_t>{3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29});
    CHECK(pipeline::odd_prime_powers(30, 31) == std::vector<std::uint32_t>{31});
    CHECK(pipeline::odd_prime_powers(8, 8).empty());
}

TEST_CASE("dot and edge list text") {
    BitGraph g(3);
    g.add_edge(2, 0);
    g.add_edge(1, 2);
    CHECK(pipeline::to_edge_list(g) == "0 2\n1 2\n");
    CHECK(pipeline::to_dot(g, "t") ==
          "graph t {\n  0 [label=\"0\"];\n  1 [label=\"1\"];\n  2 [label=\"2\"];\n  0 -- 2;\n  1 -- 2;\n}\n");
}

TEST_CASE("density run at q = 11") {
    RunConfig c;
    c.q_list = {11};
    const auto r = pipeline::run_density(11, c);
    REQUIRE_FALSE(r.error);
    CHECK(r.ok());
    CHECK(r.order_pgl == 1320);
    CHECK(r.degree == 220);
    REQUIRE(r.groups.size() == 2);
    CHECK(r.groups[0].alpha == 4);
    CHECK(r.groups[1].alpha == 6);
    CHECK(r.weak_computed == std::vector<Rational>{Rational(1), Rational(4, 3)});
    REQUIRE(r.subconstituent);
    CHECK(r.subconstituent->n_size == 12);

    const auto csv = pipeline::summary_csv(c, {r});
    std::istringstream lines(csv);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(lines, line)) rows.push_back(line);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == "q,group,alpha,stabilizer_order,rho,predicted_rho,matches,status");
    CHECK(rows[1] == "11,psl,4,3,4/3,4/3,true,ok");
    CHECK(rows[2] == "11,pgl,6,6,1/1,1/1,true,ok");

    const auto j = nlohmann::json::parse(pipeline::report_json("density", c, {r}));
    CHECK(j["command"] == "density");
    CHECK(j["ok"] == true);
    CHECK(j["results"].size() == 1);
    CHECK(j["results"][0]["q"] == 11);
    CHECK(j["results"][0]["groups"][0]["rho"] == "4/3");
    CHECK(j["results"][0]["subconstituent"]["N_size"] == 12);
}

TEST_CASE("q = 9 is reported, not crashed") {
    RunConfig c;
    c.q_list = {9};
    const auto r = pipeline::run_density(9, c);
    REQUIRE(r.error);
    CHECK(r.error->code == "UnsupportedCase");
    CHECK_FALSE(r.ok());
    CHECK(pipeline::summary_csv(c, {r}).find("UnsupportedCase") != std::string::npos);
}

TEST_CASE("verify at q = 5 passes every check") {
    RunConfig c;
    c.q_list = {5};
    c.level = pipeline::Level::Full;
    const auto r = pipeline::run_verify(5, c);
    for (const auto& check : r.checks) CHECK_MESSAGE(check.passed, check.name << " " << check.detail);
    CHECK(r.ok());
}

TEST_CASE("group selection") {
    CHECK(pipeline::selected(pipeline::GroupSelection::Both).size() == 2);
    CHECK(pipeline::selected(pipeline::GroupSelection::PGL) == std::vector<atlas::Which>{atlas::Which::PGL});
}
