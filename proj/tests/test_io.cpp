#include "support.hpp"

#include <doctest.h>

using namespace testing;

TEST_CASE("graph json round trip") {
    auto fig = instances::tower_level8();
    auto j = to_json(fig.graph.to_spec());
    CHECK(graph_spec_from_json(Json::parse(j.dump())) == fig.graph.to_spec());
    CHECK(j["edges"][0]["id"] == "e1");
    CHECK_THROWS_AS(graph_spec_from_json(Json::parse(R"({"vertices": []})")), ParseError);
    CHECK_THROWS_WITH_AS(graph_spec_from_json(Json::parse(R"({"vertices": [{"genus": 1}], "edges": []})")),
                         doctest::Contains("vertex #0"), ParseError);
}

TEST_CASE("cochain and multiplicity json") {
    auto fig = instances::tower_level8();
    auto j = to_json(fig.multiplicity, fig.graph);
    CHECK(j["level"] == 8);
    CHECK(multiplicity_from_json(Json::parse(j.dump()), fig.graph) == fig.multiplicity);

    auto g = banana();
    auto c = cochain_from_json(Json::parse(R"({"modulus": 5, "values": {"e2": 7}})"), g);
    CHECK(c.values == std::vector<Residue>{0, 2});
    CHECK(cochain_from_json(cochain_to_json(c, g), g) == c);
    CHECK_THROWS_WITH_AS(cochain_from_json(Json::parse(R"({"modulus": 5, "values": {"x": 1}})"), g),
                         doctest::Contains("unknown edge id"), ParseError);
    CHECK_THROWS_AS(multiplicity_from_json(Json::parse(R"({"level": 3, "values": {"e1": 1, "e2": 1}})"), g),
                    ParseError);
}

TEST_CASE("ghost and annotation json") {
    auto w = instances::junior_level12();
    auto j = to_json(w.ghost, w.graph);
    CHECK(ghost_from_json(Json::parse(j.dump()), w.graph) == w.ghost);

    auto notes = annotations_from_json(
        Json::parse(R"({"eti": false, "component_orders": {"t": 1}, "order3_tails": ["t"]})"));
    CHECK_FALSE(notes.eti);
    CHECK(notes.component_orders.at("t") == 1);
    CHECK(notes.order3_tails.count("t") == 1);
    auto back = annotations_from_json(Json::parse(to_json(notes).dump()));
    CHECK(back.eti == notes.eti);
    CHECK(back.component_orders == notes.component_orders);
    CHECK(back.order3_tails == notes.order3_tails);
    CHECK(annotations_from_json(Json::object()).eti);
}

TEST_CASE("reports serialize rationals as p/q") {
    auto w = instances::odd_path_junior(5);
    auto j = to_json(classify(w.ghost), w.graph);
    CHECK(j["age"] == "4/5");
    CHECK(j["verdict"] == "junior");
    auto g = to_json(ghost_group(instances::tower_level8().graph, instances::tower_level8().multiplicity),
                     instances::tower_level8().graph);
    CHECK(g["order"] == "64");
    CHECK(g["elementary_divisors"] == Json::array({2, 4, 8}));
    CHECK(to_string(Rational(1)) == "1/1");

    auto audit = to_json(fiber_audit(banana(1, 1), 2), banana(1, 1));
    CHECK(audit["total"] == "64");
    CHECK(audit["rows"].size() == 2);
}

TEST_CASE("tower dot") {
    auto fig = instances::tower_level8();
    auto dot = tower_dot(fig.graph, fig.multiplicity);
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(dot.find("cluster_p2_k3") != std::string::npos);
    CHECK(dot.find("(0,inf)") != std::string::npos);
    CHECK(dot.find("(6,1)") != std::string::npos);
}
