#include "lrvan/json_io.hpp"

#include "doctest.h"
#include "lrvan/partition.hpp"
#include "lrvan/polytope.hpp"
#include "lrvan/tableau.hpp"

#include <string>

using namespace lrvan;
using nlohmann::json;

TEST_CASE("partition json round trip") {
    Partition p({4, 2, 1});
    json j = to_json(p);
    CHECK(j.dump() == "[4,2,1]");
    CHECK(partition_from_json(j) == p);
    CHECK(partition_from_json(json::array()) == Partition());
    CHECK(to_json(Partition()).dump() == "[]");
}

TEST_CASE("tableau json round trip") {
    SkewShape shape{Partition({2, 2, 2, 2, 2}), Partition({2, 2, 1, 1})};
    EdgeLabeledTableau::BoxMap boxes{{{3, 2}, 1}, {{4, 2}, 2}, {{5, 1}, 3}, {{5, 2}, 3}};
    EdgeLabeledTableau::EdgeMap edges{{{4, 1}, {1, 2}}, {{5, 2}, {4, 5}}};
    EdgeLabeledTableau t(shape, boxes, edges);

    json j = to_json(t);
    CHECK(j["outer"].dump() == "[2,2,2,2,2]");
    CHECK(j["inner"].dump() == "[2,2,1,1]");
    CHECK(j["boxes"].is_array());
    CHECK(j["boxes"].size() == 4);
    CHECK(j["boxes"][0].dump() == "[3,2,1]");
    CHECK(j["edges"].size() == 2);
    CHECK(j["edges"][0].dump() == "[4,1,[1,2]]");
    CHECK(j["edges"][1].dump() == "[5,2,[4,5]]");

    EdgeLabeledTableau back = tableau_from_json(j);
    CHECK(back == t);

    // Malformed payloads are rejected rather than half-parsed.
    json bad = j;
    bad["boxes"][0] = json::array({3, 2});
    CHECK_THROWS(tableau_from_json(bad));
}

TEST_CASE("empty tableau round trips") {
    EdgeLabeledTableau t;
    json j = to_json(t);
    CHECK(tableau_from_json(j) == t);
}

TEST_CASE("system json shape") {
    ConstraintSystem sys = build_constraints(Partition({1}), Partition({1}), Partition({1}));
    json j = to_json(sys);
    CHECK(j["num_vars"] == 2);
    CHECK(j["shape_rows"] == 1);
    CHECK(j["labels"] == 1);
    REQUIRE(j["equalities"].is_array());
    REQUIRE(j["inequalities"].is_array());
    CHECK(j["equalities"].size() == sys.equalities.size());
    CHECK(j["inequalities"].size() == sys.inequalities.size());
    const json& row = j["equalities"][0];
    CHECK(row["tag"] == "B");
    CHECK(row["i"] == 1);
    CHECK(row["coeffs"].size() == 2);
    CHECK(row.contains("rhs"));
}

TEST_CASE("text dump of a one-variable-pair system") {
    ConstraintSystem sys = build_constraints(Partition(), Partition({1}), Partition({1}));
    std::string text = dump_text(sys);
    CHECK(text.find("B(1,0): +rB[1][1] = 1") != std::string::npos);
    CHECK(text.find("C(0,1): +rB[1][1] +rE[1][1] = 1") != std::string::npos);
    CHECK(text.find("A(1,1): -rB[1][1] <= 0") != std::string::npos);
    CHECK(text.find("D(1,1): +rE[1][1] <= 0") != std::string::npos);
}

TEST_CASE("tableau rendering") {
    SkewShape shape{Partition({2}), Partition({1})};
    EdgeLabeledTableau t(shape, {{{1, 2}, 1}}, {{{1, 1}, {1}}, {{1, 2}, {2}}});
    std::string text = render_text(t);
    CHECK(text.find('.') != std::string::npos);   // inner cell placeholder
    CHECK(text.find('1') != std::string::npos);
    CHECK(text.find("edge") != std::string::npos);
}
