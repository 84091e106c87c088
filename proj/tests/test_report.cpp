#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toral/report.hpp"

using namespace toral;

namespace {

const char* kShearInput = R"({
  "schema_version": 1,
  "n": 2,
  "matrix": [[1, 1], [0, 1]],
  "translation": {
    "rational": ["0", "0"],
    "irrational": [{"symbol": "theta", "coefficients": ["0", "1"]}]
  }
})";

}  // namespace

TEST_CASE("input parsing: exact rationals and symbols") {
    InputSpec spec = parse_input_spec(kShearInput);
    CHECK(spec.n == 2);
    CHECK(spec.matrix(0, 1) == 1);
    CHECK(spec.translation.rational_part[0] == 0);
    REQUIRE(spec.translation.irrational_terms.size() == 1);
    CHECK(spec.translation.irrational_terms[0].symbol == "theta");
    CHECK(spec.translation.irrational_terms[0].coefficients[1] == Rational(1));

    InputSpec half = parse_input_spec(R"({"schema_version":1,"n":1,
        "matrix":[[2]],"translation":{"rational":["1/2"]}})");
    CHECK(half.translation.rational_part[0] == Rational(1, 2));
}

TEST_CASE("input parsing rejects malformed documents") {
    CHECK_THROWS_AS(parse_input_spec("not json"), parse_error);
    CHECK_THROWS_AS(parse_input_spec(R"({"n":1,"matrix":[[2]]})"), parse_error);
    CHECK_THROWS_AS(parse_input_spec(R"({"schema_version":2,"n":1,"matrix":[[2]]})"),
                    parse_error);
    CHECK_THROWS_AS(parse_input_spec(R"({"schema_version":1,"n":2,"matrix":[[2]]})"),
                    parse_error);
    CHECK_THROWS_AS(
        parse_input_spec(
            R"({"schema_version":1,"n":1,"matrix":[[2]],"translation":{"rational":["x"]}})"),
        parse_error);
    CHECK_THROWS_AS(
        parse_input_spec(
            R"({"schema_version":1,"n":1,"matrix":[[2]],"translation":{"rational":["1/2","1/3"]}})"),
        parse_error);
}

TEST_CASE("numeric translation for simulation") {
    InputSpec spec = parse_input_spec(
        R"({"schema_version":1,"n":1,"matrix":[[1]],"translation":{"rational":["1/4"]}})");
    CHECK(spec.numeric_translation() == std::vector<double>{0.25});

    InputSpec withf = parse_input_spec(
        R"({"schema_version":1,"n":1,"matrix":[[1]],"translation_float":[0.618]})");
    CHECK(withf.numeric_translation() == std::vector<double>{0.618});

    // Irrational symbols without a float shadow cannot be simulated.
    InputSpec sym = parse_input_spec(kShearInput);
    CHECK_THROWS_AS(sym.numeric_translation(), parse_error);
}

TEST_CASE("documents round-trip byte for byte") {
    InputSpec spec = parse_input_spec(kShearInput);
    TransitivityVerdict v = classify_transitivity(spec.matrix, spec.translation);
    Json payload;
    payload["transitivity"] = json_verdict(v);
    payload["ktheory"] = json_ktheory(k_groups_affine(spec.matrix, spec.translation));
    Json doc = make_document("analyze", {spec}, payload);

    std::string text = serialize_document(doc);
    Json reparsed = Json::parse(text);
    CHECK(reparsed == doc);
    CHECK(serialize_document(reparsed) == text);
}

TEST_CASE("reports echo the independence assumption exactly when symbols occur") {
    InputSpec sym = parse_input_spec(kShearInput);
    Json with = make_document("analyze", {sym}, Json::object());
    REQUIRE(with["assumptions"].is_array());
    CHECK(with["assumptions"].size() == 1);
    CHECK(with["assumptions"][0].get<std::string>().find("Q-linearly independent") !=
          std::string::npos);

    InputSpec plain = parse_input_spec(
        R"({"schema_version":1,"n":1,"matrix":[[2]],"translation":{"rational":["0"]}})");
    Json without = make_document("analyze", {plain}, Json::object());
    CHECK(without["assumptions"].empty());
}

TEST_CASE("comparison and presentation payloads serialize") {
    InputSpec a = parse_input_spec(
        R"({"schema_version":1,"n":1,"matrix":[[3]],"translation":{"rational":["0"]}})");
    InputSpec b = parse_input_spec(
        R"({"schema_version":1,"n":1,"matrix":[[-3]],"translation":{"rational":["0"]}})");
    ComparisonReport cmp = same_algebra(a.matrix, a.translation, b.matrix, b.translation);
    Json jc = json_comparison(cmp);
    CHECK(jc["verdict"] == "NotIsomorphic");

    Json jp = json_presentation(presentation(a.matrix, a.translation));
    CHECK(jp["coset_representatives"].size() == 3);

    Json jg = json_grid_result(GridCoverResult{true, 7});
    CHECK(jg["covered"] == true);
    CHECK(jg["steps"] == 7);
}
