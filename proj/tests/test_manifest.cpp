#include <doctest.h>

#include <json.hpp>

#include "toric/manifest.hpp"

using nlohmann::json;
using toric::Manifest;

namespace {

std::string fixture(const std::string& name) {
    return std::string(TORIC_FIXTURES_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("fixtures parse and materialize") {
    for (const char* name :
         {"p2_tangent.json", "p3_tangent.json", "p4_tangent.json", "x2_tangent_c2.json",
          "x2_tangent_twisted.json", "x2_indecomposable.json", "x3_example_twisted.json",
          "x2_characters_tangent.json", "x2_filtrations_tangent.json", "p2_line_bundle.json",
          "x2_rank1.json"}) {
        CAPTURE(name);
        Manifest m = Manifest::from_file(fixture(name));
        toric::Fan fan = m.make_fan();
        CHECK_NOTHROW(m.make_bundle(fan));
    }
}

TEST_CASE("unknown keys are rejected anywhere in the document") {
    json doc = {{"variety", {{"projective_space", {{"n", 2}}}}},
                {"bundle", {{"builtin", {{"name", "tangent"}}}}},
                {"bonus", 1}};
    CHECK_THROWS_WITH_AS(Manifest::from_json(doc), doctest::Contains("unknown key"),
                         toric::ValidationError);
    json doc2 = {{"variety", {{"projective_space", {{"n", 2}, {"extra", 1}}}}},
                 {"bundle", {{"builtin", {{"name", "tangent"}}}}}};
    CHECK_THROWS_AS(Manifest::from_json(doc2), toric::ValidationError);
    json doc3 = {{"variety", {{"projective_space", {{"n", 2}}}}},
                 {"bundle", {{"builtin", {{"name", "tangent"}, {"oops", 3}}}}}};
    CHECK_THROWS_AS(Manifest::from_json(doc3), toric::ValidationError);
}

TEST_CASE("missing and malformed fields fail validation") {
    CHECK_THROWS_AS(Manifest::from_json(json::object()), toric::ValidationError);
    json no_bundle = {{"variety", {{"projective_space", {{"n", 2}}}}}};
    CHECK_THROWS_AS(Manifest::from_json(no_bundle), toric::ValidationError);
    json two_bundles = {{"variety", {{"projective_space", {{"n", 2}}}}},
                        {"bundle",
                         {{"builtin", {{"name", "tangent"}}},
                          {"characters", {{"rank", 1}, {"per_cone", json::array()}}}}}};
    CHECK_THROWS_AS(Manifest::from_json(two_bundles), toric::ValidationError);
    json bad_number = {{"variety", {{"bott_tower", {{"n", 2}, {"bott_numbers", {{"1,2", 1.5}}}}}}},
                       {"bundle", {{"builtin", {{"name", "tangent"}}}}}};
    CHECK_THROWS_AS(Manifest::from_json(bad_number), toric::ValidationError);
    json bad_key = {{"variety", {{"bott_tower", {{"n", 2}, {"bott_numbers", {{"12", 1}}}}}}},
                    {"bundle", {{"builtin", {{"name", "tangent"}}}}}};
    CHECK_THROWS_AS(Manifest::from_json(bad_key), toric::ValidationError);
}

TEST_CASE("nonpositive twisting integers are rejected when the fan is built") {
    json doc = {{"variety", {{"bott_tower", {{"n", 2}, {"bott_numbers", {{"1,2", 0}}}}}}},
                {"bundle", {{"builtin", {{"name", "tangent"}}}}}};
    Manifest m = Manifest::from_json(doc);
    CHECK_THROWS_AS(m.make_fan(), toric::ValidationError);
}

TEST_CASE("filtration steps must end at zero explicitly") {
    json doc = {{"variety", {{"projective_space", {{"n", 2}}}}},
                {"bundle",
                 {{"filtrations",
                   {{"rank", 1},
                    {"per_ray", json::array({
                                    json{{"ray", 0}, {"steps", json::array({json{
                                                          {"from", 1},
                                                          {"generators", json::array()}}})}},
                                    json{{"ray", 1},
                                         {"steps", json::array({json{{"from", 1},
                                                                     {"generators",
                                                                      json::array({json::array(
                                                                          {"1"})})}}})}},
                                    json{{"ray", 2}, {"steps", json::array({json{
                                                          {"from", 0},
                                                          {"generators", json::array()}}})}},
                                })}}}}}};
    Manifest m = Manifest::from_json(doc);
    toric::Fan fan = m.make_fan();
    CHECK_THROWS_WITH_AS(m.make_bundle(fan), doctest::Contains("empty-generator"),
                         toric::ValidationError);
}

TEST_CASE("rational strings parse exactly in points and generators") {
    json doc = {{"variety", {{"bott_tower", {{"n", 2}, {"bott_numbers", {{"1,2", 1}}}}}}},
                {"bundle", {{"builtin", {{"name", "tangent"}}}}},
                {"points", json::array({json::array({"1/2", "1", "0", "-3/4"})})}};
    Manifest m = Manifest::from_json(doc);
    REQUIRE(m.points.size() == 1);
    CHECK(m.points[0][0] == toric::Rational(toric::Int(1), toric::Int(2)));
    CHECK(m.points[0][3] == toric::Rational(toric::Int(-3), toric::Int(4)));

    json bad = doc;
    bad["points"] = json::array({json::array({"0.5", "1", "0", "1"})});
    CHECK_THROWS_AS(Manifest::from_json(bad), toric::ValidationError);
}

TEST_CASE("filtration input reproduces the builtin it spells out") {
    Manifest raw = Manifest::from_file(fixture("x2_filtrations_tangent.json"));
    toric::Fan fan = raw.make_fan();
    auto custom = raw.make_bundle(fan);
    auto builtin = toric::make_tangent(fan);
    const auto& a = custom.restriction_profile();
    const auto& b = builtin.restriction_profile();
    for (const auto& row : a.rows())
        CHECK(row.splitting.degrees == b.splitting(row.curve).degrees);
    for (int c = 0; c < static_cast<int>(fan.max_cones().size()); ++c)
        CHECK(custom.characters(c) == builtin.characters(c));
}

TEST_CASE("certificates derive from the bundle family or the assertion") {
    Manifest tangent = Manifest::from_file(fixture("p2_tangent.json"));
    toric::Fan fan = tangent.make_fan();
    auto bundle = tangent.make_bundle(fan);
    CHECK(tangent.certificate(bundle) == toric::Certificate::KnownUniform);

    json doc = {{"variety", {{"projective_space", {{"n", 2}}}}},
                {"bundle",
                 {{"filtrations",
                   {{"rank", 1},
                    {"per_ray",
                     json::array(
                         {json{{"ray", 0},
                               {"steps", json::array({json{{"from", 1},
                                                           {"generators", json::array()}}})}},
                          json{{"ray", 1},
                               {"steps", json::array({json{{"from", 1},
                                                           {"generators", json::array()}}})}},
                          json{{"ray", 2},
                               {"steps", json::array({json{{"from", 1},
                                                           {"generators", json::array()}}})}}})}}}}},
                {"assertions", {{"uniform_A1", true}}}};
    Manifest asserted = Manifest::from_json(doc);
    toric::Fan p2 = asserted.make_fan();
    auto custom = asserted.make_bundle(p2);
    CHECK(asserted.certificate(custom) == toric::Certificate::Asserted);

    doc.erase("assertions");
    Manifest bare = Manifest::from_json(doc);
    toric::Fan p2b = bare.make_fan();
    auto custom2 = bare.make_bundle(p2b);
    CHECK(bare.certificate(custom2) == toric::Certificate::None);
}
