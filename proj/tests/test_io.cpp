#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <functional>
#include <fstream>

#include "hopf/io.hpp"

using namespace hopf;
using io::json;

TEST_CASE("ring documents round-trip byte-identically") {
    for (const auto& name : builtin::fixture_ring_names()) {
        FusionRing ring = builtin::fixture_ring(name);
        json doc = io::ring_to_json(ring);
        std::string text = io::canonical_dump(doc);
        FusionRing parsed = io::ring_from_json(json::parse(text));
        CHECK(parsed == ring);
        CHECK(io::canonical_dump(io::ring_to_json(parsed)) == text);
    }
}

TEST_CASE("group documents round-trip") {
    for (const auto& name : builtin::fixture_group_names()) {
        FiniteGroup g = builtin::fixture_group(name);
        std::string text = io::canonical_dump(io::group_to_json(g));
        FiniteGroup parsed = io::group_from_json(json::parse(text));
        CHECK(parsed == g);
        CHECK(parsed.name() == g.name());
        CHECK(io::canonical_dump(io::group_to_json(parsed)) == text);
    }
}

TEST_CASE("malformed ring documents are rejected") {
    json good = io::ring_to_json(builtin::fixture_ring("rep_s3"));

    SUBCASE("missing field") {
        json doc = good;
        doc.erase("dual");
        CHECK_THROWS_AS(io::ring_from_json(doc), ParseError);
    }
    SUBCASE("missing product pair") {
        json doc = good;
        doc["products"].erase(0);
        CHECK_THROWS_AS(io::ring_from_json(doc), MalformedTable);
    }
    SUBCASE("duplicate product pair") {
        json doc = good;
        doc["products"].push_back(doc["products"][0]);
        CHECK_THROWS_AS(io::ring_from_json(doc), MalformedTable);
    }
    SUBCASE("index out of range") {
        json doc = good;
        doc["dual"][0] = 9;
        CHECK_THROWS_AS(io::ring_from_json(doc), MalformedTable);
    }
    SUBCASE("not an object") {
        CHECK_THROWS_AS(io::ring_from_json(json::array()), ParseError);
    }
}

TEST_CASE("digest is stable and content-sensitive") {
    CHECK(io::digest("") == "cbf29ce484222325");
    CHECK(io::digest("a") == io::digest("a"));
    CHECK(io::digest("a") != io::digest("b"));
}

TEST_CASE("fixtures on disk match the builtin generators") {
    // make_fixtures has run in the source tree; the data directory resolves it
    auto dir = io::data_directory();
    REQUIRE(std::filesystem::exists(dir / "rep_s3.json"));
    CHECK(io::load_fixture_ring("rep_s3") == builtin::fixture_ring("rep_s3"));
    CHECK(io::load_fixture_group("group_q8") == builtin::fixture_group("group_q8"));
    CHECK_THROWS_AS(io::load_fixture_ring("no_such_ring"), UnknownFixture);

    // manifest digests match file contents
    json manifest = io::load_json_file(dir / "manifest.json");
    for (auto it = manifest.begin(); it != manifest.end(); ++it) {
        std::ifstream in(dir / it.key(), std::ios::binary);
        std::string bytes((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());
        CHECK(io::digest(bytes) == it.value().get<std::string>());
    }
}

TEST_CASE("the shipped broken fixture fails exactly one axiom") {
    FusionRing broken = io::load_fixture_ring("rep_s3_broken");
    ValidationReport report = validate_ring(broken);
    CHECK_FALSE(report.all_passed());
    const auto* failure = report.first_failure();
    REQUIRE(failure != nullptr);
    CHECK(failure->name == "dimension_homomorphism");
    CHECK(failure->witness.find("(v,v)") != std::string::npos);
}

TEST_CASE("certificates serialize with sorted checks and no floats") {
    io::Certificate cert;
    cert.command = "validate";
    cert.inputs_digest = "feed";
    cert.summary = "ok";
    cert.checks = {{"zeta", true, ""}, {"alpha", false, "bad entry"}};
    cert.seed = 9;

    json doc = cert.to_json();
    CHECK(doc["checks"][0]["name"] == "alpha");
    CHECK(doc["checks"][0]["status"] == "fail");
    CHECK(doc["checks"][1]["name"] == "zeta");
    CHECK(doc["seed"] == 9);
    CHECK_FALSE(cert.all_passed());

    // integers only: no floating-point values anywhere in the tree
    std::function<void(const json&)> no_floats = [&](const json& j) {
        CHECK_FALSE(j.is_number_float());
        if (j.is_structured())
            for (const auto& child : j)
                no_floats(child);
    };
    no_floats(doc);
}

TEST_CASE("rep data documents parse") {
    json doc;
    doc["rings"] = json::array();
    doc["rings"].push_back({{"subgroup", {0}},
                            {"basis", {"x"}},
                            {"unit", 0},
                            {"constants", {{{1}}}}});
    doc["induction"] = json::array();
    doc["induction"].push_back(
        {{"sub", {0}}, {"super", {0, 1}}, {"matrix", {{1}, {0}}}});
    doc["restriction"] = json::array();
    doc["restriction"].push_back(
        {{"sub", {0}}, {"super", {0, 1}}, {"matrix", {{1, 0}}}});
    doc["conjugation"] = json::array();
    doc["conjugation"].push_back({{"sub", {0}}, {"g", 1}, {"matrix", {{1}}}});

    RepData data = io::repdata_from_json(doc);
    CHECK(data.rings.size() == 1);
    CHECK(data.rings.begin()->second.rank() == 1);
    auto key = std::make_pair(std::vector<FiniteGroup::Elem>{0},
                              std::vector<FiniteGroup::Elem>{0, 1});
    REQUIRE(data.induction.count(key) == 1);
    CHECK(data.induction[key].rows == 2);
    CHECK(data.restriction[key].cols == 2);
}
