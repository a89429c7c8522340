#include <doctest.h>

#include "fixtures.hpp"
#include "gm/spec_io.hpp"

using namespace gm;

TEST_CASE("serialize/parse round-trips byte-identically on canonical form") {
    for (const auto& spec : {fixtures::ex53_single(), fixtures::ex53_doubled(),
                             fixtures::ex54_m2(), fixtures::ex55_closed(),
                             fixtures::product_annulus_pair()}) {
        std::string canonical = serialize_spec(spec);
        std::string again = serialize_spec(parse_spec_text(canonical));
        CHECK(canonical == again);
    }
}

TEST_CASE("parse accepts non-canonical whitespace and key order") {
    std::string text = R"({
        "name": "t",
        "format": "gm-spec/1",
        "edges": {},
        "vertices": {
            "v1": {"exterior": [1], "kind": "seifert", "base_genus": 0,
                   "boundary_count": 1, "exceptional": [[2,1],[2,1]]}
        }
    })";
    GraphManifoldSpec spec = parse_spec_text(text);
    CHECK(spec.vertices.at("v1").exceptional.size() == 2);
    // idempotent under a second pass
    CHECK(serialize_spec(spec) == serialize_spec(parse_spec_text(serialize_spec(spec))));
}

TEST_CASE("unknown format versions are rejected") {
    std::string text = R"({"format":"gm-spec/2","name":"t","vertices":{},"edges":{}})";
    CHECK_THROWS_WITH_AS(parse_spec_text(text), doctest::Contains("unsupported-format"), Error);
}

TEST_CASE("malformed documents fail with a path") {
    CHECK_THROWS_AS(parse_spec_text("not json"), Error);
    CHECK_THROWS_AS(parse_spec_text(R"({"format":"gm-spec/1","name":"t","vertices":[]})"), Error);
    CHECK_THROWS_AS(parse_spec_text(
                        R"({"format":"gm-spec/1","name":"t","vertices":{},"edges":{"e":{}}})"),
                    Error);
}

TEST_CASE("fixture files agree with the in-code builders") {
    auto path = [](const char* name) { return std::string(FIXTURES_DIR) + "/" + name; };
    CHECK(serialize_spec(load_spec_file(path("ex53_single.json"))) ==
          serialize_spec(fixtures::ex53_single()));
    CHECK(serialize_spec(load_spec_file(path("ex53_doubled.json"))) ==
          serialize_spec(fixtures::ex53_doubled()));
    CHECK(serialize_spec(load_spec_file(path("ex54_m2.json"))) ==
          serialize_spec(fixtures::ex54_m2()));
    CHECK(serialize_spec(load_spec_file(path("ex55_closed.json"))) ==
          serialize_spec(fixtures::ex55_closed()));
    CHECK(serialize_spec(load_spec_file(path("ex56_pair.json"))) ==
          serialize_spec(fixtures::ex56_pair()));
    CHECK(serialize_spec(load_spec_file(path("solid_torus.json"))) ==
          serialize_spec(fixtures::solid_torus()));
}

TEST_CASE("gluing matrices round-trip") {
    auto spec = fixtures::ex53_doubled();
    auto copy = parse_spec_text(serialize_spec(spec));
    CHECK(copy.edges.at("e1").gluings[1].matrix == fixtures::swap_fiber_section());
    CHECK(copy.edges.at("e1").endpoints[1].first == "v2");
}
