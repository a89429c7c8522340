#include <doctest.h>

#include "fixtures.hpp"
#include "gm/spec_io.hpp"
#include "properties.hpp"

constexpr int kCases = 10000;

TEST_CASE("transport preserves intersection numbers (10^4 cases)") {
    CHECK(properties::suite_transport_preserves_intersection(kCases) == kCases);
}

TEST_CASE("exhaustive small-slope transport invariance") {
    // determinant +-1 consequence, checked exhaustively for small entries
    std::vector<gm::Slope> slopes;
    for (int a = -6; a <= 6; ++a)
        for (int b = -6; b <= 6; ++b) {
            if (a == 0 && b == 0) continue;
            if (std::gcd(std::abs(a), std::abs(b)) != 1) continue;
            slopes.push_back(gm::Slope(a, b));
        }
    gm::Mat2 m{3, 2, 4, 3};
    for (const auto& s : slopes)
        for (const auto& t : slopes)
            CHECK(gm::intersection_number(gm::transport_slope(m, s), gm::transport_slope(m, t)) ==
                  gm::intersection_number(s, t));
}

TEST_CASE("amalgamation laws (10^4 cases)") {
    CHECK(properties::suite_amalgamate_laws(kCases) == kCases);
}

TEST_CASE("spine arc count monotonicity (10^4 cases)") {
    CHECK(properties::suite_spine_monotonicity(kCases) > 0);
}

TEST_CASE("chi additivity and bicoloring of emitted candidates (10^4 candidates)") {
    CHECK(properties::suite_candidate_stream(kCases) >= kCases);
}

TEST_CASE("serialization round-trips random specs") {
    std::mt19937 rng(1234);
    for (int i = 0; i < 2000; ++i) {
        auto spec = properties::random_spec(rng);
        std::string canonical = gm::serialize_spec(spec);
        CHECK(canonical == gm::serialize_spec(gm::parse_spec_text(canonical)));
    }
}

TEST_CASE("fixture candidates pass the same checks") {
    for (const auto& spec : {fixtures::ex53_single(), fixtures::ex54_m2(), fixtures::ex55_closed(),
                             fixtures::ex56_pair(), fixtures::solid_torus()}) {
        for (const auto& cand : gm::enumerate_standard(spec, {}))
            properties::check_candidate(spec, cand);
    }
}
