#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "gm/edge_patterns.hpp"

using namespace gm;

namespace {
int count_kind(const std::vector<EdgePattern>& patterns, PatternKind kind) {
    return static_cast<int>(
        std::count_if(patterns.begin(), patterns.end(),
                      [&](const EdgePattern& p) { return p.kind == kind; }));
}
} // namespace

TEST_CASE("two fiber curves per side, identity gluing") {
    auto e = fixtures::torus_edge("a", 1, "b", 1);
    SlopeCount fiber2{Slope::fiber(), 2};
    auto patterns = edge_patterns(e, fiber2, fiber2, true);
    // oracle: exhaustive matching of two curves per side: spanning 0 or 2,
    // parallels pairing the rest, plus tube variants
    CHECK(count_kind(patterns, PatternKind::Annuli) == 2);
    CHECK(count_kind(patterns, PatternKind::AnnuliWithTube) == 4);
    CHECK(count_kind(patterns, PatternKind::Cross) == 0); // |fiber ^ fiber| = 0
    for (const auto& p : patterns) {
        CHECK(p.circle_count(0) == 2);
        CHECK(p.circle_count(1) == 2);
        CHECK(p.chi == (p.kind == PatternKind::Annuli ? 0 : -2));
    }
}

TEST_CASE("swap gluing offers the collar pattern and kills spanning annuli") {
    auto e = fixtures::torus_edge("a", 1, "b", 1, fixtures::identity(),
                                  fixtures::swap_fiber_section());
    SlopeCount fiber2{Slope::fiber(), 2};
    auto patterns = edge_patterns(e, fiber2, fiber2, true);
    CHECK(count_kind(patterns, PatternKind::Cross) == 1);
    for (const auto& p : patterns) CHECK(p.spanning == 0);
    // single curves per side: no pattern at all (parity) even with dual slopes
    SlopeCount fiber1{Slope::fiber(), 1};
    CHECK(edge_patterns(e, fiber1, fiber1, true).empty());
}

TEST_CASE("annulus edge with one core curve per side") {
    auto e = fixtures::annulus_edge("a", 1, "b", 1);
    SlopeCount core{Slope::section(), 1};
    auto with_tubes = edge_patterns(e, core, core, true);
    CHECK(count_kind(with_tubes, PatternKind::Annuli) == 1);
    CHECK(with_tubes.front().spanning == 1);
    CHECK(count_kind(with_tubes, PatternKind::AnnuliWithTube) == 2);
    CHECK(count_kind(with_tubes, PatternKind::Cross) == 0);
    auto without = edge_patterns(e, core, core, false);
    CHECK(count_kind(without, PatternKind::AnnuliWithTube) == 0);
}

TEST_CASE("absent demands force empty or one-sided patterns") {
    auto e = fixtures::torus_edge("a", 1, "b", 1);
    auto patterns = edge_patterns(e, std::nullopt, std::nullopt, true);
    REQUIRE(patterns.size() == 1); // the empty pattern
    CHECK(patterns.front().kind == PatternKind::Annuli);
    CHECK(patterns.front().circle_count(0) == 0);

    SlopeCount fiber2{Slope::fiber(), 2};
    auto one_sided = edge_patterns(e, fiber2, std::nullopt, true);
    CHECK(count_kind(one_sided, PatternKind::Annuli) == 1);
    CHECK(one_sided.front().parallel[0] == 1);
    CHECK(one_sided.front().parallel[1] == 0);
    // odd demand on one side: nothing pairs
    CHECK(edge_patterns(e, SlopeCount{Slope::fiber(), 1}, std::nullopt, true).empty());
}

TEST_CASE("collar patterns are symmetric under edge reversal") {
    auto e = fixtures::torus_edge("a", 1, "b", 1, gm::Mat2{2, 1, 1, 1},
                                  fixtures::swap_fiber_section());
    gm::EdgeManifold reversed = e;
    std::swap(reversed.endpoints[0], reversed.endpoints[1]);
    std::swap(reversed.gluings[0], reversed.gluings[1]);
    SlopeCount left{Slope(1, 2), 2};
    SlopeCount right{Slope::fiber(), 2};
    auto forward = edge_patterns(e, left, right, false);
    auto backward = edge_patterns(reversed, right, left, false);
    REQUIRE(count_kind(forward, PatternKind::Cross) == 1);
    REQUIRE(count_kind(backward, PatternKind::Cross) == 1);
    auto fwd = std::find_if(forward.begin(), forward.end(),
                            [](const EdgePattern& p) { return p.kind == PatternKind::Cross; });
    auto bwd = std::find_if(backward.begin(), backward.end(),
                            [](const EdgePattern& p) { return p.kind == PatternKind::Cross; });
    CHECK(fwd->chi == bwd->chi);
    CHECK((*fwd->cross_slopes)[0] == (*bwd->cross_slopes)[1]);
    CHECK((*fwd->cross_slopes)[1] == (*bwd->cross_slopes)[0]);
}

TEST_CASE("pattern totals match the demands exactly") {
    auto e = fixtures::torus_edge("a", 1, "b", 1);
    SlopeCount big{Slope::fiber(), 4};
    SlopeCount small{Slope::fiber(), 2};
    for (const auto& p : edge_patterns(e, big, small, true)) {
        CHECK(p.spanning + 2 * p.parallel[0] == 4);
        CHECK(p.spanning + 2 * p.parallel[1] == 2);
    }
}
