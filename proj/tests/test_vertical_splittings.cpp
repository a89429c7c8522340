#include <doctest.h>

#include "fixtures.hpp"
#include "gm/vertical_splittings.hpp"
#include "oracles.hpp"

using namespace gm;

TEST_CASE("spine arc counts") {
    auto disk2 = fixtures::seifert(0, 1, {{2, 1}, {2, 1}}, {1});
    CHECK(spine_arc_count(disk2, 0, 1) == 1); // one surgery arc
    auto disk0 = fixtures::seifert(0, 1, {}, {1});
    CHECK(spine_arc_count(disk0, 0, 1) == 0); // solid torus
    // annulus base, both boundaries in V: the complement must be a disk, so
    // one spanning arc (oracle: chi 0 -> chi 1 is one arc cut)
    auto annulus = fixtures::seifert(0, 2, {}, {1, 2});
    CHECK(spine_arc_count(annulus, 0, 2) == oracles::arc_count_oracle(0, 1));
    // every in-range partition admits a spine: chi(O) <= 1 and the target is
    // at least 1 whenever the base is a disk
    for (int g = 0; g <= 3; ++g)
        for (int m = 1; m <= 3; ++m)
            for (int n = 0; n <= 3; ++n) {
                std::vector<SeifertInvariant> exc(n, SeifertInvariant{2, 1});
                auto v = fixtures::seifert(g, m, exc);
                for (int i = 0; i <= n; ++i)
                    for (int j = 1; j <= m; ++j) CHECK(spine_arc_count(v, i, j) >= 0);
            }
    CHECK_THROWS_AS(spine_arc_count(disk2, 3, 1), Error);
    CHECK_THROWS_AS(spine_arc_count(disk2, 0, 2), Error);
}

TEST_CASE("vertical splittings of the two-fiber disk example") {
    auto v = fixtures::seifert(0, 1, {{2, 1}, {2, 1}}, {1});
    auto result = vertical_splitting(v, {}, {1});
    CHECK(result.genus == 2);
    CHECK(result.chi == -4 / 2 * 1); // -2: one arc, one 1-handle
    CHECK(result.spec.spine_arcs == 1);
    // a fiber on the V side has no arc to thread it
    CHECK_THROWS_WITH_AS(vertical_splitting(v, {1}, {1}),
                         doctest::Contains("disconnected-splitting"), Error);
}

TEST_CASE("solid torus splits with genus one") {
    auto v = fixtures::seifert(0, 1, {}, {1});
    auto result = vertical_splitting(v, {}, {1});
    CHECK(result.genus == 1);
    CHECK(result.chi == 0);
}

TEST_CASE("pants base with one V-boundary") {
    auto v = fixtures::seifert(0, 3, {}, {1, 2, 3});
    auto result = vertical_splitting(v, {}, {1});
    // oracle: chi target 0 (two W-side annuli), chi(O) = -1, one arc
    CHECK(result.spec.spine_arcs == oracles::arc_count_oracle(-1, 0));
    CHECK(result.genus == 2);
}

TEST_CASE("torus x I has a genus-2 vertical splitting with both boundaries in V") {
    auto v = fixtures::seifert(0, 2, {}, {1, 2});
    auto result = vertical_splitting(v, {}, {1, 2});
    CHECK(result.spec.spine_arcs == 1);
    CHECK(result.genus == 2);
}

TEST_CASE("feasible partitions give genus at least 1, and 1 only with an empty spine") {
    for (int g = 0; g <= 2; ++g)
        for (int m = 1; m <= 3; ++m)
            for (int n = 0; n <= 2; ++n) {
                std::vector<SeifertInvariant> exc(n, SeifertInvariant{2, 1});
                auto v = fixtures::seifert(g, m, exc);
                for (int i = 0; i <= n; ++i)
                    for (int j = 1; j <= m; ++j) {
                        std::set<int> fibers, boundaries;
                        for (int f = 1; f <= i; ++f) fibers.insert(f);
                        for (int b = 1; b <= j; ++b) boundaries.insert(b);
                        try {
                            auto result = vertical_splitting(v, fibers, boundaries);
                            CHECK(result.genus >= 1);
                            CHECK((result.genus == 1) == (result.spec.spine_arcs == 0));
                        } catch (const Error&) {
                        }
                    }
            }
    // genus 1 is realized by the solid torus pieces
    CHECK(vertical_splitting(fixtures::seifert(0, 1, {}), {}, {1}).genus == 1);
    CHECK(vertical_splitting(fixtures::seifert(0, 1, {{2, 1}}), {}, {1}).genus == 1);
}

TEST_CASE("genus is invariant under swapping V and W when both sides are feasible") {
    auto v = fixtures::seifert(0, 2, {}, {1, 2});
    auto a = vertical_splitting(v, {}, {1});
    auto b = vertical_splitting(v, {}, {2});
    CHECK(a.genus == b.genus);
}

TEST_CASE("product times circle splittings") {
    for (int g : {1, 2, 3, 4}) {
        auto result = product_times_circle_splitting(g);
        // oracle: chi(Q \ D) = 1 - 2g, cut to a disk with 2g arcs; the torus
        // plus 2g tubes has genus 2g + 1
        int arcs = oracles::arc_count_oracle(1 - 2 * g, 1);
        CHECK(arcs == 2 * g);
        CHECK(result.spec.spine_arcs == arcs);
        CHECK(result.genus == 2 * g + 1);
        CHECK(result.chi == -4 * g);
    }
    CHECK_THROWS_WITH_AS(product_times_circle_splitting(0),
                         doctest::Contains("sphere-base-unsupported"), Error);
}
