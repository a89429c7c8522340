#include "gm/vertical_splittings.hpp"

#include "gm/error.hpp"

namespace gm {

int spine_arc_count(const VertexManifold& v, int fibers_in_V, int boundaries_in_V) {
    if (v.kind != VertexKind::SeifertFibered)
        fail("not-seifert", "vertical splittings need a Seifert fibered vertex");
    int n = v.exceptional_count();
    int m = v.boundary_count;
    if (fibers_in_V < 0 || fibers_in_V > n || boundaries_in_V < 1 || boundaries_in_V > m)
        fail("bad-partition", "partition counts out of range");
    int w_fibers = n - fibers_in_V;
    int w_boundaries = m - boundaries_in_V;
    int chi_target = (w_fibers + w_boundaries > 0) ? w_fibers : 1;
    int arcs = chi_target - euler_char_base(v);
    if (arcs < 0) fail("no-spine", "partition admits no spine arc system");
    return arcs;
}

SplittingResult vertical_splitting(const VertexManifold& v, const std::set<int>& fibers_in_V,
                                   const std::set<int>& boundaries_in_V) {
    for (int f : fibers_in_V)
        if (f < 1 || f > v.exceptional_count())
            fail("bad-partition", "no exceptional fiber " + std::to_string(f));
    for (int b : boundaries_in_V)
        if (b < 1 || b > v.boundary_count)
            fail("bad-partition", "no boundary " + std::to_string(b));

    int i = static_cast<int>(fibers_in_V.size());
    int j = static_cast<int>(boundaries_in_V.size());
    int arcs = spine_arc_count(v, i, j);

    // V = N(fibers + boundaries + arcs); every arc is based at the first
    // V-side boundary, so V is connected exactly when the arcs can reach the
    // other j-1 boundaries and thread the i fibers.
    bool connected = arcs >= j - 1 && (i == 0 || arcs >= 1);
    if (!connected) fail("disconnected-splitting", "spine does not connect the V side");

    SplittingResult result;
    result.spec = VerticalSplittingSpec{fibers_in_V, boundaries_in_V, arcs};
    result.chi = -2 * arcs; // vertical pieces have chi 0, each arc is a 1-handle
    result.genus = 1 + arcs;
    return result;
}

SplittingResult product_times_circle_splitting(int genus) {
    if (genus < 1) fail("sphere-base-unsupported", "S^2 x S^1 is outside this construction");
    int arcs = 2 * genus; // chi(Q \ D) = 1 - 2g arcs to cut to a disk
    SplittingResult result;
    result.spec = VerticalSplittingSpec{{}, {}, arcs};
    result.chi = -2 * arcs;
    result.genus = 1 + arcs;
    return result;
}

} // namespace gm
