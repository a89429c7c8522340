#pragma once

// Independent oracles for the derived expected values. These recompute Euler
// characteristics from first principles (explicit permutations, cell counts)
// and never touch the code paths they check.

#include <vector>

namespace oracles {

// chi of a compact orientable surface of genus h with b boundary circles,
// counted from an explicit CW structure: 1 interior vertex and one vertex
// per boundary circle; 2h interior loops, b boundary circles, b arcs joining
// the interior vertex to the boundary vertices; one 2-cell.
inline int cellular_chi(int genus, int boundaries) {
    int vertices = 1 + boundaries;
    int edges = 2 * genus + boundaries + boundaries;
    int faces = 1;
    return vertices - edges + faces;
}

// chi of the degree-n cover of an orientable base of genus g with m boundary
// circles, branched over cone points of the given orders (each dividing n).
// Build the monodromy permutation at each cone point with cycle type
// (n/alpha) cycles of length alpha, cover the punctured base by multiplying
// chi, and fill one point back in per cycle.
inline int branched_cover_chi(int genus, int boundaries, const std::vector<int>& alphas, int n) {
    int punctured_chi = 2 - 2 * genus - boundaries - static_cast<int>(alphas.size());
    int chi = n * punctured_chi;
    for (int alpha : alphas) {
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) {
            int block = i / alpha;
            int offset = i % alpha;
            perm[i] = block * alpha + (offset + 1) % alpha;
        }
        std::vector<bool> seen(n, false);
        int cycles = 0;
        for (int i = 0; i < n; ++i) {
            if (seen[i]) continue;
            ++cycles;
            for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
        }
        chi += cycles;
    }
    return chi;
}

// Number of arcs needed to cut a surface of Euler characteristic start_chi
// down to a complement of Euler characteristic target_chi, one chi step per
// properly embedded arc.
inline int arc_count_oracle(int start_chi, int target_chi) { return target_chi - start_chi; }

} // namespace oracles
