#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gm/slope.hpp"

namespace gm {

// Circle pattern of a surface piece on one boundary of its vertex manifold.
// All circles on one boundary are parallel, so the data is their order around
// the boundary (cyclic on tori, linear on annulus families of product
// vertices), which surface component each belongs to, and which complement
// region fills the gap after each circle.
struct BoundaryCircles {
    Slope slope = Slope::fiber();
    bool cyclic = true;
    std::vector<int> component; // per circle
    std::vector<int> gap;       // size = circles (cyclic) or circles + 1 (linear)
};

// Combinatorial record of how a piece sits inside its vertex manifold:
// complement regions, surface components, boundary circle patterns, and the
// walls (pairs of regions forced onto opposite sides of the surface).
// Assembly glues these across edge manifolds, checks that the glued surface
// is connected, and 2-colors the glued regions into V and W.
struct PieceTopology {
    int regions = 0;
    int components = 0;
    std::map<int, BoundaryCircles> circles;  // keyed by boundary index
    std::map<int, int> free_boundary_region; // region at boundaries the piece misses
    std::vector<std::pair<int, int>> walls;
    std::vector<std::pair<int, int>> region_merges;    // tube / collar channels
    std::vector<std::pair<int, int>> component_merges; // collar joins
    std::vector<std::string> region_names;
};

} // namespace gm
