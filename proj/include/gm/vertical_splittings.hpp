#pragma once

#include <set>

#include "gm/model.hpp"

namespace gm {

// A vertical Heegaard splitting of a single Seifert fibered vertex manifold
// with boundary: exceptional fibers and boundary components are partitioned
// between the compression bodies V and W, and V is a neighborhood of its
// fibers and boundaries joined by a spine arc system.
struct VerticalSplittingSpec {
    std::set<int> fibers_in_V;     // 1-based exceptional indices
    std::set<int> boundaries_in_V; // 1-based boundary indices, nonempty
    int spine_arcs = 0;            // |Gamma|, computed
};

struct SplittingResult {
    int genus = 0;
    int chi = 0;
    VerticalSplittingSpec spec;
};

// Size of the spine arc system for the partition with i fibers and j
// boundaries on the V side: the complement of the arcs must deformation
// retract to disks around the W-side exceptional points and annuli around
// the W-side boundaries (or a single disk when that set is empty), and each
// properly embedded arc cut raises chi by one.
int spine_arc_count(const VertexManifold& v, int fibers_in_V, int boundaries_in_V);

SplittingResult vertical_splitting(const VertexManifold& v, const std::set<int>& fibers_in_V,
                                   const std::set<int>& boundaries_in_V);

// The standard splitting of (closed orientable genus-g surface) x S^1:
// ambient 1-surgery on a vertical torus along 2g arcs, genus 2g + 1.
SplittingResult product_times_circle_splitting(int genus);

} // namespace gm
