#pragma once

#include <array>
#include <optional>
#include <vector>

#include <json.hpp>

#include "gm/model.hpp"
#include "gm/surfaces.hpp"

namespace gm {

enum class PatternKind { Annuli, AnnuliWithTube, Cross };

const char* pattern_kind_name(PatternKind kind);

// Intersection of the splitting surface with one edge manifold. Annuli:
// spanning annuli plus boundary-parallel annuli paired off at each end
// (chi 0). AnnuliWithTube: the same with one ambient 1-surgery along an arc
// isotopic into the end torus `tube_end` (chi -2). Cross: a collar of
// c x {0} union p x I union c' x {1} for dual curves c, c' (chi -2, two
// boundary circles of each slope).
struct EdgePattern {
    PatternKind kind = PatternKind::Annuli;
    int spanning = 0;
    std::array<int, 2> parallel = {0, 0};
    int tube_end = -1;                                // AnnuliWithTube only
    std::optional<std::array<Slope, 2>> cross_slopes; // Cross only, end-local coordinates
    int chi = 0;

    bool active() const { return kind != PatternKind::Annuli; }
    int circle_count(int end) const {
        if (kind == PatternKind::Cross) return 2; // the collar's frontier circles
        return spanning + 2 * parallel[end];
    }
    nlohmann::json detail() const;
};

// Every pattern consistent with the boundary demands of the adjacent vertex
// pieces (given in the local coordinates of each end). An empty list means no
// pattern exists.
std::vector<EdgePattern> edge_patterns(const EdgeManifold& e,
                                       const std::optional<SlopeCount>& left,
                                       const std::optional<SlopeCount>& right, bool allow_tube);

} // namespace gm
