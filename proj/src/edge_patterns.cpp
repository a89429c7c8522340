#include "gm/edge_patterns.hpp"

#include "gm/error.hpp"

namespace gm {

using nlohmann::json;

const char* pattern_kind_name(PatternKind kind) {
    switch (kind) {
        case PatternKind::Annuli: return "annuli";
        case PatternKind::AnnuliWithTube: return "annuli-tube";
        case PatternKind::Cross: return "cross";
    }
    return "?";
}

json EdgePattern::detail() const {
    json j;
    j["kind"] = pattern_kind_name(kind);
    j["spanning"] = spanning;
    j["parallel"] = json::array({parallel[0], parallel[1]});
    if (kind == PatternKind::AnnuliWithTube) j["tube_end"] = tube_end;
    if (cross_slopes) {
        j["cross"] = json::array({json::array({(*cross_slopes)[0].fiber_coeff(),
                                               (*cross_slopes)[0].section_coeff()}),
                                  json::array({(*cross_slopes)[1].fiber_coeff(),
                                               (*cross_slopes)[1].section_coeff()})});
    }
    j["chi"] = chi;
    return j;
}

std::vector<EdgePattern> edge_patterns(const EdgeManifold& e, const std::optional<SlopeCount>& left,
                                       const std::optional<SlopeCount>& right, bool allow_tube) {
    const int c0 = left ? left->count : 0;
    const int c1 = right ? right->count : 0;
    if (c0 < 0 || c1 < 0) fail("bad-demand", "negative curve count");

    const Mat2 transport = edge_transport(e);
    const bool slopes_match =
        left && right && transport_slope(transport, left->slope) == right->slope;

    std::vector<EdgePattern> patterns;

    // Annuli families: k spanning annuli (slope-matched across the edge) plus
    // boundary-parallel annuli pairing off the rest at each end.
    int k_max = std::min(c0, c1);
    for (int k = 0; k <= k_max; ++k) {
        if ((c0 - k) % 2 != 0 || (c1 - k) % 2 != 0) continue;
        if (k > 0 && !slopes_match) continue;
        EdgePattern base;
        base.kind = PatternKind::Annuli;
        base.spanning = k;
        base.parallel = {(c0 - k) / 2, (c1 - k) / 2};
        base.chi = 0;
        patterns.push_back(base);
        if (allow_tube) {
            for (int end = 0; end < 2; ++end) {
                if (base.circle_count(end) == 0) continue; // nothing near that end to surger
                EdgePattern tubed = base;
                tubed.kind = PatternKind::AnnuliWithTube;
                tubed.tube_end = end;
                tubed.chi = -2;
                patterns.push_back(tubed);
            }
        }
    }

    // The collar pattern: torus edges only, one dual pair of curves, two
    // boundary circles of each.
    if (e.kind == EdgeKind::TorusCrossInterval && left && right && c0 == 2 && c1 == 2 &&
        intersection_number(transport_slope(transport, left->slope), right->slope) == 1) {
        EdgePattern cross;
        cross.kind = PatternKind::Cross;
        cross.cross_slopes = {left->slope, right->slope};
        cross.chi = -2;
        patterns.push_back(cross);
    }

    return patterns;
}

} // namespace gm
