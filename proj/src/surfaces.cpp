#include "gm/surfaces.hpp"

#include <algorithm>
#include <numeric>

#include "gm/error.hpp"

namespace gm {

using nlohmann::json;

const char* piece_tag_name(PieceTag tag) {
    switch (tag) {
        case PieceTag::Vertical: return "vertical";
        case PieceTag::Pseudovertical: return "pseudovertical";
        case PieceTag::Horizontal: return "horizontal";
        case PieceTag::Pseudohorizontal: return "pseudohorizontal";
    }
    return "?";
}

namespace {

void require_seifert(const VertexManifold& v) {
    if (v.kind != VertexKind::SeifertFibered)
        fail("not-seifert", "operation needs a Seifert fibered vertex");
}

void check_side_refs(const VertexManifold& v, int own_boundary, int inner_genus,
                     const std::set<int>& cones, const std::set<int>& boundaries) {
    if (inner_genus < 0 || inner_genus > v.base_genus)
        fail("bad-curve-descriptor", "inner genus out of range");
    for (int c : cones)
        if (c < 1 || c > v.exceptional_count())
            fail("bad-exceptional-index", "no exceptional point " + std::to_string(c));
    for (int b : boundaries) {
        if (b < 1 || b > v.boundary_count)
            fail("bad-boundary-index", "no boundary " + std::to_string(b));
        if (b == own_boundary)
            fail("bad-curve-descriptor", "a curve cannot enclose its own boundary");
    }
}

// Both complementary sides of a separating curve/arc must carry content,
// otherwise the curve bounds a disk and is inessential.
void check_essential(const VertexManifold& v, int rim_boundaries, int inner_genus,
                     const std::set<int>& cones, const std::set<int>& boundaries) {
    bool inner_trivial = inner_genus == 0 && cones.empty() && boundaries.empty();
    int outer_boundaries =
        v.boundary_count - static_cast<int>(boundaries.size()) - rim_boundaries;
    bool outer_trivial = (v.base_genus - inner_genus) == 0 &&
                         static_cast<int>(cones.size()) == v.exceptional_count() &&
                         outer_boundaries == 0;
    if (inner_trivial || outer_trivial)
        fail("inessential-curve", "curve descriptor bounds a disk");
}

json side_json(int genus, const std::set<int>& cones, const std::set<int>& boundaries) {
    json j;
    j["genus"] = genus;
    j["cones"] = json(cones);
    j["boundaries"] = json(boundaries);
    return j;
}

json multicurve_json(const BaseMulticurve& curves) {
    json arcs = json::array();
    for (const auto& a : curves.arcs) {
        json ja;
        ja["ends"] = json::array({a.from_boundary, a.to_boundary});
        if (a.same_boundary())
            ja["inner"] = side_json(a.inner_genus, a.inner_cones, a.inner_boundaries);
        arcs.push_back(std::move(ja));
    }
    json closed = json::array();
    for (const auto& c : curves.closed)
        closed.push_back(side_json(c.inner_genus, c.inner_cones, c.inner_boundaries));
    json j;
    j["arcs"] = std::move(arcs);
    j["closed"] = std::move(closed);
    return j;
}

void validate_multicurve(const VertexManifold& v, const BaseMulticurve& curves,
                         bool require_essential) {
    for (const auto& a : curves.arcs) {
        if (a.from_boundary < 1 || a.from_boundary > v.boundary_count || a.to_boundary < 1 ||
            a.to_boundary > v.boundary_count)
            fail("bad-boundary-index", "arc endpoint out of range");
        if (a.same_boundary()) {
            check_side_refs(v, a.from_boundary, a.inner_genus, a.inner_cones, a.inner_boundaries);
            if (require_essential)
                check_essential(v, 1, a.inner_genus, a.inner_cones, a.inner_boundaries);
        } else if (a.inner_genus != 0 || !a.inner_cones.empty() || !a.inner_boundaries.empty()) {
            fail("bad-curve-descriptor", "arcs between distinct boundaries carry no inner side");
        }
    }
    for (const auto& c : curves.closed) {
        check_side_refs(v, 0, c.inner_genus, c.inner_cones, c.inner_boundaries);
        if (require_essential) check_essential(v, 0, c.inner_genus, c.inner_cones, c.inner_boundaries);
    }
}

MultiSlope fiber_multislope(const BaseMulticurve& curves) {
    std::map<int, int> endpoint_count;
    for (const auto& a : curves.arcs) {
        ++endpoint_count[a.from_boundary];
        ++endpoint_count[a.to_boundary];
    }
    MultiSlope ms;
    for (const auto& [b, count] : endpoint_count) ms[b] = SlopeCount{Slope::fiber(), count};
    return ms;
}

std::int64_t exceptional_lcm(const VertexManifold& v) {
    std::int64_t l = 1;
    for (const auto& si : v.exceptional) l = std::lcm(l, static_cast<std::int64_t>(si.alpha));
    return l;
}

} // namespace

SurfacePiece vertical_piece(const VertexManifold& v, const BaseMulticurve& curves) {
    require_seifert(v);
    if (curves.empty()) fail("empty-surface", "a vertical surface needs at least one curve");
    validate_multicurve(v, curves, /*require_essential=*/true);

    SurfacePiece piece;
    piece.tag = PieceTag::Vertical;
    piece.chi = 0;
    piece.boundary = fiber_multislope(curves);
    piece.detail = json{{"construction", "vertical"}, {"curves", multicurve_json(curves)}};
    return piece;
}

std::vector<int> horizontal_admissible_degrees(const VertexManifold& v, int n_max) {
    require_seifert(v);
    if (v.closed())
        fail("closed-vertex", "horizontal degrees are defined for vertices with boundary");
    if (n_max < 1) fail("bad-bound", "n_max must be positive");
    std::int64_t l = exceptional_lcm(v);
    std::vector<int> degrees;
    for (std::int64_t n = l; n <= n_max; n += l) degrees.push_back(static_cast<int>(n));
    return degrees;
}

SurfacePiece horizontal_piece(const VertexManifold& v, int degree,
                              const std::map<int, std::int64_t>& framing_coeffs) {
    require_seifert(v);
    if (v.closed())
        fail("closed-vertex", "horizontal surfaces are defined for vertices with boundary");
    std::int64_t l = exceptional_lcm(v);
    if (degree < 1 || degree % l != 0)
        fail("degree-not-admissible",
             "degree " + std::to_string(degree) + " is not a multiple of lcm " + std::to_string(l));
    if (static_cast<int>(framing_coeffs.size()) != v.boundary_count)
        fail("bad-framing", "need one framing coefficient per boundary");
    for (const auto& [b, c] : framing_coeffs)
        if (b < 1 || b > v.boundary_count) fail("bad-boundary-index", "framing index out of range");

    // Relative Euler number constraint: sum(c_j) = -n * sum(beta_i/alpha_i).
    Rational target(0);
    for (const auto& si : v.exceptional) target -= Rational(si.beta, si.alpha);
    target *= Rational(degree);
    std::int64_t coeff_sum = 0;
    for (const auto& [b, c] : framing_coeffs) coeff_sum += c;
    if (Rational(coeff_sum) != target)
        fail("euler-number-obstruction", "framing coefficients sum to " +
                                             std::to_string(coeff_sum) + ", constraint requires " +
                                             target.str());

    Rational chi = Rational(degree) * orbifold_euler_char(v);
    if (!chi.is_integer()) fail("internal", "horizontal chi must be integral for admissible degrees");

    SurfacePiece piece;
    piece.tag = PieceTag::Horizontal;
    piece.chi = static_cast<int>(chi.numerator());

    // Parallel-copy decomposition: the largest d with d | gcd(n, c_j for all
    // j) whose per-copy degree n/d is still admissible.
    std::int64_t content = degree;
    for (const auto& [b, c] : framing_coeffs) content = std::gcd(content, c < 0 ? -c : c);
    int copies = 1;
    for (std::int64_t d = content; d >= 1; --d)
        if (content % d == 0 && (degree / d) % l == 0) { copies = static_cast<int>(d); break; }

    PieceTopology topo;
    topo.regions = copies;
    topo.components = copies;
    for (int r = 0; r < copies; ++r) topo.region_names.push_back("slab" + std::to_string(r));
    for (int t = 0; t < copies; ++t) topo.walls.emplace_back((t + copies - 1) % copies, t);

    json jcoeffs = json::object();
    for (const auto& [b, c] : framing_coeffs) {
        jcoeffs[std::to_string(b)] = c;
        std::int64_t total_count = std::gcd(c < 0 ? -c : c, static_cast<std::int64_t>(degree));
        piece.boundary[b] = SlopeCount{Slope(c, degree), static_cast<int>(total_count)};
        BoundaryCircles circles;
        circles.slope = Slope(c, degree);
        circles.cyclic = true;
        for (int i = 0; i < static_cast<int>(total_count); ++i) {
            circles.component.push_back(i % copies);
            circles.gap.push_back(i % copies);
        }
        topo.circles[b] = std::move(circles);
    }
    piece.topology = std::move(topo);
    piece.detail = json{{"construction", "horizontal"},
                        {"degree", degree},
                        {"coeffs", std::move(jcoeffs)},
                        {"copies", copies}};
    return piece;
}

SurfacePiece product_horizontal(const VertexManifold& v, int copies) {
    if (v.kind != VertexKind::SurfaceCrossInterval)
        fail("not-product", "product_horizontal needs a (surface) x I vertex");
    if (copies != 1 && copies != 2) fail("bad-copies", "copies must be 1 or 2");
    int chi_base = euler_char_base(v);
    if (chi_base > 0)
        fail("sphere-or-disk-pieces-forbidden", "horizontal pieces of positive chi compress");

    SurfacePiece piece;
    piece.tag = PieceTag::Horizontal;
    piece.chi = copies * chi_base;

    PieceTopology topo;
    topo.regions = copies + 1; // linear slabs of (surface) x I
    topo.components = copies;
    for (int r = 0; r <= copies; ++r) topo.region_names.push_back("slab" + std::to_string(r));
    for (int t = 0; t < copies; ++t) topo.walls.emplace_back(t, t + 1);
    for (int b = 1; b <= v.boundary_count; ++b) {
        piece.boundary[b] = SlopeCount{Slope::section(), copies};
        BoundaryCircles circles;
        circles.slope = Slope::section();
        circles.cyclic = false;
        for (int i = 0; i < copies; ++i) circles.component.push_back(i);
        for (int i = 0; i <= copies; ++i) circles.gap.push_back(i);
        topo.circles[b] = std::move(circles);
    }
    piece.topology = std::move(topo);
    piece.detail = json{{"construction", "product-horizontal"}, {"copies", copies}};
    return piece;
}

SurfacePiece pseudovertical_piece(const VertexManifold& v, const BaseMulticurve& base,
                                  const std::vector<SurgeryArc>& arcs) {
    require_seifert(v);
    if (base.empty()) fail("empty-surface", "a pseudovertical surface needs a base collection");
    validate_multicurve(v, base, /*require_essential=*/false);
    int components = base.component_count();
    for (const auto& arc : arcs)
        if (arc.from_component < 0 || arc.from_component >= components || arc.to_component < 0 ||
            arc.to_component >= components)
            fail("bad-arc-endpoint", "surgery arc endpoint on nonexistent component");

    SurfacePiece piece;
    piece.tag = PieceTag::Pseudovertical;
    piece.chi = -2 * static_cast<int>(arcs.size());
    piece.boundary = fiber_multislope(base);
    json jarcs = json::array();
    for (const auto& arc : arcs) jarcs.push_back(json::array({arc.from_component, arc.to_component}));
    piece.detail = json{{"construction", "pseudovertical"},
                        {"base", multicurve_json(base)},
                        {"surgery_arcs", std::move(jarcs)}};
    return piece;
}

VertexManifold drill_fiber(const VertexManifold& v, int fiber_index) {
    require_seifert(v);
    if (fiber_index < 0 || fiber_index > v.exceptional_count())
        fail("bad-exceptional-index", "no fiber with index " + std::to_string(fiber_index));
    VertexManifold drilled = v;
    drilled.boundary_count += 1;
    if (fiber_index != kRegularFiber)
        drilled.exceptional.erase(drilled.exceptional.begin() + (fiber_index - 1));
    return drilled;
}

SurfacePiece pseudohorizontal_piece(const VertexManifold& v, int fiber_index, int degree,
                                    const std::map<int, std::int64_t>& framing_coeffs) {
    require_seifert(v);
    if (fiber_index == kRegularFiber && v.closed())
        fail("closed-vertex-unsupported",
             "drilling a regular fiber from a closed vertex is handled by the product splitting");
    VertexManifold drilled = drill_fiber(v, fiber_index);
    int new_boundary = drilled.boundary_count;

    SurfacePiece horizontal = horizontal_piece(drilled, degree, framing_coeffs);
    auto it = horizontal.boundary.find(new_boundary);
    int collar_curves = it == horizontal.boundary.end() ? 0 : it->second.count;
    if (collar_curves != 2)
        fail("collar-mismatch", "drilled boundary carries " + std::to_string(collar_curves) +
                                    " curves, the collar of the fiber has exactly 2 ends");

    SurfacePiece piece;
    piece.tag = PieceTag::Pseudohorizontal;
    piece.chi = horizontal.chi; // the collar annulus is glued along circles: chi unchanged
    piece.boundary = horizontal.boundary;
    piece.boundary.erase(new_boundary);

    PieceTopology topo = *horizontal.topology;
    BoundaryCircles drilled_circles = topo.circles.at(new_boundary);
    topo.circles.erase(new_boundary);
    // The collar caps off the drilled torus: its two ends join the two
    // horizontal boundary circles, and the neighborhood of the fiber is split
    // by the collar into two sides, one glued to each gap.
    topo.component_merges.emplace_back(drilled_circles.component[0], drilled_circles.component[1]);
    topo.walls.emplace_back(drilled_circles.gap[0], drilled_circles.gap[1]);
    piece.topology = std::move(topo);

    json jcoeffs = json::object();
    for (const auto& [b, c] : framing_coeffs) jcoeffs[std::to_string(b)] = c;
    piece.detail = json{{"construction", "pseudohorizontal"},
                        {"fiber", fiber_index},
                        {"degree", degree},
                        {"coeffs", std::move(jcoeffs)},
                        {"copies", horizontal.detail.at("copies")}};
    return piece;
}

} // namespace gm
