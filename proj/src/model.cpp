#include "gm/model.hpp"

#include <numeric>

#include "gm/error.hpp"

namespace gm {

namespace {

void check_seifert_invariant(const SeifertInvariant& si, const std::string& path,
                             ValidationReport& report) {
    if (si.alpha < 2)
        report.violations.push_back({"seifert-alpha-range", path, "alpha must be >= 2"});
    if (si.beta <= 0 || si.beta >= si.alpha)
        report.violations.push_back(
            {"seifert-beta-range", path, "beta must satisfy 0 < beta < alpha (normalized form)"});
    if (std::gcd(si.alpha, si.beta) != 1)
        report.violations.push_back({"seifert-not-coprime", path, "gcd(alpha, beta) must be 1"});
}

} // namespace

ValidationReport validate(const GraphManifoldSpec& spec) {
    ValidationReport report;

    if (spec.vertices.empty()) {
        report.violations.push_back({"empty-spec", "vertices", "at least one vertex is required"});
        return report;
    }

    for (const auto& [vid, v] : spec.vertices) {
        const std::string vpath = "vertices." + vid;
        if (v.base_genus < 0)
            report.violations.push_back({"negative-genus", vpath + ".base_genus", "genus must be >= 0"});
        if (v.boundary_count < 0)
            report.violations.push_back(
                {"negative-boundary-count", vpath + ".boundary_count", "boundary count must be >= 0"});
        if (v.kind == VertexKind::SurfaceCrossInterval && !v.exceptional.empty())
            report.violations.push_back({"product-with-exceptional", vpath + ".exceptional",
                                         "surface x I vertices carry no exceptional fibers"});
        for (std::size_t i = 0; i < v.exceptional.size(); ++i)
            check_seifert_invariant(v.exceptional[i],
                                    vpath + ".exceptional[" + std::to_string(i) + "]", report);
        for (int b : v.exterior)
            if (b < 1 || b > v.boundary_count)
                report.violations.push_back({"exterior-out-of-range",
                                             vpath + ".exterior",
                                             "exterior index " + std::to_string(b) + " out of range"});
    }

    // Edge endpoints: existing vertex, in-range boundary index, not exterior,
    // used at most once across the whole spec.
    std::map<std::pair<std::string, int>, int> use_count;
    for (const auto& [eid, e] : spec.edges) {
        const std::string epath = "edges." + eid;
        for (int end = 0; end < 2; ++end) {
            const auto& [vid, b] = e.endpoints[end];
            const std::string endpath = epath + ".endpoints[" + std::to_string(end) + "]";
            auto it = spec.vertices.find(vid);
            if (it == spec.vertices.end()) {
                report.violations.push_back(
                    {"edge-endpoint-missing-vertex", endpath, "no vertex named " + vid});
                continue;
            }
            const VertexManifold& v = it->second;
            if (b < 1 || b > v.boundary_count) {
                report.violations.push_back({"edge-endpoint-bad-boundary", endpath,
                                             "boundary index " + std::to_string(b) +
                                                 " out of range for " + vid});
                continue;
            }
            if (v.exterior.count(b))
                report.violations.push_back({"edge-endpoint-exterior", endpath,
                                             "boundary " + std::to_string(b) + " of " + vid +
                                                 " is marked exterior"});
            ++use_count[{vid, b}];
            if (e.kind == EdgeKind::TorusCrossInterval && v.kind != VertexKind::SeifertFibered)
                report.violations.push_back({"torus-edge-on-product", endpath,
                                             "torus x I edges attach only to Seifert fibered vertices"});
        }
        for (int end = 0; end < 2; ++end) {
            std::int64_t det = e.gluings[end].matrix.det();
            if (det != 1 && det != -1)
                report.violations.push_back({"gluing-not-unimodular",
                                             epath + ".gluings[" + std::to_string(end) + "]",
                                             "determinant is " + std::to_string(det)});
        }
        if (e.endpoints[0] == e.endpoints[1])
            report.violations.push_back(
                {"edge-endpoint-reused", epath, "both ends attach to the same boundary"});

        // An annulus edge attaches along a vertical annulus family: transport
        // must carry the core slope of one family to the core of the other.
        if (e.kind == EdgeKind::AnnulusCrossInterval) {
            bool ends_ok = true;
            std::array<Slope, 2> core = {Slope::fiber(), Slope::fiber()};
            for (int end = 0; end < 2; ++end) {
                auto it = spec.vertices.find(e.endpoints[end].first);
                if (it == spec.vertices.end()) { ends_ok = false; continue; }
                core[end] = it->second.kind == VertexKind::SeifertFibered ? Slope::fiber()
                                                                          : Slope::section();
            }
            bool unimodular = e.gluings[0].matrix.det() * e.gluings[0].matrix.det() == 1 &&
                              e.gluings[1].matrix.det() * e.gluings[1].matrix.det() == 1;
            if (ends_ok && unimodular &&
                transport_slope(edge_transport(e), core[0]) != core[1])
                report.violations.push_back({"annulus-attachment-not-vertical", epath,
                                             "gluing does not match the annulus cores"});
        }
    }
    for (const auto& [key, n] : use_count)
        if (n > 1)
            report.violations.push_back({"edge-endpoint-reused",
                                         "vertices." + key.first,
                                         "boundary " + std::to_string(key.second) + " of " +
                                             key.first + " is used by " + std::to_string(n) +
                                             " edge ends"});

    // Every non-exterior boundary must meet exactly one edge end.
    for (const auto& [vid, v] : spec.vertices)
        for (int b = 1; b <= v.boundary_count; ++b)
            if (!v.exterior.count(b) && !use_count.count({vid, b}))
                report.violations.push_back({"unmatched-boundary",
                                             "vertices." + vid,
                                             "non-exterior boundary " + std::to_string(b) +
                                                 " is not attached to any edge"});

    // Connectivity of the underlying multigraph.
    std::map<std::string, std::string> parent;
    for (const auto& [vid, v] : spec.vertices) parent[vid] = vid;
    auto find = [&](std::string x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [eid, e] : spec.edges) {
        if (!spec.vertices.count(e.endpoints[0].first) ||
            !spec.vertices.count(e.endpoints[1].first))
            continue;
        parent[find(e.endpoints[0].first)] = find(e.endpoints[1].first);
    }
    std::set<std::string> roots;
    for (const auto& [vid, v] : spec.vertices) roots.insert(find(vid));
    if (roots.size() > 1)
        report.violations.push_back(
            {"disconnected", "edges",
             "the model graph has " + std::to_string(roots.size()) + " components"});

    return report;
}

int euler_char_base(const VertexManifold& v) {
    return 2 - 2 * v.base_genus - v.boundary_count;
}

Rational orbifold_euler_char(const VertexManifold& v) {
    if (v.kind != VertexKind::SeifertFibered)
        fail("not-seifert", "orbifold Euler characteristic needs a Seifert fibered vertex");
    Rational chi(euler_char_base(v));
    for (const auto& si : v.exceptional)
        chi -= Rational(si.alpha - 1, si.alpha);
    return chi;
}

Mat2 edge_transport(const EdgeManifold& e) {
    return e.gluings[1].matrix * e.gluings[0].matrix.inverse();
}

} // namespace gm
