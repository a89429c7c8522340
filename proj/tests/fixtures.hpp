#pragma once

#include "gm/model.hpp"

namespace fixtures {

inline gm::Mat2 identity() { return gm::Mat2{1, 0, 0, 1}; }
inline gm::Mat2 swap_fiber_section() { return gm::Mat2{0, 1, 1, 0}; }

inline gm::VertexManifold seifert(int genus, int boundaries,
                                  std::vector<gm::SeifertInvariant> exceptional,
                                  std::set<int> exterior = {}) {
    gm::VertexManifold v;
    v.kind = gm::VertexKind::SeifertFibered;
    v.base_genus = genus;
    v.boundary_count = boundaries;
    v.exceptional = std::move(exceptional);
    v.exterior = std::move(exterior);
    return v;
}

inline gm::VertexManifold product(int genus, int boundaries) {
    gm::VertexManifold v;
    v.kind = gm::VertexKind::SurfaceCrossInterval;
    v.base_genus = genus;
    v.boundary_count = boundaries;
    return v;
}

inline gm::EdgeManifold torus_edge(const std::string& v0, int b0, const std::string& v1, int b1,
                                   gm::Mat2 g0 = identity(), gm::Mat2 g1 = identity()) {
    gm::EdgeManifold e;
    e.kind = gm::EdgeKind::TorusCrossInterval;
    e.endpoints = {std::pair{v0, b0}, std::pair{v1, b1}};
    e.gluings = {gm::GluingMap{g0}, gm::GluingMap{g1}};
    return e;
}

inline gm::EdgeManifold annulus_edge(const std::string& v0, int b0, const std::string& v1, int b1,
                                     gm::Mat2 g0 = identity(), gm::Mat2 g1 = identity()) {
    gm::EdgeManifold e = torus_edge(v0, b0, v1, b1, g0, g1);
    e.kind = gm::EdgeKind::AnnulusCrossInterval;
    return e;
}

// Seifert fibered space over the disk with two exceptional fibers (2,1).
inline gm::GraphManifoldSpec ex53_single() {
    gm::GraphManifoldSpec spec;
    spec.name = "ex53-single";
    spec.vertices["v1"] = seifert(0, 1, {{2, 1}, {2, 1}}, {1});
    return spec;
}

// Two copies of the above glued along their boundary tori.
inline gm::GraphManifoldSpec ex53_doubled() {
    gm::GraphManifoldSpec spec;
    spec.name = "ex53-doubled";
    spec.vertices["v1"] = seifert(0, 1, {{2, 1}, {2, 1}});
    spec.vertices["v2"] = seifert(0, 1, {{2, 1}, {2, 1}});
    spec.edges["e1"] = torus_edge("v1", 1, "v2", 1, identity(), swap_fiber_section());
    return spec;
}

// Pants x S^1 with two of its boundary tori identified by a fiber/section
// swap; the third torus is the manifold boundary.
inline gm::GraphManifoldSpec ex54_m2() {
    gm::GraphManifoldSpec spec;
    spec.name = "ex54-m2";
    spec.vertices["v1"] = seifert(0, 3, {}, {1});
    spec.edges["e1"] = torus_edge("v1", 2, "v1", 3, identity(), swap_fiber_section());
    return spec;
}

// Closed Seifert fibered space over S^2 with invariants 1/2, 1/2, 1/2, 1/3.
inline gm::GraphManifoldSpec ex55_closed() {
    gm::GraphManifoldSpec spec;
    spec.name = "ex55-closed";
    spec.vertices["v1"] = seifert(0, 0, {{2, 1}, {2, 1}, {2, 1}, {3, 1}});
    return spec;
}

// Two (once-punctured torus) x S^1 pieces glued so the section curves meet
// once.
inline gm::GraphManifoldSpec ex56_pair() {
    gm::GraphManifoldSpec spec;
    spec.name = "ex56-pair";
    spec.vertices["v1"] = seifert(1, 1, {});
    spec.vertices["v2"] = seifert(1, 1, {});
    spec.edges["e1"] = torus_edge("v1", 1, "v2", 1, identity(), swap_fiber_section());
    return spec;
}

inline gm::GraphManifoldSpec solid_torus() {
    gm::GraphManifoldSpec spec;
    spec.name = "solid-torus";
    spec.vertices["v1"] = seifert(0, 1, {}, {1});
    return spec;
}

// (Closed genus-g surface) x S^1 as a closed Seifert vertex.
inline gm::GraphManifoldSpec surface_times_circle(int genus) {
    gm::GraphManifoldSpec spec;
    spec.name = "genus" + std::to_string(genus) + "-times-circle";
    spec.vertices["v1"] = seifert(genus, 0, {});
    return spec;
}

// Two Seifert pieces over the disk joined along vertical annulus families in
// their boundary tori.
inline gm::GraphManifoldSpec seifert_annulus_pair() {
    gm::GraphManifoldSpec spec;
    spec.name = "seifert-annulus-pair";
    spec.vertices["v1"] = seifert(0, 1, {{2, 1}, {2, 1}});
    spec.vertices["v2"] = seifert(0, 1, {{3, 1}, {3, 2}});
    spec.edges["e1"] = annulus_edge("v1", 1, "v2", 1);
    return spec;
}

// Two (once-punctured torus) x I product pieces joined by an annulus edge.
inline gm::GraphManifoldSpec product_annulus_pair() {
    gm::GraphManifoldSpec spec;
    spec.name = "product-annulus-pair";
    spec.vertices["v1"] = product(1, 1);
    spec.vertices["v2"] = product(1, 1);
    spec.edges["e1"] = annulus_edge("v1", 1, "v2", 1);
    return spec;
}

} // namespace fixtures
