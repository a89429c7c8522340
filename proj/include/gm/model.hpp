#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gm/rational.hpp"
#include "gm/slope.hpp"

namespace gm {

// Invariant (alpha, beta) of an exceptional fiber, stored normalized:
// alpha >= 2, 0 < beta < alpha, gcd(alpha, beta) = 1. Unnormalized data is a
// validation error, never silently normalized, so spec documents stay
// canonical.
struct SeifertInvariant {
    int alpha = 2;
    int beta = 1;

    friend bool operator==(const SeifertInvariant& x, const SeifertInvariant& y) {
        return x.alpha == y.alpha && x.beta == y.beta;
    }
    friend bool operator<(const SeifertInvariant& x, const SeifertInvariant& y) {
        return std::pair(x.alpha, x.beta) < std::pair(y.alpha, y.beta);
    }
};

enum class VertexKind { SeifertFibered, SurfaceCrossInterval };

// A vertex manifold: a Seifert fibered space over an orientable base, or a
// (compact orientable surface) x I piece of a generalized graph manifold.
// Boundary components are indexed 1..boundary_count; `exterior` lists the
// ones lying on the boundary of the whole manifold. boundary_count = 0 is
// the closed case (legal only for a sole vertex).
struct VertexManifold {
    VertexKind kind = VertexKind::SeifertFibered;
    int base_genus = 0;
    int boundary_count = 0;
    std::vector<SeifertInvariant> exceptional;
    std::set<int> exterior;

    int exceptional_count() const { return static_cast<int>(exceptional.size()); }
    bool closed() const { return boundary_count == 0; }
};

// Identification of boundary tori in (fiber, section) coordinates. For each
// edge end, the matrix maps edge-side coordinates to the coordinates of the
// vertex boundary it attaches to.
struct GluingMap {
    Mat2 matrix;
};

enum class EdgeKind { TorusCrossInterval, AnnulusCrossInterval };

// An edge manifold (torus) x I or (annulus) x I joining two vertex boundary
// components. Loops are allowed: both endpoints may name the same vertex
// with distinct boundary indices.
struct EdgeManifold {
    EdgeKind kind = EdgeKind::TorusCrossInterval;
    std::array<std::pair<std::string, int>, 2> endpoints; // (vertex id, boundary index)
    std::array<GluingMap, 2> gluings;
};

struct GraphManifoldSpec {
    std::string name;
    std::map<std::string, VertexManifold> vertices;
    std::map<std::string, EdgeManifold> edges;
};

struct Violation {
    std::string code;    // machine-readable, e.g. "gluing-not-unimodular"
    std::string path;    // offending field, e.g. "edges.e1.gluings[0]"
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// Checks every structural invariant of a spec; problems are reported, not
// thrown, and an empty report means the spec is valid.
ValidationReport validate(const GraphManifoldSpec& spec);

// chi of the underlying base surface: 2 - 2g - m.
int euler_char_base(const VertexManifold& v);

// chi^orb of the base orbifold: chi(O) - sum(1 - 1/alpha_i), exact.
// Rejects SurfaceCrossInterval vertices.
Rational orbifold_euler_char(const VertexManifold& v);

// Slope transport across a whole edge, end 0 coordinates to end 1
// coordinates: g1 * g0^{-1}.
Mat2 edge_transport(const EdgeManifold& e);

} // namespace gm
