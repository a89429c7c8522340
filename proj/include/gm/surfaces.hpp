#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include <json.hpp>

#include "gm/model.hpp"
#include "gm/topology.hpp"

namespace gm {

struct SlopeCount {
    Slope slope;
    int count = 1;

    friend bool operator==(const SlopeCount& x, const SlopeCount& y) {
        return x.slope == y.slope && x.count == y.count;
    }
};

// Boundary data of a surface piece: per boundary index a slope with
// multiplicity, absent where the surface misses the boundary.
using MultiSlope = std::map<int, SlopeCount>;

enum class PieceTag { Vertical, Pseudovertical, Horizontal, Pseudohorizontal };

const char* piece_tag_name(PieceTag tag);

// A surface inside one vertex manifold, with exact Euler characteristic,
// boundary multislopes, and (for enumerator-built pieces) the complement
// topology used by assembly.
struct SurfacePiece {
    PieceTag tag = PieceTag::Vertical;
    int chi = 0;
    MultiSlope boundary;
    nlohmann::json detail;
    std::optional<PieceTopology> topology;
};

// An essential simple closed curve in the base orbifold, encoded by what it
// separates: the listed genus, cone points and boundary circles lie on its
// "inner" side.
struct BaseClosedCurve {
    int inner_genus = 0;
    std::set<int> inner_cones;      // 1-based exceptional indices
    std::set<int> inner_boundaries; // 1-based boundary indices
};

// A properly embedded arc in the base orbifold. Arcs between distinct
// boundaries carry no separation payload; an arc with both endpoints on one
// boundary separates, and the payload describes its inner side.
struct BaseArc {
    int from_boundary = 1;
    int to_boundary = 1;
    int inner_genus = 0;
    std::set<int> inner_cones;
    std::set<int> inner_boundaries;

    bool same_boundary() const { return from_boundary == to_boundary; }
};

struct BaseMulticurve {
    std::vector<BaseArc> arcs;
    std::vector<BaseClosedCurve> closed;

    bool empty() const { return arcs.empty() && closed.empty(); }
    int component_count() const { return static_cast<int>(arcs.size() + closed.size()); }
};

// Vertical surface consisting of fibers over the given multicurve: chi = 0,
// fiber slope at every arc endpoint.
SurfacePiece vertical_piece(const VertexManifold& v, const BaseMulticurve& curves);

// All degrees n <= n_max admissible for a horizontal surface: lcm of the
// exceptional multiplicities must divide n.
std::vector<int> horizontal_admissible_degrees(const VertexManifold& v, int n_max);

// Horizontal surface of degree n with the given boundary framing
// coefficients c_j, constrained by sum(c_j) = -n * sum(beta_i/alpha_i).
// chi = n * chi^orb(O_v); boundary j carries the class (c_j, n), realized as
// gcd(c_j, n) parallel copies of its primitive slope.
SurfacePiece horizontal_piece(const VertexManifold& v, int degree,
                              const std::map<int, std::int64_t>& framing_coeffs);

// Horizontal surface in a (surface) x I vertex: `copies` parallel copies of
// surface x {point}.
SurfacePiece product_horizontal(const VertexManifold& v, int copies);

// Surgery arc joining two components of a pseudovertical base collection
// (indices into arcs-then-closed order of the base multicurve).
struct SurgeryArc {
    int from_component = 0;
    int to_component = 0;
};

// Pseudovertical surface: vertical annuli and tori plus ambient 1-surgery
// along arcs with disjointly projecting images. chi = -2 per arc.
SurfacePiece pseudovertical_piece(const VertexManifold& v, const BaseMulticurve& base,
                                  const std::vector<SurgeryArc>& arcs);

inline constexpr int kRegularFiber = 0;

// Pseudohorizontal surface: horizontal away from a drilled fiber (regular, or
// the 1-based exceptional fiber index), capped by a collar of that fiber.
// The drilled vertex must admit a degree-n horizontal surface meeting the new
// boundary torus in exactly two circles.
SurfacePiece pseudohorizontal_piece(const VertexManifold& v, int fiber_index, int degree,
                                    const std::map<int, std::int64_t>& framing_coeffs);

// The vertex left after drilling a fiber: one fewer exceptional fiber (when
// an exceptional index is drilled), one more boundary.
VertexManifold drill_fiber(const VertexManifold& v, int fiber_index);

} // namespace gm
