#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "gm/edge_patterns.hpp"
#include "gm/model.hpp"
#include "gm/surfaces.hpp"

namespace gm {

// One parallel family of vertical annuli over an arc class in the base.
// Distinct boundaries: no separation payload. Same boundary: the arc
// separates, and (inner_genus, inner_cones, inner_boundaries) describe its
// inner side.
struct VerticalChoice {
    int from_boundary = 1;
    int to_boundary = 1;
    int copies = 1;
    int inner_genus = 0;
    std::set<int> inner_cones;
    std::set<int> inner_boundaries;
};

struct HorizontalChoice {
    int degree = 1;
    std::map<int, std::int64_t> coeffs;
};

struct ProductHorizontalChoice {
    int copies = 2;
};

struct PseudohorizontalChoice {
    int fiber_index = kRegularFiber;
    int degree = 1;
    std::map<int, std::int64_t> coeffs;
};

using VertexChoice =
    std::variant<VerticalChoice, HorizontalChoice, ProductHorizontalChoice, PseudohorizontalChoice>;

// Realizes a catalog choice inside a vertex manifold, including the
// complement topology used for the global separation check. Throws when the
// choice does not give a compression-body-compatible piece.
SurfacePiece build_vertex_piece(const VertexManifold& v, const VertexChoice& choice);

struct CandidateSplitting {
    int chi = 0;
    int genus = 0;
    int tubes = 0;
    std::map<std::string, SurfacePiece> vertex_pieces;
    std::map<std::string, EdgePattern> edge_choices;
    nlohmann::json bicoloring;
    std::string encoding;

    nlohmann::json to_json() const;
};

struct EnumerationBounds {
    int n_max = 12;
    int max_arcs = 8;
    bool allow_tubes = true;
};

// Glues vertex pieces and edge patterns into a closed splitting surface:
// checks slope demands across every edge, connectivity, and that the
// complement regions admit a 2-coloring into V and W.
CandidateSplitting assemble(const GraphManifoldSpec& spec,
                            const std::map<std::string, VertexChoice>& vertex_choices,
                            const std::map<std::string, EdgePattern>& edge_choices);

// Exhaustively enumerates the standard constructions within the given
// bounds, sorted by genus (ties: fewer tubes, then lexicographic encoding).
std::vector<CandidateSplitting> enumerate_standard(const GraphManifoldSpec& spec,
                                                   const EnumerationBounds& bounds);

// Alternating thick/thin levels of a generalized Heegaard splitting; the
// final thin level is absent except when a thin torus closes a loop.
struct GeneralizedSplitting {
    struct Level {
        int thick_chi = 0;
        std::optional<int> thin_chi;
    };
    std::vector<Level> levels;
};

struct AmalgamationResult {
    int chi = 0;
    int genus = 0;
};

// chi(S) = sum_i (chi(S_i) - chi(F_i)); genus = 1 - chi/2.
AmalgamationResult amalgamate(const GeneralizedSplitting& gs);

// Cuts a torus edge: its two attachment boundaries become exterior and the
// spec splits into one or two connected pieces.
std::vector<GraphManifoldSpec> cut_edge(const GraphManifoldSpec& spec, const std::string& edge_id);

struct WeakReductionResult {
    GeneralizedSplitting splitting;
    int chi = 0;
    int genus = 0;
    // piece name -> minimal candidate found for that piece
    std::vector<std::pair<std::string, CandidateSplitting>> pieces;
};

// Cuts along the chosen torus thin levels, enumerates each resulting piece,
// picks the minimum, and amalgamates.
WeakReductionResult weak_reduction_pipeline(const GraphManifoldSpec& spec,
                                            const std::set<std::string>& thin_edges,
                                            const EnumerationBounds& bounds);

// Deterministic candidate-report document for golden-file testing.
nlohmann::json candidate_report(const GraphManifoldSpec& spec,
                                const std::vector<CandidateSplitting>& candidates);

} // namespace gm
