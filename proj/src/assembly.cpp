#include "gm/assembly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "gm/error.hpp"
#include "gm/vertical_splittings.hpp"

namespace gm {

using nlohmann::json;

namespace {

int mod(int x, int n) { return ((x % n) + n) % n; }

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int x, int y) { parent[find(x)] = find(y); }
};

// ---------------------------------------------------------------------------
// Vertex piece builders
// ---------------------------------------------------------------------------

bool disk_block(int genus, int cones, int boundaries) {
    return genus == 0 && boundaries == 0 && cones <= 1;
}
bool annulus_block(int genus, int cones, int boundaries) {
    return genus == 0 && boundaries == 1 && cones == 0;
}

// A complement face is a valid compression-body block when its fibered
// neighborhood is a vertical solid torus (disk with at most one cone point)
// or (annulus) x S^1.
bool face_block_ok(int genus, int cones, int boundaries) {
    return disk_block(genus, cones, boundaries) || annulus_block(genus, cones, boundaries);
}

SurfacePiece vertical_family_piece(const VertexManifold& v, const VerticalChoice& choice) {
    if (v.kind != VertexKind::SeifertFibered)
        fail("not-seifert", "vertical pieces need a Seifert fibered vertex");
    const int k = choice.copies;
    if (k < 1) fail("bad-curve-descriptor", "need at least one parallel copy");
    const int m = v.boundary_count;
    const int n = v.exceptional_count();
    for (int b : {choice.from_boundary, choice.to_boundary}) {
        if (b < 1 || b > m) fail("bad-boundary-index", "arc endpoint out of range");
        if (v.exterior.count(b))
            fail("exterior-boundary-met", "vertical annuli may not end on exterior boundaries");
    }

    SurfacePiece piece;
    piece.tag = PieceTag::Vertical;
    piece.chi = 0;
    PieceTopology topo;

    if (choice.from_boundary != choice.to_boundary) {
        if (choice.inner_genus != 0 || !choice.inner_cones.empty() ||
            !choice.inner_boundaries.empty())
            fail("bad-curve-descriptor", "arcs between distinct boundaries carry no inner side");
        // Faces: outer face F (region 0) and k-1 strips between the copies.
        if (!face_block_ok(v.base_genus, n, m - 2))
            fail("unsupported-vertical-class", "outer face is not a solid-torus or annulus block");
        topo.regions = k;
        topo.components = k;
        topo.region_names.push_back("outer");
        for (int t = 0; t < k - 1; ++t) topo.region_names.push_back("strip" + std::to_string(t));
        auto strip = [&](int t) { return 1 + t; };
        for (int t = 0; t < k; ++t) {
            int left = t == 0 ? 0 : strip(t - 1);
            int right = t == k - 1 ? 0 : strip(t);
            topo.walls.emplace_back(left, right);
        }
        for (int b : {choice.from_boundary, choice.to_boundary}) {
            BoundaryCircles circles;
            circles.slope = Slope::fiber();
            circles.cyclic = true;
            for (int t = 0; t < k; ++t) {
                circles.component.push_back(t);
                circles.gap.push_back(t == k - 1 ? 0 : strip(t));
            }
            topo.circles[b] = std::move(circles);
            piece.boundary[b] = SlopeCount{Slope::fiber(), k};
        }
        for (int b = 1; b <= m; ++b)
            if (b != choice.from_boundary && b != choice.to_boundary)
                topo.free_boundary_region[b] = 0;
    } else {
        const int b = choice.from_boundary;
        for (int c : choice.inner_cones)
            if (c < 1 || c > n) fail("bad-exceptional-index", "inner cone out of range");
        for (int ib : choice.inner_boundaries) {
            if (ib < 1 || ib > m) fail("bad-boundary-index", "inner boundary out of range");
            if (ib == b) fail("bad-curve-descriptor", "a curve cannot enclose its own boundary");
        }
        if (choice.inner_genus < 0 || choice.inner_genus > v.base_genus)
            fail("bad-curve-descriptor", "inner genus out of range");
        const int ig = choice.inner_genus;
        const int ic = static_cast<int>(choice.inner_cones.size());
        const int ib = static_cast<int>(choice.inner_boundaries.size());
        const int og = v.base_genus - ig;
        const int oc = n - ic;
        const int ob = m - 1 - ib;
        if ((ig == 0 && ic == 0 && ib == 0) || (og == 0 && oc == 0 && ob == 0))
            fail("inessential-curve", "arc descriptor bounds a disk");
        if (!face_block_ok(ig, ic, ib))
            fail("unsupported-vertical-class", "inner face is not a solid-torus or annulus block");
        if (!face_block_ok(og, oc, ob))
            fail("unsupported-vertical-class", "outer face is not a solid-torus or annulus block");

        // Regions: outer F = 0, inner I = 1, strips 2..k.
        topo.regions = k + 1;
        topo.components = k;
        topo.region_names.push_back("outer");
        topo.region_names.push_back("inner");
        for (int t = 0; t < k - 1; ++t) topo.region_names.push_back("strip" + std::to_string(t));
        auto strip = [&](int t) { return 2 + t; };
        for (int t = 0; t < k; ++t) {
            int left = t == 0 ? 0 : strip(t - 1);
            int right = t == k - 1 ? 1 : strip(t);
            topo.walls.emplace_back(left, right);
        }
        // 2k circles, nested: L_0 .. L_{k-1}, R_{k-1} .. R_0.
        BoundaryCircles circles;
        circles.slope = Slope::fiber();
        circles.cyclic = true;
        for (int t = 0; t < k; ++t) {
            circles.component.push_back(t);
            circles.gap.push_back(t == k - 1 ? 1 : strip(t));
        }
        for (int t = k - 1; t >= 0; --t) {
            circles.component.push_back(t);
            circles.gap.push_back(t == 0 ? 0 : strip(t - 1));
        }
        topo.circles[b] = std::move(circles);
        piece.boundary[b] = SlopeCount{Slope::fiber(), 2 * k};
        for (int other = 1; other <= m; ++other)
            if (other != b)
                topo.free_boundary_region[other] = choice.inner_boundaries.count(other) ? 1 : 0;
    }

    json jclass;
    jclass["ends"] = json::array({choice.from_boundary, choice.to_boundary});
    jclass["copies"] = k;
    if (choice.from_boundary == choice.to_boundary) {
        jclass["inner"] = json{{"genus", choice.inner_genus},
                               {"cones", json(choice.inner_cones)},
                               {"boundaries", json(choice.inner_boundaries)}};
    }
    piece.detail = json{{"construction", "vertical"}, {"class", std::move(jclass)}};
    piece.topology = std::move(topo);
    return piece;
}

// ---------------------------------------------------------------------------
// Edge pattern topology
// ---------------------------------------------------------------------------

struct EndCircles {
    std::vector<int> component;
    std::vector<int> gap; // cyclic: size N; linear: size N + 1
};

struct EdgeTopology {
    int regions = 0;
    int components = 0;
    bool linear = false;
    std::array<EndCircles, 2> ends;
    std::array<int, 2> free_region = {0, 0};
    std::vector<std::pair<int, int>> walls;
    std::vector<std::string> region_names;
};

EdgeTopology build_edge_topology(const EdgePattern& p, bool torus_edge) {
    EdgeTopology topo;
    topo.linear = !torus_edge;
    const int k = p.spanning;

    if (p.kind == PatternKind::Cross) {
        topo.regions = 2;
        topo.components = 1;
        topo.region_names = {"in", "out"};
        topo.walls.emplace_back(0, 1);
        for (int end = 0; end < 2; ++end) {
            topo.ends[end].component = {0, 0};
            topo.ends[end].gap = {0, 1};
        }
        return topo;
    }

    // Main regions of T x I (cyclic) or A x I (linear) cut along k spanning
    // annuli, plus one pocket per boundary-parallel annulus.
    const int mains = torus_edge ? std::max(k, 1) : k + 1;
    topo.regions = mains + p.parallel[0] + p.parallel[1];
    topo.components = k + p.parallel[0] + p.parallel[1];
    for (int t = 0; t < mains; ++t) topo.region_names.push_back("main" + std::to_string(t));
    for (int end = 0; end < 2; ++end)
        for (int i = 0; i < p.parallel[end]; ++i)
            topo.region_names.push_back("pocket" + std::to_string(end) + "." + std::to_string(i));
    const int host = mains - 1;
    auto pocket_region = [&](int end, int i) { return mains + (end == 0 ? 0 : p.parallel[0]) + i; };
    auto pocket_comp = [&](int end, int i) { return k + (end == 0 ? 0 : p.parallel[0]) + i; };

    if (torus_edge) {
        for (int t = 0; t < k; ++t) topo.walls.emplace_back(mod(t - 1, k), t);
    } else {
        for (int t = 0; t < k; ++t) topo.walls.emplace_back(t, t + 1);
    }
    for (int end = 0; end < 2; ++end)
        for (int i = 0; i < p.parallel[end]; ++i) topo.walls.emplace_back(pocket_region(end, i), host);

    for (int end = 0; end < 2; ++end) {
        EndCircles& circles = topo.ends[end];
        if (!torus_edge) circles.gap.push_back(0); // region before the first spanning annulus
        for (int t = 0; t < k; ++t) {
            circles.component.push_back(t);
            circles.gap.push_back(torus_edge ? t : t + 1);
        }
        for (int i = 0; i < p.parallel[end]; ++i) {
            circles.component.push_back(pocket_comp(end, i));
            circles.gap.push_back(pocket_region(end, i));
            circles.component.push_back(pocket_comp(end, i));
            circles.gap.push_back(host);
        }
        if (circles.component.empty()) {
            circles.gap.clear();
            if (!torus_edge) circles.gap.push_back(host);
        }
        topo.free_region[end] = host;
    }
    return topo;
}

// Region and component merges induced by the tube of an AnnuliWithTube
// pattern placed in gap `g` of its end: ambient 1-surgery joins the two
// circles flanking the gap and opens a channel between their far sides.
struct TubeEffect {
    std::pair<int, int> region_merge = {0, 0};
    std::pair<int, int> component_merge = {0, 0};
};

std::vector<TubeEffect> tube_placements(const EdgeTopology& topo, int end) {
    const EndCircles& circles = topo.ends[end];
    const int N = static_cast<int>(circles.component.size());
    std::vector<TubeEffect> effects;
    if (topo.linear) {
        if (N == 1) {
            effects.push_back(TubeEffect{{0, 0}, {circles.component[0], circles.component[0]}});
        } else {
            for (int i = 0; i + 1 < N; ++i)
                effects.push_back(TubeEffect{{circles.gap[i], circles.gap[i + 2]},
                                             {circles.component[i], circles.component[i + 1]}});
        }
    } else {
        for (int g = 0; g < N; ++g)
            effects.push_back(TubeEffect{{circles.gap[mod(g - 1, N)], circles.gap[mod(g + 1, N)]},
                                         {circles.component[g], circles.component[mod(g + 1, N)]}});
    }
    return effects;
}

// ---------------------------------------------------------------------------
// Assembly
// ---------------------------------------------------------------------------

struct EndAlignment {
    int shift = 0; // cyclic-cyclic shift, or split position for cyclic-to-linear
    bool flip = false;
};

struct Linearized {
    std::vector<int> component;
    std::vector<int> gap; // size N + 1
};

Linearized linearize(const BoundaryCircles& vc, int split, bool flip) {
    const int N = static_cast<int>(vc.component.size());
    Linearized lin;
    if (vc.cyclic) {
        for (int i = 0; i < N; ++i) lin.component.push_back(vc.component[mod(split + 1 + i, N)]);
        lin.gap.push_back(vc.gap[split]);
        for (int i = 0; i < N; ++i) lin.gap.push_back(vc.gap[mod(split + 1 + i, N)]);
    } else {
        lin.component = vc.component;
        lin.gap = vc.gap;
    }
    if (flip) {
        std::reverse(lin.component.begin(), lin.component.end());
        std::reverse(lin.gap.begin(), lin.gap.end());
    }
    return lin;
}

struct CandidatePieces {
    std::vector<std::string> vertex_ids;
    std::vector<const SurfacePiece*> pieces;
    std::vector<const VertexManifold*> vertices;
    std::vector<std::string> edge_ids;
    std::vector<const EdgePattern*> patterns;
    std::vector<const EdgeManifold*> edges;
    std::vector<EdgeTopology> edge_topos;
    std::vector<int> piece_region_offset, piece_comp_offset;
    std::vector<int> edge_region_offset, edge_comp_offset;
    int total_regions = 0, total_components = 0;
};

// One attempt at gluing the candidate with fixed alignments and tube
// placements. Returns true when the glued surface is connected and its
// complement regions 2-color; fills the coloring.
bool try_configuration(const CandidatePieces& cp, const std::vector<std::array<EndAlignment, 2>>& aligns,
                       const std::vector<int>& tube_choice, bool& connected_seen,
                       std::vector<int>& color_out, std::vector<int>& region_class_out) {
    UnionFind regions(cp.total_regions);
    UnionFind comps(std::max(cp.total_components, 1));
    std::vector<std::pair<int, int>> differ;

    for (std::size_t pi = 0; pi < cp.pieces.size(); ++pi) {
        const PieceTopology& topo = *cp.pieces[pi]->topology;
        int ro = cp.piece_region_offset[pi], co = cp.piece_comp_offset[pi];
        for (auto [a, b] : topo.region_merges) regions.unite(ro + a, ro + b);
        for (auto [a, b] : topo.component_merges) comps.unite(co + a, co + b);
        for (auto [a, b] : topo.walls) differ.emplace_back(ro + a, ro + b);
    }

    for (std::size_t ei = 0; ei < cp.patterns.size(); ++ei) {
        const EdgeTopology& topo = cp.edge_topos[ei];
        int ro = cp.edge_region_offset[ei], co = cp.edge_comp_offset[ei];
        for (auto [a, b] : topo.walls) differ.emplace_back(ro + a, ro + b);
        if (cp.patterns[ei]->kind == PatternKind::AnnuliWithTube) {
            auto effects = tube_placements(topo, cp.patterns[ei]->tube_end);
            const TubeEffect& effect = effects[tube_choice[ei]];
            regions.unite(ro + effect.region_merge.first, ro + effect.region_merge.second);
            comps.unite(co + effect.component_merge.first, co + effect.component_merge.second);
        }

        for (int end = 0; end < 2; ++end) {
            const auto& [vid, b] = cp.edges[ei]->endpoints[end];
            auto vit = std::find(cp.vertex_ids.begin(), cp.vertex_ids.end(), vid);
            std::size_t pi = static_cast<std::size_t>(vit - cp.vertex_ids.begin());
            const PieceTopology& vtopo = *cp.pieces[pi]->topology;
            int vro = cp.piece_region_offset[pi], vco = cp.piece_comp_offset[pi];
            const EndCircles& ec = topo.ends[end];
            const int N = static_cast<int>(ec.component.size());
            auto cit = vtopo.circles.find(b);
            if (N == 0) {
                int vregion = cit != vtopo.circles.end() ? -1 : vtopo.free_boundary_region.at(b);
                if (vregion < 0) return false; // count mismatch, caught earlier
                regions.unite(vro + vregion, ro + topo.free_region[end]);
                continue;
            }
            const BoundaryCircles& vc = cit->second;
            const EndAlignment& al = aligns[ei][end];
            if (!topo.linear) {
                // torus edge: both sides cyclic
                for (int i = 0; i < N; ++i) {
                    int t = al.flip ? mod(al.shift - i, N) : mod(al.shift + i, N);
                    comps.unite(vco + vc.component[i], co + ec.component[t]);
                    int egap = al.flip ? ec.gap[mod(al.shift - i - 1, N)] : ec.gap[mod(al.shift + i, N)];
                    regions.unite(vro + vc.gap[i], ro + egap);
                }
                for (int i = 0; i < N; ++i)
                    differ.emplace_back(vro + vc.gap[i], vro + vc.gap[mod(i + 1, N)]);
            } else {
                Linearized lin = linearize(vc, al.shift, al.flip);
                for (int i = 0; i < N; ++i) comps.unite(vco + lin.component[i], co + ec.component[i]);
                for (int i = 0; i <= N; ++i) regions.unite(vro + lin.gap[i], ro + ec.gap[i]);
                for (int i = 0; i < N; ++i) differ.emplace_back(vro + lin.gap[i], vro + lin.gap[i + 1]);
            }
        }
    }

    // Connectivity of the glued surface.
    int comp_classes = 0;
    for (int c = 0; c < cp.total_components; ++c)
        if (comps.find(c) == c) ++comp_classes;
    if (cp.total_components > 0 && comp_classes != 1) return false;
    connected_seen = true;

    // 2-color the complement regions. Walls force opposite colors.
    std::vector<int> color(cp.total_regions, -1);
    std::vector<std::vector<int>> adjacency(cp.total_regions);
    for (auto [a, b] : differ) {
        int ra = regions.find(a), rb = regions.find(b);
        if (ra == rb) return false;
        adjacency[ra].push_back(rb);
        adjacency[rb].push_back(ra);
    }
    for (int start = 0; start < cp.total_regions; ++start) {
        int rs = regions.find(start);
        if (color[rs] != -1) continue;
        color[rs] = 0;
        std::vector<int> queue = {rs};
        while (!queue.empty()) {
            int r = queue.back();
            queue.pop_back();
            for (int s : adjacency[r]) {
                if (color[s] == -1) {
                    color[s] = 1 - color[r];
                    queue.push_back(s);
                } else if (color[s] == color[r]) {
                    return false;
                }
            }
        }
    }
    color_out.assign(cp.total_regions, 0);
    region_class_out.assign(cp.total_regions, 0);
    for (int r = 0; r < cp.total_regions; ++r) {
        region_class_out[r] = regions.find(r);
        color_out[r] = color[region_class_out[r]];
    }
    return true;
}

json encoding_json(const std::map<std::string, SurfacePiece>& vertex_pieces,
                   const std::map<std::string, EdgePattern>& edge_choices) {
    json enc;
    json jv = json::object();
    for (const auto& [vid, piece] : vertex_pieces) jv[vid] = piece.detail;
    json je = json::object();
    for (const auto& [eid, pattern] : edge_choices) je[eid] = pattern.detail();
    enc["vertices"] = std::move(jv);
    enc["edges"] = std::move(je);
    return enc;
}

json piece_json(const SurfacePiece& piece) {
    json j = piece.detail;
    j["chi"] = piece.chi;
    return j;
}

CandidateSplitting finalize_candidate(std::map<std::string, SurfacePiece> vertex_pieces,
                                      std::map<std::string, EdgePattern> edge_choices,
                                      json bicoloring, int chi) {
    if (mod(chi, 2) != 0) fail("odd-chi", "assembled surface has odd Euler characteristic");
    CandidateSplitting cand;
    cand.chi = chi;
    cand.genus = 1 - chi / 2;
    cand.tubes = 0;
    for (const auto& [eid, pattern] : edge_choices)
        if (pattern.kind == PatternKind::AnnuliWithTube) ++cand.tubes;
    cand.vertex_pieces = std::move(vertex_pieces);
    cand.edge_choices = std::move(edge_choices);
    cand.bicoloring = std::move(bicoloring);
    cand.encoding = encoding_json(cand.vertex_pieces, cand.edge_choices).dump();
    return cand;
}

} // namespace

SurfacePiece build_vertex_piece(const VertexManifold& v, const VertexChoice& choice) {
    return std::visit(
        [&](const auto& c) -> SurfacePiece {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, VerticalChoice>) {
                return vertical_family_piece(v, c);
            } else if constexpr (std::is_same_v<T, HorizontalChoice>) {
                return horizontal_piece(v, c.degree, c.coeffs);
            } else if constexpr (std::is_same_v<T, ProductHorizontalChoice>) {
                return product_horizontal(v, c.copies);
            } else {
                return pseudohorizontal_piece(v, c.fiber_index, c.degree, c.coeffs);
            }
        },
        choice);
}

CandidateSplitting assemble(const GraphManifoldSpec& spec,
                            const std::map<std::string, VertexChoice>& vertex_choices,
                            const std::map<std::string, EdgePattern>& edge_choices) {
    CandidatePieces cp;
    std::map<std::string, SurfacePiece> pieces;
    for (const auto& [vid, v] : spec.vertices) {
        auto it = vertex_choices.find(vid);
        if (it == vertex_choices.end()) fail("missing-choice", "no piece chosen for vertex " + vid);
        pieces.emplace(vid, build_vertex_piece(v, it->second));
    }
    for (const auto& [eid, e] : spec.edges)
        if (!edge_choices.count(eid)) fail("missing-choice", "no pattern chosen for edge " + eid);

    // Exterior boundaries lie in the negative boundary of one compression
    // body: the surface must miss them.
    for (const auto& [vid, v] : spec.vertices)
        for (int b : v.exterior)
            if (pieces.at(vid).boundary.count(b))
                fail("exterior-boundary-met", "piece at " + vid + " meets exterior boundary " +
                                                  std::to_string(b));

    // Demands must match pattern supplies on every edge end.
    for (const auto& [eid, e] : spec.edges) {
        const EdgePattern& pattern = edge_choices.at(eid);
        std::array<std::optional<SlopeCount>, 2> demand;
        for (int end = 0; end < 2; ++end) {
            const auto& [vid, b] = e.endpoints[end];
            const auto& boundary = pieces.at(vid).boundary;
            auto it = boundary.find(b);
            if (it != boundary.end()) demand[end] = it->second;
            int want = demand[end] ? demand[end]->count : 0;
            if (pattern.circle_count(end) != want)
                fail("slope-mismatch", "edge " + eid + " end " + std::to_string(end) + " supplies " +
                                           std::to_string(pattern.circle_count(end)) +
                                           " circles, demand is " + std::to_string(want));
        }
        if (pattern.spanning > 0) {
            if (!demand[0] || !demand[1] ||
                transport_slope(edge_transport(e), demand[0]->slope) != demand[1]->slope)
                fail("slope-mismatch", "edge " + eid + " spanning annuli need matching slopes");
        }
        if (pattern.kind == PatternKind::Cross) {
            bool ok = demand[0] && demand[1] && demand[0]->count == 2 && demand[1]->count == 2 &&
                      intersection_number(transport_slope(edge_transport(e), demand[0]->slope),
                                          demand[1]->slope) == 1;
            if (ok && pattern.cross_slopes)
                ok = (*pattern.cross_slopes)[0] == demand[0]->slope &&
                     (*pattern.cross_slopes)[1] == demand[1]->slope;
            if (!ok)
                fail("slope-mismatch", "edge " + eid + " collar pattern needs dual slopes, two curves each");
        }
    }

    // Layout.
    for (const auto& [vid, piece] : pieces) {
        if (!piece.topology)
            fail("missing-topology", "piece at " + vid + " carries no complement topology");
        cp.vertex_ids.push_back(vid);
        cp.pieces.push_back(&piece);
        cp.vertices.push_back(&spec.vertices.at(vid));
        cp.piece_region_offset.push_back(cp.total_regions);
        cp.piece_comp_offset.push_back(cp.total_components);
        cp.total_regions += piece.topology->regions;
        cp.total_components += piece.topology->components;
    }
    for (const auto& [eid, e] : spec.edges) {
        const EdgePattern& pattern = edge_choices.at(eid);
        cp.edge_ids.push_back(eid);
        cp.patterns.push_back(&pattern);
        cp.edges.push_back(&e);
        cp.edge_topos.push_back(
            build_edge_topology(pattern, e.kind == EdgeKind::TorusCrossInterval));
        cp.edge_region_offset.push_back(cp.total_regions);
        cp.edge_comp_offset.push_back(cp.total_components);
        cp.total_regions += cp.edge_topos.back().regions;
        cp.total_components += cp.edge_topos.back().components;
    }

    // Alignment search: circle alignments per edge end, tube placements per
    // tubed pattern. Accept the first configuration (in deterministic order)
    // that yields a connected, separating surface.
    std::vector<std::array<int, 2>> align_counts(cp.patterns.size());
    std::vector<int> tube_counts(cp.patterns.size(), 1);
    for (std::size_t ei = 0; ei < cp.patterns.size(); ++ei) {
        for (int end = 0; end < 2; ++end) {
            int N = static_cast<int>(cp.edge_topos[ei].ends[end].component.size());
            align_counts[ei][end] = N == 0 ? 1 : 2 * N;
        }
        if (cp.patterns[ei]->kind == PatternKind::AnnuliWithTube)
            tube_counts[ei] = static_cast<int>(
                tube_placements(cp.edge_topos[ei], cp.patterns[ei]->tube_end).size());
    }

    std::vector<std::array<EndAlignment, 2>> aligns(cp.patterns.size());
    std::vector<int> tube_choice(cp.patterns.size(), 0);
    bool connected_seen = false;
    std::vector<int> color, region_class;

    // Odometer over all configuration digits.
    std::vector<int> digits;
    std::vector<int> radices;
    long long config_space = 1;
    for (std::size_t ei = 0; ei < cp.patterns.size(); ++ei) {
        radices.push_back(align_counts[ei][0]);
        radices.push_back(align_counts[ei][1]);
        radices.push_back(tube_counts[ei]);
        config_space *= static_cast<long long>(align_counts[ei][0]) * align_counts[ei][1] *
                        tube_counts[ei];
    }
    if (config_space > 1 << 16)
        fail("alignment-search-overflow",
             "candidate has " + std::to_string(config_space) + " gluing configurations");
    digits.assign(radices.size(), 0);
    bool found = false;
    while (true) {
        for (std::size_t ei = 0; ei < cp.patterns.size(); ++ei) {
            for (int end = 0; end < 2; ++end) {
                int digit = digits[3 * ei + end];
                aligns[ei][end] = EndAlignment{digit / 2, (digit % 2) != 0};
            }
            tube_choice[ei] = digits[3 * ei + 2];
        }
        if (try_configuration(cp, aligns, tube_choice, connected_seen, color, region_class)) {
            found = true;
            break;
        }
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == radices[pos]) digits[pos++] = 0;
        if (pos == digits.size()) break;
    }
    if (!found) {
        if (!connected_seen) fail("disconnected-surface", "assembled surface is not connected");
        fail("not-separating", "complement regions admit no 2-coloring");
    }

    // Canonical coloring: the lexicographically first region name gets V.
    std::vector<std::string> names(cp.total_regions);
    for (std::size_t pi = 0; pi < cp.pieces.size(); ++pi)
        for (int r = 0; r < cp.pieces[pi]->topology->regions; ++r)
            names[cp.piece_region_offset[pi] + r] =
                cp.vertex_ids[pi] + ":" + cp.pieces[pi]->topology->region_names[r];
    for (std::size_t ei = 0; ei < cp.patterns.size(); ++ei)
        for (int r = 0; r < cp.edge_topos[ei].regions; ++r)
            names[cp.edge_region_offset[ei] + r] =
                cp.edge_ids[ei] + ":" + cp.edge_topos[ei].region_names[r];
    int first = static_cast<int>(std::min_element(names.begin(), names.end()) - names.begin());
    int v_color = color[first];
    json sides;
    sides["V"] = json::array();
    sides["W"] = json::array();
    std::vector<std::string> sorted_names = names;
    std::sort(sorted_names.begin(), sorted_names.end());
    for (const auto& name : sorted_names) {
        int r = static_cast<int>(std::find(names.begin(), names.end(), name) - names.begin());
        sides[color[r] == v_color ? "V" : "W"].push_back(name);
    }

    int chi = 0;
    for (const auto& [vid, piece] : pieces) chi += piece.chi;
    for (const auto& [eid, pattern] : edge_choices) chi += pattern.chi;
    return finalize_candidate(std::move(pieces), std::map<std::string, EdgePattern>(edge_choices),
                              std::move(sides), chi);
}

json CandidateSplitting::to_json() const {
    json j;
    j["chi"] = chi;
    j["genus"] = genus;
    j["tubes"] = tubes;
    json jv = json::object();
    for (const auto& [vid, piece] : vertex_pieces) jv[vid] = piece_json(piece);
    j["vertices"] = std::move(jv);
    json je = json::object();
    for (const auto& [eid, pattern] : edge_choices) je[eid] = pattern.detail();
    j["edges"] = std::move(je);
    j["bicoloring"] = bicoloring;
    return j;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

namespace {

// Candidates for a single vertex manifold with no edges and boundary on the
// exterior: vertical Heegaard splittings over all partitions.
void enumerate_single_bounded(const std::string& vid, const VertexManifold& v,
                              const EnumerationBounds& bounds,
                              std::vector<CandidateSplitting>& out) {
    if (v.kind != VertexKind::SeifertFibered) return;
    for (int j = 1; j <= v.boundary_count; ++j) {
        for (int i = 0; i <= v.exceptional_count(); ++i) {
            std::set<int> fibers, boundaries;
            for (int f = 1; f <= i; ++f) fibers.insert(f);
            for (int b = 1; b <= j; ++b) boundaries.insert(b);
            SplittingResult result;
            try {
                result = vertical_splitting(v, fibers, boundaries);
            } catch (const Error&) {
                continue;
            }
            if (result.spec.spine_arcs > bounds.max_arcs) continue;
            SurfacePiece piece;
            piece.tag = PieceTag::Pseudovertical;
            piece.chi = result.chi;
            piece.detail = json{{"construction", "vertical-splitting"},
                                {"fibers_in_V", i},
                                {"boundaries_in_V", j},
                                {"arcs", result.spec.spine_arcs}};
            CandidateSplitting cand;
            cand.chi = result.chi;
            cand.genus = result.genus;
            cand.tubes = 0;
            cand.vertex_pieces.emplace(vid, std::move(piece));
            cand.bicoloring = json{{"V", json::array({vid + ":V-side"})},
                                   {"W", json::array({vid + ":W-side"})}};
            cand.encoding = encoding_json(cand.vertex_pieces, {}).dump();
            out.push_back(std::move(cand));
        }
    }
}

void enumerate_single_closed(const GraphManifoldSpec& spec, const std::string& vid,
                             const VertexManifold& v, const EnumerationBounds& bounds,
                             std::vector<CandidateSplitting>& out) {
    if (v.kind != VertexKind::SeifertFibered) return;
    if (v.exceptional.empty() && v.base_genus >= 1 &&
        2 * v.base_genus <= bounds.max_arcs) {
        SplittingResult result = product_times_circle_splitting(v.base_genus);
        SurfacePiece piece;
        piece.tag = PieceTag::Pseudovertical;
        piece.chi = result.chi;
        piece.detail =
            json{{"construction", "product-times-circle"}, {"arcs", result.spec.spine_arcs}};
        CandidateSplitting cand;
        cand.chi = result.chi;
        cand.genus = result.genus;
        cand.tubes = 0;
        cand.vertex_pieces.emplace(vid, std::move(piece));
        cand.bicoloring = json{{"V", json::array({vid + ":V-side"})},
                               {"W", json::array({vid + ":W-side"})}};
        cand.encoding = encoding_json(cand.vertex_pieces, {}).dump();
        out.push_back(std::move(cand));
    }
    // Pseudohorizontal splittings: drill one exceptional fiber; the framing
    // coefficient on the drilled boundary is forced by the Euler number
    // constraint.
    for (int f = 1; f <= v.exceptional_count(); ++f) {
        VertexManifold drilled = drill_fiber(v, f);
        std::vector<int> degrees;
        try {
            degrees = horizontal_admissible_degrees(drilled, bounds.n_max);
        } catch (const Error&) {
            continue;
        }
        for (int n : degrees) {
            Rational target(0);
            for (const auto& si : drilled.exceptional) target -= Rational(si.beta, si.alpha);
            target *= Rational(n);
            if (!target.is_integer()) continue;
            std::map<std::string, VertexChoice> choice;
            choice.emplace(vid, PseudohorizontalChoice{f, n, {{1, target.numerator()}}});
            try {
                out.push_back(assemble(spec, choice, {}));
            } catch (const Error&) {
            }
        }
    }
}

// Coefficient vectors with the given sum, free coordinates ranging over a
// box |c| <= box, in deterministic order.
void coefficient_solutions(const std::vector<int>& boundaries, std::int64_t sum, std::int64_t box,
                           std::vector<std::map<int, std::int64_t>>& out) {
    std::map<int, std::int64_t> current;
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t idx, std::int64_t rest) {
        if (idx + 1 == boundaries.size()) {
            if (rest < -box || rest > box) return;
            current[boundaries[idx]] = rest;
            out.push_back(current);
            return;
        }
        for (std::int64_t c = -box; c <= box; ++c) {
            current[boundaries[idx]] = c;
            rec(idx + 1, rest - c);
        }
    };
    if (boundaries.empty()) return;
    rec(0, sum);
}

// All coefficient vectors over the box, no sum constraint.
void coefficient_box(const std::vector<int>& boundaries, std::int64_t box,
                     std::vector<std::map<int, std::int64_t>>& out) {
    std::map<int, std::int64_t> current;
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == boundaries.size()) {
            out.push_back(current);
            return;
        }
        for (std::int64_t c = -box; c <= box; ++c) {
            current[boundaries[idx]] = c;
            rec(idx + 1);
        }
    };
    rec(0);
}

struct CatalogEntry {
    VertexChoice choice;
    SurfacePiece piece;
};

std::vector<CatalogEntry> vertex_catalog(const VertexManifold& v, const EnumerationBounds& bounds) {
    std::vector<CatalogEntry> catalog;
    auto admit = [&](const VertexChoice& choice) {
        try {
            SurfacePiece piece = build_vertex_piece(v, choice);
            catalog.push_back(CatalogEntry{choice, std::move(piece)});
        } catch (const Error&) {
        }
    };

    if (v.kind == VertexKind::SurfaceCrossInterval) {
        admit(ProductHorizontalChoice{1});
        admit(ProductHorizontalChoice{2});
        return catalog;
    }

    std::vector<int> non_exterior;
    for (int b = 1; b <= v.boundary_count; ++b)
        if (!v.exterior.count(b)) non_exterior.push_back(b);

    // Parallel-copy budget: up to four circles per boundary torus, enough for
    // every pattern kind (the collar needs two, parallel pairs need four).
    constexpr int kTwoBoundaryCopies = 4;
    constexpr int kSameBoundaryCopies = 2;

    // Vertical annulus families between distinct boundaries.
    for (std::size_t x = 0; x < non_exterior.size(); ++x)
        for (std::size_t y = x + 1; y < non_exterior.size(); ++y)
            for (int k = 1; k <= kTwoBoundaryCopies; ++k)
                admit(VerticalChoice{non_exterior[x], non_exterior[y], k, 0, {}, {}});

    // Separating same-boundary families, enumerated over inner sides.
    for (int b : non_exterior) {
        std::vector<int> others;
        for (int other = 1; other <= v.boundary_count; ++other)
            if (other != b) others.push_back(other);
        int subsets = 1 << others.size();
        for (int h = 0; h <= v.base_genus; ++h) {
            for (int c = 0; c <= v.exceptional_count(); ++c) {
                std::set<int> cones;
                for (int f = 1; f <= c; ++f) cones.insert(f);
                for (int mask = 0; mask < subsets; ++mask) {
                    std::set<int> inner_bs;
                    for (std::size_t t = 0; t < others.size(); ++t)
                        if (mask & (1 << t)) inner_bs.insert(others[t]);
                    for (int k = 1; k <= kSameBoundaryCopies; ++k)
                        admit(VerticalChoice{b, b, k, h, cones, inner_bs});
                }
            }
        }
    }

    if (!v.exterior.empty() || v.boundary_count == 0) return catalog;

    // Horizontal pieces (only for vertices the surface may meet everywhere).
    std::vector<int> all_boundaries;
    for (int b = 1; b <= v.boundary_count; ++b) all_boundaries.push_back(b);
    std::vector<int> degrees;
    try {
        degrees = horizontal_admissible_degrees(v, bounds.n_max);
    } catch (const Error&) {
        degrees.clear();
    }
    for (int n : degrees) {
        Rational target(0);
        for (const auto& si : v.exceptional) target -= Rational(si.beta, si.alpha);
        target *= Rational(n);
        if (!target.is_integer()) continue;
        std::vector<std::map<int, std::int64_t>> solutions;
        coefficient_solutions(all_boundaries, target.numerator(), 2 * n, solutions);
        for (auto& coeffs : solutions) admit(HorizontalChoice{n, coeffs});
    }

    // Pseudohorizontal pieces: drill a regular or exceptional fiber; the
    // drilled-boundary coefficient is forced by the constraint.
    for (int f = 0; f <= v.exceptional_count(); ++f) {
        VertexManifold drilled;
        try {
            drilled = drill_fiber(v, f);
        } catch (const Error&) {
            continue;
        }
        std::vector<int> drilled_degrees;
        try {
            drilled_degrees = horizontal_admissible_degrees(drilled, bounds.n_max);
        } catch (const Error&) {
            continue;
        }
        for (int n : drilled_degrees) {
            Rational target(0);
            for (const auto& si : drilled.exceptional) target -= Rational(si.beta, si.alpha);
            target *= Rational(n);
            if (!target.is_integer()) continue;
            // free coordinates on the original boundaries; the drilled
            // coordinate absorbs the remainder of the constraint
            std::vector<std::map<int, std::int64_t>> solutions;
            coefficient_box(all_boundaries, 2 * n, solutions);
            for (auto coeffs : solutions) {
                std::int64_t rest = target.numerator();
                for (const auto& [b, c] : coeffs) rest -= c;
                coeffs[drilled.boundary_count] = rest;
                admit(PseudohorizontalChoice{f, n, coeffs});
            }
        }
    }
    return catalog;
}

bool piece_active(const SurfacePiece& piece) { return piece.tag == PieceTag::Pseudohorizontal; }

// Edges whose removal disconnects the multigraph. The splitting surface must
// cross every bridge (a pattern without spanning annuli or a collar leaves
// the two sides disconnected), so bridge pattern lists can be filtered before
// assembly.
std::set<std::string> bridge_edges(const GraphManifoldSpec& spec) {
    std::set<std::string> bridges;
    for (const auto& [eid, e] : spec.edges) {
        std::map<std::string, std::string> parent;
        for (const auto& [vid, v] : spec.vertices) parent[vid] = vid;
        std::function<std::string(std::string)> find = [&](std::string x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& [other_id, other] : spec.edges) {
            if (other_id == eid) continue;
            parent[find(other.endpoints[0].first)] = find(other.endpoints[1].first);
        }
        if (find(e.endpoints[0].first) != find(e.endpoints[1].first)) bridges.insert(eid);
    }
    return bridges;
}

void enumerate_assembled(const GraphManifoldSpec& spec, const EnumerationBounds& bounds,
                         std::vector<CandidateSplitting>& out) {
    std::vector<std::string> vertex_ids;
    std::vector<std::vector<CatalogEntry>> catalogs;
    for (const auto& [vid, v] : spec.vertices) {
        vertex_ids.push_back(vid);
        catalogs.push_back(vertex_catalog(v, bounds));
        if (catalogs.back().empty()) return;
    }

    std::vector<std::string> edge_ids;
    for (const auto& [eid, e] : spec.edges) edge_ids.push_back(eid);
    const std::set<std::string> bridges = bridge_edges(spec);

    // Pattern lists depend only on the demand pair at an edge; memoize them.
    using DemandKey = std::array<std::int64_t, 6>;
    auto demand_key = [](const std::array<std::optional<SlopeCount>, 2>& demand) {
        DemandKey key = {0, 0, -1, 0, 0, -1};
        for (int end = 0; end < 2; ++end)
            if (demand[end]) {
                key[3 * end] = demand[end]->slope.fiber_coeff();
                key[3 * end + 1] = demand[end]->slope.section_coeff();
                key[3 * end + 2] = demand[end]->count;
            }
        return key;
    };
    std::vector<std::map<DemandKey, std::vector<EdgePattern>>> memo(edge_ids.size());

    std::vector<std::size_t> pick(vertex_ids.size(), 0);
    while (true) {
        int active = 0;
        for (std::size_t i = 0; i < vertex_ids.size(); ++i)
            if (piece_active(catalogs[i][pick[i]].piece)) ++active;

        if (active <= 1) {
            std::vector<const std::vector<EdgePattern>*> pattern_lists;
            bool edges_ok = true;
            for (std::size_t li = 0; li < edge_ids.size(); ++li) {
                const std::string& eid = edge_ids[li];
                const EdgeManifold& e = spec.edges.at(eid);
                std::array<std::optional<SlopeCount>, 2> demand;
                for (int end = 0; end < 2; ++end) {
                    const auto& [vid, b] = e.endpoints[end];
                    std::size_t vi = static_cast<std::size_t>(
                        std::find(vertex_ids.begin(), vertex_ids.end(), vid) - vertex_ids.begin());
                    const auto& boundary = catalogs[vi][pick[vi]].piece.boundary;
                    auto dit = boundary.find(b);
                    if (dit != boundary.end()) demand[end] = dit->second;
                }
                auto [mit, inserted] = memo[li].try_emplace(demand_key(demand));
                if (inserted) {
                    auto list = edge_patterns(e, demand[0], demand[1], bounds.allow_tubes);
                    if (bridges.count(eid)) {
                        list.erase(std::remove_if(list.begin(), list.end(),
                                                  [](const EdgePattern& p) {
                                                      return p.spanning == 0 &&
                                                             p.kind != PatternKind::Cross;
                                                  }),
                                   list.end());
                    }
                    mit->second = std::move(list);
                }
                if (mit->second.empty()) {
                    edges_ok = false;
                    break;
                }
                pattern_lists.push_back(&mit->second);
            }
            // Surface components join only across crossing patterns (spanning
            // annuli or a collar), so those edges must already connect the
            // multigraph; skip combinations where that is impossible.
            auto crossing_connected = [&](auto crosses) {
                std::vector<int> parent(vertex_ids.size());
                std::iota(parent.begin(), parent.end(), 0);
                std::function<int(int)> find = [&](int x) {
                    while (parent[x] != x) x = parent[x] = parent[parent[x]];
                    return x;
                };
                for (std::size_t i = 0; i < edge_ids.size(); ++i) {
                    if (!crosses(i)) continue;
                    const EdgeManifold& e = spec.edges.at(edge_ids[i]);
                    std::array<int, 2> ends;
                    for (int end = 0; end < 2; ++end)
                        ends[end] = static_cast<int>(std::find(vertex_ids.begin(), vertex_ids.end(),
                                                               e.endpoints[end].first) -
                                                     vertex_ids.begin());
                    parent[find(ends[0])] = find(ends[1]);
                }
                for (std::size_t v = 1; v < vertex_ids.size(); ++v)
                    if (find(0) != find(static_cast<int>(v))) return false;
                return true;
            };
            if (edges_ok) {
                edges_ok = crossing_connected([&](std::size_t i) {
                    return std::any_of(pattern_lists[i]->begin(), pattern_lists[i]->end(),
                                       [](const EdgePattern& p) {
                                           return p.spanning > 0 || p.kind == PatternKind::Cross;
                                       });
                });
            }
            if (edges_ok) {
                std::map<std::string, VertexChoice> vertex_choices;
                for (std::size_t i = 0; i < vertex_ids.size(); ++i)
                    vertex_choices.emplace(vertex_ids[i], catalogs[i][pick[i]].choice);
                std::vector<std::size_t> epick(edge_ids.size(), 0);
                while (true) {
                    int total_active = active;
                    for (std::size_t i = 0; i < edge_ids.size(); ++i)
                        if ((*pattern_lists[i])[epick[i]].active()) ++total_active;
                    bool viable =
                        total_active == 1 && crossing_connected([&](std::size_t i) {
                            const EdgePattern& p = (*pattern_lists[i])[epick[i]];
                            return p.spanning > 0 || p.kind == PatternKind::Cross;
                        });
                    if (viable) {
                        std::map<std::string, EdgePattern> edge_choices;
                        for (std::size_t i = 0; i < edge_ids.size(); ++i)
                            edge_choices.emplace(edge_ids[i], (*pattern_lists[i])[epick[i]]);
                        try {
                            out.push_back(assemble(spec, vertex_choices, edge_choices));
                        } catch (const Error&) {
                        }
                    }
                    std::size_t pos = 0;
                    while (pos < edge_ids.size() && ++epick[pos] == pattern_lists[pos]->size())
                        epick[pos++] = 0;
                    if (pos == edge_ids.size()) break;
                }
            }
        }
        std::size_t pos = 0;
        while (pos < vertex_ids.size() && ++pick[pos] == catalogs[pos].size()) pick[pos++] = 0;
        if (pos == vertex_ids.size()) break;
    }
}

} // namespace

std::vector<CandidateSplitting> enumerate_standard(const GraphManifoldSpec& spec,
                                                   const EnumerationBounds& bounds) {
    ValidationReport report = validate(spec);
    if (!report.ok())
        fail("invalid-spec", report.violations.front().code + " at " + report.violations.front().path);

    std::vector<CandidateSplitting> out;
    if (spec.edges.empty() && spec.vertices.size() == 1) {
        const auto& [vid, v] = *spec.vertices.begin();
        if (v.closed())
            enumerate_single_closed(spec, vid, v, bounds, out);
        else
            enumerate_single_bounded(vid, v, bounds, out);
    } else {
        enumerate_assembled(spec, bounds, out);
    }

    std::stable_sort(out.begin(), out.end(),
                     [](const CandidateSplitting& a, const CandidateSplitting& b) {
                         if (a.genus != b.genus) return a.genus < b.genus;
                         if (a.tubes != b.tubes) return a.tubes < b.tubes;
                         return a.encoding < b.encoding;
                     });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const CandidateSplitting& a, const CandidateSplitting& b) {
                              return a.encoding == b.encoding;
                          }),
              out.end());
    return out;
}

AmalgamationResult amalgamate(const GeneralizedSplitting& gs) {
    if (gs.levels.empty()) fail("empty-splitting", "a generalized splitting needs a thick level");
    int chi = 0;
    for (const auto& level : gs.levels) {
        chi += level.thick_chi;
        if (level.thin_chi) {
            if (*level.thin_chi > 0)
                fail("positive-thin-level", "thin levels have nonpositive Euler characteristic");
            chi -= *level.thin_chi;
        }
    }
    if (mod(chi, 2) != 0) fail("odd-chi", "amalgamated surface has odd Euler characteristic");
    return AmalgamationResult{chi, 1 - chi / 2};
}

std::vector<GraphManifoldSpec> cut_edge(const GraphManifoldSpec& spec, const std::string& edge_id) {
    auto eit = spec.edges.find(edge_id);
    if (eit == spec.edges.end()) fail("no-such-edge", "no edge named " + edge_id);
    if (eit->second.kind != EdgeKind::TorusCrossInterval)
        fail("cut-annulus-unsupported", "only torus edges can carry thin levels");

    GraphManifoldSpec remaining = spec;
    const EdgeManifold cut = eit->second;
    remaining.edges.erase(edge_id);
    for (int end = 0; end < 2; ++end)
        remaining.vertices.at(cut.endpoints[end].first).exterior.insert(cut.endpoints[end].second);

    // Connected components of the remaining graph.
    std::map<std::string, std::string> parent;
    for (const auto& [vid, v] : remaining.vertices) parent[vid] = vid;
    std::function<std::string(std::string)> find = [&](std::string x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [eid, e] : remaining.edges)
        parent[find(e.endpoints[0].first)] = find(e.endpoints[1].first);

    std::map<std::string, std::vector<std::string>> groups;
    for (const auto& [vid, v] : remaining.vertices) groups[find(vid)].push_back(vid);

    std::vector<GraphManifoldSpec> pieces;
    int index = 0;
    for (const auto& [root, vids] : groups) {
        GraphManifoldSpec piece;
        piece.name = spec.name + "#cut-" + edge_id + "-" + std::to_string(index++);
        for (const auto& vid : vids) piece.vertices.emplace(vid, remaining.vertices.at(vid));
        for (const auto& [eid, e] : remaining.edges)
            if (piece.vertices.count(e.endpoints[0].first)) piece.edges.emplace(eid, e);
        pieces.push_back(std::move(piece));
    }
    return pieces;
}

WeakReductionResult weak_reduction_pipeline(const GraphManifoldSpec& spec,
                                            const std::set<std::string>& thin_edges,
                                            const EnumerationBounds& bounds) {
    if (thin_edges.empty()) fail("no-thin-levels", "weak reduction needs at least one thin edge");

    std::vector<GraphManifoldSpec> pieces = {spec};
    for (const auto& eid : thin_edges) {
        std::vector<GraphManifoldSpec> next;
        bool cut_done = false;
        for (auto& piece : pieces) {
            if (!cut_done && piece.edges.count(eid)) {
                auto parts = cut_edge(piece, eid);
                for (auto& part : parts) next.push_back(std::move(part));
                cut_done = true;
            } else {
                next.push_back(std::move(piece));
            }
        }
        if (!cut_done) fail("no-such-edge", "no edge named " + eid);
        pieces = std::move(next);
    }

    std::sort(pieces.begin(), pieces.end(),
              [](const GraphManifoldSpec& a, const GraphManifoldSpec& b) {
                  return a.vertices.begin()->first < b.vertices.begin()->first;
              });

    WeakReductionResult result;
    const int thin_count = static_cast<int>(thin_edges.size());
    const int piece_count = static_cast<int>(pieces.size());
    for (int i = 0; i < piece_count; ++i) {
        auto candidates = enumerate_standard(pieces[i], bounds);
        if (candidates.empty())
            fail("no-candidates", "piece " + pieces[i].name + " admits no standard construction");
        GeneralizedSplitting::Level level;
        level.thick_chi = candidates.front().chi;
        // Thin levels are tori parallel to the decomposing tori: chi 0. Extra
        // thin levels beyond a linear chain come from cut loops.
        if (i < piece_count - 1 || thin_count >= piece_count) level.thin_chi = 0;
        result.splitting.levels.push_back(level);
        result.pieces.emplace_back(pieces[i].name, std::move(candidates.front()));
    }
    AmalgamationResult am = amalgamate(result.splitting);
    result.chi = am.chi;
    result.genus = am.genus;
    return result;
}

json candidate_report(const GraphManifoldSpec& spec,
                      const std::vector<CandidateSplitting>& candidates) {
    json j;
    j["name"] = spec.name;
    j["count"] = candidates.size();
    json list = json::array();
    for (const auto& cand : candidates) list.push_back(cand.to_json());
    j["candidates"] = std::move(list);
    return j;
}

} // namespace gm
