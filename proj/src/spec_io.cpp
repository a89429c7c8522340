#include "gm/spec_io.hpp"

#include <algorithm>
#include <fstream>

#include "gm/error.hpp"

namespace gm {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& path, const std::string& what) {
    fail("malformed-spec", path + ": " + what);
}

const json& member(const json& obj, const std::string& path, const char* key) {
    if (!obj.is_object()) malformed(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) malformed(path, std::string("missing field `") + key + "`");
    return *it;
}

int int_member(const json& obj, const std::string& path, const char* key) {
    const json& v = member(obj, path, key);
    if (!v.is_number_integer()) malformed(path + "." + key, "expected an integer");
    return v.get<int>();
}

Mat2 parse_matrix(const json& m, const std::string& path) {
    if (!m.is_array() || m.size() != 2 || !m[0].is_array() || !m[1].is_array() ||
        m[0].size() != 2 || m[1].size() != 2)
        malformed(path, "expected a 2x2 integer matrix [[a,b],[c,d]]");
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            if (!m[r][c].is_number_integer()) malformed(path, "matrix entries must be integers");
    return Mat2{m[0][0].get<std::int64_t>(), m[0][1].get<std::int64_t>(),
                m[1][0].get<std::int64_t>(), m[1][1].get<std::int64_t>()};
}

json matrix_to_json(const Mat2& m) {
    return json::array({json::array({m.a, m.b}), json::array({m.c, m.d})});
}

} // namespace

GraphManifoldSpec parse_spec(const json& doc) {
    if (!doc.is_object()) malformed("$", "document must be a JSON object");
    const json& format = member(doc, "$", "format");
    if (!format.is_string() || format.get<std::string>() != kSpecFormat)
        fail("unsupported-format", "expected format \"" + std::string(kSpecFormat) + "\"");

    GraphManifoldSpec spec;
    const json& name = member(doc, "$", "name");
    if (!name.is_string()) malformed("name", "expected a string");
    spec.name = name.get<std::string>();

    const json& vertices = member(doc, "$", "vertices");
    if (!vertices.is_object()) malformed("vertices", "expected an object keyed by vertex id");
    for (const auto& [vid, jv] : vertices.items()) {
        const std::string path = "vertices." + vid;
        VertexManifold v;
        const json& kind = member(jv, path, "kind");
        if (kind == "seifert") v.kind = VertexKind::SeifertFibered;
        else if (kind == "product") v.kind = VertexKind::SurfaceCrossInterval;
        else malformed(path + ".kind", "expected \"seifert\" or \"product\"");
        v.base_genus = int_member(jv, path, "base_genus");
        v.boundary_count = int_member(jv, path, "boundary_count");
        const json& exc = member(jv, path, "exceptional");
        if (!exc.is_array()) malformed(path + ".exceptional", "expected a list of [alpha,beta]");
        for (const auto& pair : exc) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
                !pair[1].is_number_integer())
                malformed(path + ".exceptional", "expected [alpha,beta] integer pairs");
            v.exceptional.push_back({pair[0].get<int>(), pair[1].get<int>()});
        }
        const json& ext = member(jv, path, "exterior");
        if (!ext.is_array()) malformed(path + ".exterior", "expected a list of boundary indices");
        for (const auto& b : ext) {
            if (!b.is_number_integer()) malformed(path + ".exterior", "expected integers");
            v.exterior.insert(b.get<int>());
        }
        spec.vertices.emplace(vid, std::move(v));
    }

    const json& edges = member(doc, "$", "edges");
    if (!edges.is_object()) malformed("edges", "expected an object keyed by edge id");
    for (const auto& [eid, je] : edges.items()) {
        const std::string path = "edges." + eid;
        EdgeManifold e;
        const json& kind = member(je, path, "kind");
        if (kind == "torus") e.kind = EdgeKind::TorusCrossInterval;
        else if (kind == "annulus") e.kind = EdgeKind::AnnulusCrossInterval;
        else malformed(path + ".kind", "expected \"torus\" or \"annulus\"");
        const json& ends = member(je, path, "endpoints");
        if (!ends.is_array() || ends.size() != 2)
            malformed(path + ".endpoints", "expected two [vertex,boundary] pairs");
        for (int i = 0; i < 2; ++i) {
            const json& end = ends[i];
            if (!end.is_array() || end.size() != 2 || !end[0].is_string() ||
                !end[1].is_number_integer())
                malformed(path + ".endpoints", "expected [vertex id, boundary index]");
            e.endpoints[i] = {end[0].get<std::string>(), end[1].get<int>()};
        }
        const json& gl = member(je, path, "gluings");
        if (!gl.is_array() || gl.size() != 2)
            malformed(path + ".gluings", "expected two 2x2 matrices");
        for (int i = 0; i < 2; ++i)
            e.gluings[i].matrix = parse_matrix(gl[i], path + ".gluings[" + std::to_string(i) + "]");
        spec.edges.emplace(eid, std::move(e));
    }
    return spec;
}

GraphManifoldSpec parse_spec_text(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) fail("json-parse", "input is not valid JSON");
    return parse_spec(doc);
}

json spec_to_json(const GraphManifoldSpec& spec) {
    json doc;
    doc["format"] = kSpecFormat;
    doc["name"] = spec.name;
    json vertices = json::object();
    for (const auto& [vid, v] : spec.vertices) {
        json jv;
        jv["kind"] = v.kind == VertexKind::SeifertFibered ? "seifert" : "product";
        jv["base_genus"] = v.base_genus;
        jv["boundary_count"] = v.boundary_count;
        auto exc = v.exceptional;
        std::sort(exc.begin(), exc.end());
        json jexc = json::array();
        for (const auto& si : exc) jexc.push_back(json::array({si.alpha, si.beta}));
        jv["exceptional"] = std::move(jexc);
        jv["exterior"] = json(v.exterior);
        vertices[vid] = std::move(jv);
    }
    doc["vertices"] = std::move(vertices);
    json edges = json::object();
    for (const auto& [eid, e] : spec.edges) {
        json je;
        je["kind"] = e.kind == EdgeKind::TorusCrossInterval ? "torus" : "annulus";
        je["endpoints"] = json::array({json::array({e.endpoints[0].first, e.endpoints[0].second}),
                                       json::array({e.endpoints[1].first, e.endpoints[1].second})});
        je["gluings"] =
            json::array({matrix_to_json(e.gluings[0].matrix), matrix_to_json(e.gluings[1].matrix)});
        edges[eid] = std::move(je);
    }
    doc["edges"] = std::move(edges);
    return doc;
}

std::string serialize_spec(const GraphManifoldSpec& spec) {
    // nlohmann::json keeps object keys sorted; dump() emits no whitespace.
    return spec_to_json(spec).dump();
}

GraphManifoldSpec load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("io", "cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_spec_text(text);
}

void save_spec_file(const GraphManifoldSpec& spec, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail("io", "cannot write " + path);
    out << serialize_spec(spec) << "\n";
}

} // namespace gm
