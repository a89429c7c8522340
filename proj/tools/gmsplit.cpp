// gmsplit — enumerate standard Heegaard-splitting constructions of totally
// orientable graph manifolds, with exact genus bookkeeping.
//
// Subcommands: validate, enumerate, genus, cut, amalgamate, explain.
// Exit codes: 0 success, 1 validation failure, 2 I/O or parse errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gm/assembly.hpp"
#include "gm/error.hpp"
#include "gm/spec_io.hpp"

using nlohmann::json;

namespace {

struct Options {
    std::string input;
    std::string output;
    int n_max = 12;
    int max_arcs = 8;
    bool no_tubes = false;
    bool json_output = false;
    std::string edge;
    int candidate = 0;
};

gm::EnumerationBounds bounds_of(const Options& opt) {
    gm::EnumerationBounds bounds;
    bounds.n_max = opt.n_max;
    bounds.max_arcs = opt.max_arcs;
    bounds.allow_tubes = !opt.no_tubes;
    return bounds;
}

void emit(const Options& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output);
    if (!out) gm::fail("io", "cannot write " + opt.output);
    out << text;
}

std::string describe_piece(const gm::SurfacePiece& piece) {
    const json& d = piece.detail;
    const std::string kind = d.at("construction").get<std::string>();
    std::ostringstream os;
    if (kind == "vertical-splitting") {
        os << "pseudovertical splitting (fibers_in_V=" << d.at("fibers_in_V").get<int>()
           << ", boundaries_in_V=" << d.at("boundaries_in_V").get<int>()
           << ", arcs=" << d.at("arcs").get<int>() << ")";
    } else if (kind == "product-times-circle") {
        os << "pseudovertical splitting of (surface) x S^1 (arcs=" << d.at("arcs").get<int>() << ")";
    } else if (kind == "vertical") {
        const json& cls = d.at("class");
        os << "vertical annuli (ends " << cls.at("ends")[0].get<int>() << "-"
           << cls.at("ends")[1].get<int>() << ", copies " << cls.at("copies").get<int>() << ")";
    } else if (kind == "horizontal") {
        os << "horizontal (degree " << d.at("degree").get<int>() << ", copies "
           << d.at("copies").get<int>() << ")";
    } else if (kind == "product-horizontal") {
        os << "horizontal (copies " << d.at("copies").get<int>() << ")";
    } else if (kind == "pseudohorizontal") {
        os << "pseudohorizontal (fiber " << d.at("fiber").get<int>() << ", degree "
           << d.at("degree").get<int>() << ")";
    } else {
        os << kind;
    }
    os << " chi " << piece.chi;
    return os.str();
}

std::string describe_pattern(const gm::EdgePattern& pattern) {
    std::ostringstream os;
    os << gm::pattern_kind_name(pattern.kind);
    if (pattern.kind != gm::PatternKind::Cross) {
        os << " (spanning " << pattern.spanning << ", parallel " << pattern.parallel[0] << "/"
           << pattern.parallel[1];
        if (pattern.kind == gm::PatternKind::AnnuliWithTube) os << ", tube end " << pattern.tube_end;
        os << ")";
    }
    os << " chi " << pattern.chi;
    return os.str();
}

std::string render_candidate(const gm::CandidateSplitting& cand, int index) {
    std::ostringstream os;
    os << "[" << index << "] genus " << cand.genus << "  chi " << cand.chi << "  tubes "
       << cand.tubes << "\n";
    for (const auto& [vid, piece] : cand.vertex_pieces)
        os << "    vertex " << vid << ": " << describe_piece(piece) << "\n";
    for (const auto& [eid, pattern] : cand.edge_choices)
        os << "    edge " << eid << ": " << describe_pattern(pattern) << "\n";
    return os.str();
}

int print_validation(const gm::ValidationReport& report, std::ostream& os) {
    if (report.ok()) {
        os << "valid\n";
        return 0;
    }
    for (const auto& v : report.violations)
        os << v.code << ": " << v.path << ": " << v.message << "\n";
    return 1;
}

gm::GraphManifoldSpec load_valid_spec(const Options& opt) {
    gm::GraphManifoldSpec spec = gm::load_spec_file(opt.input);
    gm::ValidationReport report = gm::validate(spec);
    if (!report.ok()) {
        print_validation(report, std::cerr);
        std::exit(1);
    }
    return spec;
}

int run_validate(const Options& opt) {
    gm::GraphManifoldSpec spec = gm::load_spec_file(opt.input);
    gm::ValidationReport report = gm::validate(spec);
    if (opt.json_output) {
        json j;
        j["valid"] = report.ok();
        json issues = json::array();
        for (const auto& v : report.violations)
            issues.push_back(json{{"code", v.code}, {"path", v.path}, {"message", v.message}});
        j["violations"] = std::move(issues);
        emit(opt, j.dump() + "\n");
        return report.ok() ? 0 : 1;
    }
    std::ostringstream os;
    int code = print_validation(report, os);
    emit(opt, os.str());
    return code;
}

int run_enumerate(const Options& opt) {
    gm::GraphManifoldSpec spec = load_valid_spec(opt);
    auto candidates = gm::enumerate_standard(spec, bounds_of(opt));
    if (opt.json_output) {
        emit(opt, gm::candidate_report(spec, candidates).dump() + "\n");
        return 0;
    }
    std::ostringstream os;
    os << candidates.size() << " candidate(s)\n";
    for (std::size_t i = 0; i < candidates.size(); ++i)
        os << render_candidate(candidates[i], static_cast<int>(i));
    emit(opt, os.str());
    return 0;
}

int run_genus(const Options& opt) {
    gm::GraphManifoldSpec spec = load_valid_spec(opt);
    auto candidates = gm::enumerate_standard(spec, bounds_of(opt));
    if (candidates.empty()) {
        if (opt.json_output) {
            emit(opt, json{{"genus", nullptr}}.dump() + "\n");
        } else {
            emit(opt, "no candidates within bounds\n");
        }
        return 0;
    }
    if (opt.json_output) {
        json j;
        j["genus"] = candidates.front().genus;
        j["witness"] = candidates.front().to_json();
        emit(opt, j.dump() + "\n");
        return 0;
    }
    std::ostringstream os;
    os << "genus: " << candidates.front().genus << "\n";
    os << render_candidate(candidates.front(), 0);
    emit(opt, os.str());
    return 0;
}

int run_cut(const Options& opt) {
    gm::GraphManifoldSpec spec = load_valid_spec(opt);
    auto pieces = gm::cut_edge(spec, opt.edge);
    std::string prefix = opt.output.empty() ? opt.input + ".cut" : opt.output;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        std::string path = prefix + "." + std::to_string(i) + ".json";
        gm::save_spec_file(pieces[i], path);
        std::cout << path << "\n";
    }
    return 0;
}

int run_amalgamate(const Options& opt) {
    std::ifstream in(opt.input);
    if (!in) gm::fail("io", "cannot open " + opt.input);
    json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded()) gm::fail("json-parse", "input is not valid JSON");
    if (!doc.is_array()) gm::fail("malformed-splitting", "expected a list of [chiS, chiF] levels");
    gm::GeneralizedSplitting gs;
    for (const auto& level : doc) {
        if (!level.is_array() || level.empty() || level.size() > 2)
            gm::fail("malformed-splitting", "levels are 1- or 2-element integer arrays");
        gm::GeneralizedSplitting::Level l;
        if (!level[0].is_number_integer())
            gm::fail("malformed-splitting", "thick level chi must be an integer");
        l.thick_chi = level[0].get<int>();
        if (level.size() == 2) {
            if (!level[1].is_number_integer())
                gm::fail("malformed-splitting", "thin level chi must be an integer");
            l.thin_chi = level[1].get<int>();
        }
        gs.levels.push_back(l);
    }
    gm::AmalgamationResult result = gm::amalgamate(gs);
    if (opt.json_output) {
        emit(opt, json{{"chi", result.chi}, {"genus", result.genus}}.dump() + "\n");
    } else {
        emit(opt, "chi: " + std::to_string(result.chi) +
                      ", genus: " + std::to_string(result.genus) + "\n");
    }
    return 0;
}

int run_explain(const Options& opt) {
    gm::GraphManifoldSpec spec = load_valid_spec(opt);
    auto candidates = gm::enumerate_standard(spec, bounds_of(opt));
    if (opt.candidate < 0 || opt.candidate >= static_cast<int>(candidates.size())) {
        std::cerr << "no candidate " << opt.candidate << " (found " << candidates.size() << ")\n";
        return 1;
    }
    const auto& cand = candidates[opt.candidate];
    std::ostringstream os;
    os << "candidate " << opt.candidate << ": genus " << cand.genus << ", chi " << cand.chi << "\n";
    for (const auto& [vid, piece] : cand.vertex_pieces)
        os << "  vertex " << vid << ": " << describe_piece(piece) << "\n";
    for (const auto& [eid, pattern] : cand.edge_choices)
        os << "  edge " << eid << ": " << describe_pattern(pattern) << "\n";
    os << "  total chi " << cand.chi << "  genus " << cand.genus << "\n";
    emit(opt, os.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Heegaard-splitting constructions of totally orientable graph manifolds"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool with_bounds) {
        cmd->add_option("input", opt.input, "input file")->required();
        cmd->add_option("-o,--output", opt.output, "output path (default stdout)");
        cmd->add_flag("--json", opt.json_output, "machine-readable JSON output");
        if (with_bounds) {
            cmd->add_option("--n-max", opt.n_max, "horizontal degree bound")->check(CLI::PositiveNumber);
            cmd->add_option("--max-arcs", opt.max_arcs, "surgery arc bound")->check(CLI::PositiveNumber);
            cmd->add_flag("--no-tubes", opt.no_tubes, "disallow tube patterns");
        }
    };

    CLI::App* validate = app.add_subcommand("validate", "check a gm-spec/1 document");
    add_common(validate, false);
    CLI::App* enumerate = app.add_subcommand("enumerate", "list all standard constructions");
    add_common(enumerate, true);
    CLI::App* genus = app.add_subcommand("genus", "minimal genus and one witness");
    add_common(genus, true);
    CLI::App* cut = app.add_subcommand("cut", "cut along a torus edge");
    add_common(cut, false);
    cut->add_option("--edge", opt.edge, "edge id to cut")->required();
    CLI::App* amalgamate = app.add_subcommand("amalgamate", "chi/genus of a generalized splitting");
    add_common(amalgamate, false);
    CLI::App* explain = app.add_subcommand("explain", "per-piece chi ledger of a candidate");
    add_common(explain, true);
    explain->add_option("--candidate", opt.candidate, "candidate index (default 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(validate)) return run_validate(opt);
        if (app.got_subcommand(enumerate)) return run_enumerate(opt);
        if (app.got_subcommand(genus)) return run_genus(opt);
        if (app.got_subcommand(cut)) return run_cut(opt);
        if (app.got_subcommand(amalgamate)) return run_amalgamate(opt);
        if (app.got_subcommand(explain)) return run_explain(opt);
    } catch (const gm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
