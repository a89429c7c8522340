// End-to-end checks of the gmsplit binary: exit codes, report formats, and
// the agreement between `genus` and the first entry of `enumerate`.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gm/spec_io.hpp"

using nlohmann::json;

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
    std::printf("%s  %s\n", ok ? "ok  " : "FAIL", what.c_str());
    if (!ok) ++failures;
}

std::string fixture(const std::string& name) { return std::string(FIXTURES_DIR) + "/" + name; }

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string out_path = "/tmp/gmsplit_cli_out.txt";
    std::string command = std::string(GMSPLIT_BIN) + " " + args + " > " + out_path + " 2>&1";
    int status = std::system(command.c_str());
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    return RunResult{WEXITSTATUS(status), ss.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

int main() {
    auto valid = run("validate " + fixture("ex53_single.json"));
    check(valid.exit_code == 0 && contains(valid.output, "valid"), "validate accepts a good spec");

    auto det2 = run("validate " + fixture("det2_gluing.json"));
    check(det2.exit_code == 1 && contains(det2.output, "gluing-not-unimodular"),
          "validate reports non-unimodular gluings with exit 1");

    auto missing = run("validate /does/not/exist.json");
    check(missing.exit_code == 2, "missing input exits 2");

    auto badjson = run("genus " + fixture("amalgamate_example.json"));
    check(badjson.exit_code == 2, "non-spec input exits 2");

    auto genus = run("genus " + fixture("ex53_single.json"));
    check(genus.exit_code == 0 && contains(genus.output, "genus: 2"),
          "genus prints the minimal genus");

    auto amalg = run("amalgamate " + fixture("amalgamate_example.json"));
    check(amalg.exit_code == 0 && contains(amalg.output, "chi: -4, genus: 3"),
          "amalgamate prints chi and genus");

    auto genus_json = run("genus --json " + fixture("ex54_m2.json"));
    auto enum_json = run("enumerate --json " + fixture("ex54_m2.json"));
    bool agree = false;
    if (genus_json.exit_code == 0 && enum_json.exit_code == 0) {
        json g = json::parse(genus_json.output);
        json e = json::parse(enum_json.output);
        agree = !e.at("candidates").empty() &&
                g.at("genus") == e.at("candidates")[0].at("genus") &&
                g.at("witness") == e.at("candidates")[0];
    }
    check(agree, "genus equals the first entry of enumerate");

    auto no_tubes = run("enumerate --json --no-tubes " + fixture("ex54_m2.json"));
    check(no_tubes.exit_code == 0 && !contains(no_tubes.output, "annuli-tube"),
          "--no-tubes suppresses tube patterns");

    auto cut = run("cut " + fixture("ex53_doubled.json") + " --edge e1 -o /tmp/gmsplit_cut");
    bool cut_ok = cut.exit_code == 0;
    if (cut_ok) {
        for (const char* path : {"/tmp/gmsplit_cut.0.json", "/tmp/gmsplit_cut.1.json"}) {
            try {
                gm::GraphManifoldSpec piece = gm::load_spec_file(path);
                cut_ok = cut_ok && gm::validate(piece).ok() &&
                         piece.vertices.begin()->second.exterior.count(1) == 1;
            } catch (const std::exception&) {
                cut_ok = false;
            }
        }
    }
    check(cut_ok, "cut writes valid single-vertex pieces with new exterior boundaries");

    {
        auto report = run("enumerate --json " + fixture("ex54_m2.json"));
        std::ifstream golden_in(fixture("ex54_m2.golden.json"));
        std::stringstream golden;
        golden << golden_in.rdbuf();
        check(report.exit_code == 0 && report.output == golden.str(),
              "enumerate report matches the golden file byte for byte");
    }

    auto explain = run("explain --candidate 0 " + fixture("ex55_closed.json"));
    check(explain.exit_code == 0 && contains(explain.output, "pseudohorizontal") &&
              contains(explain.output, "total chi -2"),
          "explain prints the per-piece chi ledger");

    auto bad_candidate = run("explain --candidate 99 " + fixture("ex55_closed.json"));
    check(bad_candidate.exit_code == 1, "explain rejects out-of-range candidates");

    if (failures > 0) {
        std::printf("%d CLI check(s) failed\n", failures);
        return 1;
    }
    std::printf("all CLI checks passed\n");
    return 0;
}
