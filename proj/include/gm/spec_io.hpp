#pragma once

#include <string>

#include <json.hpp>

#include "gm/model.hpp"

namespace gm {

inline constexpr const char* kSpecFormat = "gm-spec/1";

// Parses a gm-spec/1 document. Shape problems (wrong types, missing fields,
// unknown format version) throw; semantic invariants are left to validate().
GraphManifoldSpec parse_spec(const nlohmann::json& doc);
GraphManifoldSpec parse_spec_text(const std::string& text);

// Canonical serialization: keys sorted lexicographically, exceptional lists
// sorted, no insignificant whitespace. parse/serialize round-trips canonical
// documents byte-identically.
nlohmann::json spec_to_json(const GraphManifoldSpec& spec);
std::string serialize_spec(const GraphManifoldSpec& spec);

GraphManifoldSpec load_spec_file(const std::string& path);
void save_spec_file(const GraphManifoldSpec& spec, const std::string& path);

} // namespace gm
