#pragma once

// JSON forms of quivers, reduction scripts and seeds. All vertex labels in
// JSON are 1-based.

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "clusterbench/quiver.hpp"
#include "clusterbench/seed.hpp"

namespace clusterbench {

using Json = nlohmann::ordered_json;

/// {"type":"ice_quiver","vertices":[{"id":1,"frozen":false},...],"arrows":[[s,t,m],...]}
Json quiver_to_json(const IceQuiver& q);
/// Compact canonical text, no trailing newline.
std::string quiver_to_string(const IceQuiver& q);
/// Throws ParseError on malformed input: unknown type, ids that are not a
/// permutation of 1..n, loops, nonpositive multiplicities, repeated pairs or
/// opposite arrows.
IceQuiver quiver_from_json(const Json& j);
IceQuiver parse_quiver(std::string_view text);

IceQuiver read_quiver_file(const std::filesystem::path& path);
/// Canonical text followed by a newline.
void write_quiver_file(const std::filesystem::path& path, const IceQuiver& q);

/// Accepts {"mutations":[..],"freezes":[..],"deletions":[..]} (missing keys
/// are empty) or {"steps":[{"op":"mutate"|"freeze"|"delete","vertex":k},..]}.
ReductionScript script_from_json(const Json& j);
Json script_to_json(const ReductionScript& s);

/// {"type":"seed","quiver":{...},"cluster":["x1",...],"provenance":[..]}
Json seed_to_json(const Seed& s);
Seed seed_from_json(const Json& j);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace clusterbench
