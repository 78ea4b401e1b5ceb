#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "freefusion/fusion_ring.hpp"
#include "freefusion/group.hpp"

namespace freefusion {

// Ring files are JSON objects with fields `labels` (array of strings),
// `unit` (string), `dual` (map label -> label), and `N` (array of 4-tuples
// [a, b, c, n] with integer n >= 1); absent triples are zero.  Optional:
// `name` (string, else derived from the file name) and `overflow` (array of
// label pairs whose product leaves the stored window).
FusionRing parse_ring(const nlohmann::json& doc, const std::string& fallback_name);
nlohmann::ordered_json ring_to_json(const FusionRing& ring);
FusionRing load_ring_file(const std::string& path);
void save_ring_file(const FusionRing& ring, const std::string& path);

// Group files use the same structured format: `elements` (array of
// strings, identity first), `mult` (array of triples [a, b, ab]; all
// products must be listed), optional `name` and `inverse` (map, checked
// against the table when present).
GroupTable parse_group(const nlohmann::json& doc, const std::string& fallback_name);
nlohmann::ordered_json group_to_json(const GroupTable& g);
GroupTable load_group_file(const std::string& path);
void save_group_file(const GroupTable& g, const std::string& path);

// Command-line input resolution: an existing file path (as given or with
// ".json" appended), else a built-in name.  Throws input_error otherwise.
FusionRing ring_from_spec(const std::string& spec);
GroupTable group_from_spec(const std::string& spec);

} // namespace freefusion
