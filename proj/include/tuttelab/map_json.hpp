#pragma once

#include <string>

#include <json.hpp>

#include "tuttelab/rooted_map.hpp"

namespace tuttelab {

// {"n_darts": int, "alpha": [int], "sigma": [int], "root": int | null};
// a null root marks the atomic map.
nlohmann::json map_to_json(const RootedMap& m);
// Throws InvalidMap on a malformed record or a record violating the invariants.
RootedMap map_from_json(const nlohmann::json& j);

std::string map_to_json_line(const RootedMap& m);
RootedMap map_from_json_text(const std::string& text);

}  // namespace tuttelab
