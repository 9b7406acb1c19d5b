#pragma once

#include <string>

#include "nomad/map/graph.hpp"
#include "nomad/result.hpp"
#include "nomad/text_util.hpp"

namespace nomad {

/// Map file format: JSON object {goal, nodes:[{id,kind,name,description,
/// attributes}], edges:[{from,to,kind}]}, UTF-8, stable field names.
/// load(save(m)) is structurally identical to m.
std::string save_map(const ExplorationMap& map);
Json map_to_json(const ExplorationMap& map);

Result<ExplorationMap> load_map(const std::string& bytes);
Result<ExplorationMap> load_map_file(const std::string& path);
Status save_map_file(const ExplorationMap& map, const std::string& path);

}  // namespace nomad
