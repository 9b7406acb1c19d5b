#include "nomad/map/serialize.hpp"

namespace nomad {

Json map_to_json(const ExplorationMap& map) {
    Json j;
    j["goal"] = map.goal();
    j["nodes"] = Json::array();
    for (const auto& n : map.nodes()) {
        Json jn;
        jn["id"] = n.id;
        jn["kind"] = node_kind_name(n.kind);
        jn["name"] = n.name;
        jn["description"] = n.description;
        jn["attributes"] = Json::object();
        for (const auto& [k, v] : n.attributes) jn["attributes"][k] = v;
        j["nodes"].push_back(std::move(jn));
    }
    j["edges"] = Json::array();
    for (const auto& e : map.edges()) {
        Json je;
        je["from"] = e.from;
        je["to"] = e.to;
        je["kind"] = edge_kind_name(e.kind);
        j["edges"].push_back(std::move(je));
    }
    return j;
}

std::string save_map(const ExplorationMap& map) { return map_to_json(map).dump(2) + "\n"; }

Result<ExplorationMap> load_map(const std::string& bytes) {
    Json j;
    try {
        j = Json::parse(bytes);
    } catch (const Json::parse_error& e) {
        return make_error(std::string("map parse error: ") + e.what());
    }
    if (!j.is_object()) return make_error("map parse error: top-level value is not an object");
    ExplorationMap map;
    map.set_goal(j.value("goal", std::string()));
    if (!j.contains("nodes") || !j["nodes"].is_array()) {
        return make_error("map parse error: missing \"nodes\" array");
    }
    if (!j.contains("edges") || !j["edges"].is_array()) {
        return make_error("map parse error: missing \"edges\" array");
    }
    size_t idx = 0;
    for (const auto& jn : j["nodes"]) {
        std::string where = "nodes[" + std::to_string(idx++) + "]";
        if (!jn.is_object()) return make_error("map parse error: " + where + " is not an object");
        Node n;
        n.id = jn.value("id", std::string());
        auto kind = parse_node_kind(jn.value("kind", std::string()));
        if (!kind) {
            return make_error("map parse error: " + where + " has unknown kind \"" +
                              jn.value("kind", std::string()) + "\"");
        }
        n.kind = *kind;
        n.name = jn.value("name", std::string());
        n.description = jn.value("description", std::string());
        if (jn.contains("attributes")) {
            for (auto it = jn["attributes"].begin(); it != jn["attributes"].end(); ++it) {
                n.attributes[it.key()] = it.value().get<std::string>();
            }
        }
        Status s = map.add_node_with_id(std::move(n));
        if (!s.ok()) return make_error("map parse error: " + where + ": " + s.error());
    }
    idx = 0;
    for (const auto& je : j["edges"]) {
        std::string where = "edges[" + std::to_string(idx++) + "]";
        if (!je.is_object()) return make_error("map parse error: " + where + " is not an object");
        auto kind = parse_edge_kind(je.value("kind", std::string()));
        if (!kind) {
            return make_error("map parse error: " + where + " has unknown kind \"" +
                              je.value("kind", std::string()) + "\"");
        }
        map.add_edge(je.value("from", std::string()), je.value("to", std::string()), *kind);
    }
    return map;
}

Result<ExplorationMap> load_map_file(const std::string& path) {
    auto content = read_file(path);
    if (!content.ok()) return make_error(content.error());
    return load_map(*content);
}

Status save_map_file(const ExplorationMap& map, const std::string& path) {
    return write_file(path, save_map(map));
}

}  // namespace nomad
