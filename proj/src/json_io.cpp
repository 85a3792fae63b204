#include "diamond/json_io.hpp"

namespace diamond {

using nlohmann::json;

json embedding_to_json(const DiamondEmbedding& e) {
    return json{{"dimension", e.dimension}, {"vectors", e.coords}};
}

DiamondEmbedding embedding_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dimension") || !j.contains("vectors"))
        throw std::invalid_argument("embedding JSON needs \"dimension\" and \"vectors\"");
    DiamondEmbedding e;
    e.dimension = j.at("dimension").get<int>();
    e.coords = j.at("vectors").get<std::vector<std::vector<int>>>();
    return e;
}

json certificate_to_json(const Certificate& c) {
    return json{{"reason", reason_name(c.reason)}, {"witness", c.witness}};
}

json classes_to_json(const Graph& g, const std::vector<DwClass>& classes) {
    json arr = json::array();
    for (const auto& c : classes) {
        json edges = json::array();
        for (int e : c.edges)
            edges.push_back(json::array({g.edges[e].first, g.edges[e].second}));
        arr.push_back(json{{"id", c.id},
                           {"edges", edges},
                           {"semicube_a", c.semicube_a()},
                           {"semicube_b", c.semicube_b()}});
    }
    return json{{"class_count", classes.size()}, {"classes", arr}};
}

json cuts_to_json(const std::vector<OrientedCut>& cuts) {
    json arr = json::array();
    for (const auto& c : cuts)
        arr.push_back(json{{"class", c.class_id}, {"white_side", c.white_vertices()}});
    return json{{"coherent", true}, {"cuts", arr}};
}

json verify_to_json(const VerifyResult& r) {
    if (r.ok) return json{{"ok", true}};
    return json{{"ok", false}, {"violation", r.violation}, {"vertices", r.vertices}};
}

}  // namespace diamond
