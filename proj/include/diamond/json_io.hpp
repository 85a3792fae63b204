#pragma once

#include "json.hpp"

#include "diamond/embed.hpp"
#include "diamond/partial_cube.hpp"

namespace diamond {

// {"dimension": d, "vectors": [[int, ...], ...]} indexed by vertex.
nlohmann::json embedding_to_json(const DiamondEmbedding& e);
DiamondEmbedding embedding_from_json(const nlohmann::json& j);

// {"reason": "odd_cycle" | "not_partial_cube" | "incoherent_cut" |
//  "disconnected", "witness": [int, ...]}
nlohmann::json certificate_to_json(const Certificate& c);

nlohmann::json classes_to_json(const Graph& g, const std::vector<DwClass>& classes);
nlohmann::json cuts_to_json(const std::vector<OrientedCut>& cuts);
nlohmann::json verify_to_json(const VerifyResult& r);

}  // namespace diamond
