#pragma once

#include <optional>

#include <json.hpp>

#include "dwidth/decomposition.hpp"
#include "dwidth/embedding.hpp"
#include "dwidth/layering.hpp"
#include "dwidth/loaded_cycle.hpp"

namespace dwidth {

// {"nodes": s, "tree_edges": [[a, b], ...], "bags": [[v, ...], ...]}
nlohmann::json to_json(const TreeDecomposition& td);
TreeDecomposition decomposition_from_json(const nlohmann::json& j);

// {"cycle": [...], "F": [[u, v], ...], "load": int}
nlohmann::json to_json(const LoadedCycle& lc);
// Adds "root", "class_layer" and "pair" to the loaded-cycle fields.
nlohmann::json to_json(const LayeringWitness& w);
/// Reads "cycle" and "F"; a present "load" must match |F|.
LoadedCycle loaded_cycle_from_json(const nlohmann::json& j);

// {"tree_nodes": s, "tree_edges": [[a, b], ...], "phi": [node per vertex]}
nlohmann::json to_json(const TreeEmbedding& emb);
TreeEmbedding embedding_from_json(const nlohmann::json& j);

}  // namespace dwidth
