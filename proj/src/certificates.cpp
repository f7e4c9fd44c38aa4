#include "dwidth/certificates.hpp"

#include <algorithm>

namespace dwidth {

using nlohmann::json;

namespace {

json edges_to_json(const std::vector<Edge>& edges) {
    json out = json::array();
    for (const auto& [a, b] : edges) {
        out.push_back({a, b});
    }
    return out;
}

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) {
        throw PreconditionError(std::string("certificate is missing field \"") + name + "\"");
    }
    return j.at(name);
}

std::vector<Edge> edges_from_json(const json& j, const char* name) {
    std::vector<Edge> out;
    const json& list = field(j, name);
    if (!list.is_array()) {
        throw PreconditionError(std::string("\"") + name + "\" must be an array of pairs");
    }
    for (const auto& e : list) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw PreconditionError(std::string("\"") + name + "\" must be an array of pairs");
        }
        out.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return out;
}

std::vector<int> ints_from_json(const json& j, const char* name) {
    const json& list = field(j, name);
    if (!list.is_array() || !std::ranges::all_of(list, [](const json& x) { return x.is_number_integer(); })) {
        throw PreconditionError(std::string("\"") + name + "\" must be an array of integers");
    }
    return list.get<std::vector<int>>();
}

int int_from_json(const json& j, const char* name) {
    const json& value = field(j, name);
    if (!value.is_number_integer()) {
        throw PreconditionError(std::string("\"") + name + "\" must be an integer");
    }
    return value.get<int>();
}

}  // namespace

json to_json(const TreeDecomposition& td) {
    return {{"nodes", td.node_count}, {"tree_edges", edges_to_json(td.tree_edges)}, {"bags", td.bags}};
}

TreeDecomposition decomposition_from_json(const json& j) {
    TreeDecomposition td;
    td.node_count = int_from_json(j, "nodes");
    td.tree_edges = edges_from_json(j, "tree_edges");
    const json& bags = field(j, "bags");
    if (!bags.is_array()) {
        throw PreconditionError("\"bags\" must be an array of arrays");
    }
    for (const auto& bag : bags) {
        if (!bag.is_array() || !std::ranges::all_of(bag, [](const json& x) { return x.is_number_integer(); })) {
            throw PreconditionError("\"bags\" must be an array of integer arrays");
        }
        td.bags.push_back(bag.get<std::vector<Vertex>>());
    }
    td.normalize();
    return td;
}

json to_json(const LoadedCycle& lc) {
    return {{"cycle", lc.vertices()}, {"F", edges_to_json(lc.loaded_edges())}, {"load", lc.load()}};
}

json to_json(const LayeringWitness& w) {
    json out = to_json(w.cycle);
    out["root"] = w.root;
    out["class_layer"] = w.class_layer;
    out["pair"] = {w.u, w.v};
    return out;
}

LoadedCycle loaded_cycle_from_json(const json& j) {
    LoadedCycle lc(ints_from_json(j, "cycle"), edges_from_json(j, "F"));
    if (j.contains("load") && int_from_json(j, "load") != lc.load()) {
        throw PreconditionError("\"load\" does not match the number of loaded edges");
    }
    return lc;
}

json to_json(const TreeEmbedding& emb) {
    return {{"tree_nodes", emb.tree_nodes}, {"tree_edges", edges_to_json(emb.tree_edges)}, {"phi", emb.phi}};
}

TreeEmbedding embedding_from_json(const json& j) {
    TreeEmbedding emb;
    emb.tree_nodes = int_from_json(j, "tree_nodes");
    emb.tree_edges = edges_from_json(j, "tree_edges");
    emb.phi = ints_from_json(j, "phi");
    return emb;
}

}  // namespace dwidth
