#include "fk/io.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace fk {
namespace {

using nlohmann::json;

json graph_json(const BoundaryGraph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    return json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

BoundaryGraph graph_from(const json& j, bool allow_tree) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph json requires fields n and edges");
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("edge entries must be pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    if (allow_tree && edges.size() + 1 == static_cast<std::size_t>(n))
        return BoundaryGraph::tree(n, std::move(edges));
    return build_graph(n, std::move(edges));
}

}  // namespace

std::string graph_to_json(const BoundaryGraph& g) { return graph_json(g).dump(); }

BoundaryGraph graph_from_json(const std::string& text, bool allow_tree) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& err) {
        throw std::invalid_argument(std::string("malformed graph json: ") + err.what());
    }
    try {
        return graph_from(j, allow_tree);
    } catch (const json::exception& err) {
        throw std::invalid_argument(std::string("malformed graph json: ") + err.what());
    }
}

BoundaryGraph load_graph(const std::filesystem::path& file, bool allow_tree) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return graph_from_json(text, allow_tree);
}

void save_graph(const BoundaryGraph& g, const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    out << graph_to_json(g) << '\n';
}

std::string graph_to_dot(const BoundaryGraph& g) {
    std::string dot = "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        dot += "  " + std::to_string(v);
        dot += g.is_boundary(v) ? " [shape=square];\n" : " [shape=circle];\n";
    }
    for (const auto& [u, v] : g.edges())
        dot += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    dot += "}\n";
    return dot;
}

std::filesystem::path enumeration_cache_file(const std::filesystem::path& dir,
                                             const std::string& pi_key) {
    std::string name = "enum-";
    for (char c : pi_key) name += c == ',' ? '_' : c;
    return dir / (name + ".json");
}

std::optional<std::vector<BoundaryGraph>> load_enumeration_cache(
    const std::filesystem::path& file, const std::string& pi_key) {
    std::ifstream in(file);
    if (!in) return std::nullopt;
    json j;
    try {
        in >> j;
        if (j.at("pi").get<std::string>() != pi_key) return std::nullopt;
        std::vector<BoundaryGraph> graphs;
        for (const auto& gj : j.at("graphs")) graphs.push_back(graph_from(gj, false));
        return graphs;
    } catch (const std::exception&) {
        return std::nullopt;  // stale or corrupt cache entries are ignored
    }
}

void store_enumeration_cache(const std::filesystem::path& file, const std::string& pi_key,
                             const std::vector<BoundaryGraph>& graphs) {
    json j;
    j["pi"] = pi_key;
    j["graphs"] = json::array();
    for (const auto& g : graphs) j["graphs"].push_back(graph_json(g));
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    out << j.dump() << '\n';
}

}  // namespace fk
