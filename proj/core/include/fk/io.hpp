#ifndef FK_IO_HPP
#define FK_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fk/graph.hpp"

namespace fk {

/// Graph wire format: {"n": int, "edges": [[u,v], ...]}; the boundary is
/// derived from the degrees. Edges are emitted sorted.
std::string graph_to_json(const BoundaryGraph& g);

/// Parses and validates; throws std::invalid_argument on malformed input
/// or invariant violations. Trees are accepted when allow_tree is set.
BoundaryGraph graph_from_json(const std::string& text, bool allow_tree = false);

BoundaryGraph load_graph(const std::filesystem::path& file, bool allow_tree = false);
void save_graph(const BoundaryGraph& g, const std::filesystem::path& file);

/// DOT export; boundary vertices are drawn as squares.
std::string graph_to_dot(const BoundaryGraph& g);

/// Enumeration cache (FK_CACHE_DIR): one JSON file per degree sequence.
std::filesystem::path enumeration_cache_file(const std::filesystem::path& dir,
                                             const std::string& pi_key);
std::optional<std::vector<BoundaryGraph>> load_enumeration_cache(
    const std::filesystem::path& file, const std::string& pi_key);
void store_enumeration_cache(const std::filesystem::path& file, const std::string& pi_key,
                             const std::vector<BoundaryGraph>& graphs);

}  // namespace fk

#endif
