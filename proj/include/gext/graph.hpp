#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace gext {

using VertexId = std::uint32_t;

/**
 * Finite simple undirected graph with dense vertex ids 0..n-1.
 *
 * Every vertex carries a label; ids are assigned in first-appearance order at
 * ingestion and all canonical orderings downstream use ids, never labels.
 * Immutable once built.
 */
class Graph
{
  public:
    Graph() = default;

    // Builds from labels and id pairs. Duplicate pairs collapse; self-loops,
    // out-of-range ids and duplicate labels throw DomainError.
    Graph(std::vector<std::string> labels, const std::vector<std::pair<VertexId, VertexId>>& edges);

    // Unlabelled convenience: labels become "0", "1", ...
    static Graph from_edges(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges);

    std::size_t vertex_count() const noexcept { return labels_.size(); }
    std::size_t edge_count() const noexcept { return edge_set_.size(); }

    bool adjacent(VertexId u, VertexId v) const noexcept;

    // Strictly ascending neighbour list. Throws DomainError when v >= n.
    const std::vector<VertexId>& neighbors(VertexId v) const;
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }

    const std::string& label(VertexId v) const;
    std::optional<VertexId> find(std::string_view label) const;
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    // Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

  private:
    static std::uint64_t key(VertexId u, VertexId v) noexcept
    {
        if (u > v)
            std::swap(u, v);
        return (static_cast<std::uint64_t>(u) << 32) | v;
    }

    std::vector<std::string> labels_;
    std::unordered_map<std::string, VertexId> ids_;
    std::vector<std::vector<VertexId>> adjacency_;
    std::unordered_set<std::uint64_t> edge_set_;
};

// Edge-list text: one edge per line as two labels, a lone label declares a
// vertex, `#` lines are comments. Throws ParseError with the 1-based line.
Graph parse_edge_list(std::string_view text);

// Vertices declared first (preserving ids), then edges in canonical order.
std::string to_edge_list(const Graph& g);

// {"vertices": [...], "edges": [[a, b], ...]}
Graph parse_graph_json(std::string_view text);
std::string to_graph_json(const Graph& g);

// Catalogue used by selftest and the test suites.
namespace named {
Graph complete(std::size_t n);
Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph petersen();
Graph octahedron();
} // namespace named

} // namespace gext
