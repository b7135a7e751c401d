#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gext/exec.hpp"
#include "gext/graph.hpp"

namespace gext {

// Strictly ascending tuple of pairwise adjacent vertices.
using Clique = std::vector<VertexId>;

/**
 * All k-cliques of a graph for 1 <= k <= max_card, each level sorted
 * lexicographically. Level k holds the cells on which (k-1)-forms live.
 *
 * Enumeration is by ordered extension: a clique only grows by common
 * neighbours larger than its last vertex, so every clique is produced exactly
 * once. The parallel build distributes seed vertices over threads and yields
 * the same level lists as the serial build.
 */
class CliqueComplex
{
  public:
    CliqueComplex(Graph g, std::size_t max_card, Exec exec = Exec::Parallel);

    // Enumerates until a level comes out empty, i.e. up to the clique
    // number plus one.
    static CliqueComplex full(Graph g, Exec exec = Exec::Parallel);

    const Graph& graph() const noexcept { return graph_; }
    std::size_t max_card() const noexcept { return levels_.size(); }

    // k-cliques, 1 <= k <= max_card. Throws CapacityError above the cap.
    const std::vector<Clique>& level(std::size_t k) const;
    std::size_t level_size(std::size_t k) const { return level(k).size(); }

    // Largest k with a nonempty level.
    std::size_t clique_number() const noexcept;

    // Position of `c` within level |c|. Absent when `c` is not a clique or its
    // cardinality exceeds the cap; DomainError when `c` is not strictly
    // ascending.
    std::optional<std::size_t> index_of(std::span<const VertexId> c) const;

    // Throws CapacityError naming `what` unless max_card >= required.
    void require(std::size_t required, const char* what) const;

  private:
    Graph graph_;
    std::vector<std::vector<Clique>> levels_; // levels_[k-1] = k-cliques
};

} // namespace gext
