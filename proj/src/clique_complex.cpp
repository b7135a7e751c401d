#include "gext/clique_complex.hpp"

#include <algorithm>
#include <iterator>

#include "gext/errors.hpp"

namespace gext {

namespace {

// Depth-first ordered extension from one seed; appends every clique with
// smallest vertex `seed` and cardinality <= cap into per-level buckets.
void extend_from(const Graph& g, VertexId seed, std::size_t cap, std::vector<std::vector<Clique>>& out)
{
    Clique current{seed};
    std::vector<VertexId> candidates;
    for (VertexId u : g.neighbors(seed))
        if (u > seed)
            candidates.push_back(u);

    auto recurse = [&](auto&& self, const std::vector<VertexId>& cand) -> void {
        out[current.size() - 1].push_back(current);
        if (current.size() == cap)
            return;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            VertexId u = cand[i];
            std::vector<VertexId> next;
            const auto& nu = g.neighbors(u);
            // candidates after u that are also adjacent to u
            std::set_intersection(cand.begin() + static_cast<std::ptrdiff_t>(i) + 1, cand.end(), nu.begin(),
                                  nu.end(), std::back_inserter(next));
            current.push_back(u);
            self(self, next);
            current.pop_back();
        }
    };
    recurse(recurse, candidates);
}

std::vector<std::vector<Clique>> enumerate(const Graph& g, std::size_t cap, Exec exec)
{
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<Clique>> levels(cap);
    if (cap == 0 || n == 0)
        return levels;

    // Per-seed buckets, concatenated in seed order below.
    std::vector<std::vector<std::vector<Clique>>> per_seed(n, std::vector<std::vector<Clique>>(cap));
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t s = 0; s < static_cast<std::ptrdiff_t>(n); ++s)
            extend_from(g, static_cast<VertexId>(s), cap, per_seed[s]);
    } else {
        for (std::size_t s = 0; s < n; ++s)
            extend_from(g, static_cast<VertexId>(s), cap, per_seed[s]);
    }
    for (std::size_t k = 0; k < cap; ++k) {
        for (auto& buckets : per_seed)
            std::move(buckets[k].begin(), buckets[k].end(), std::back_inserter(levels[k]));
        // no-op for the DFS order above; keeps the level order independent of traversal
        std::sort(levels[k].begin(), levels[k].end());
    }
    return levels;
}

} // namespace

CliqueComplex::CliqueComplex(Graph g, std::size_t max_card, Exec exec) : graph_(std::move(g))
{
    if (max_card == 0)
        throw DomainError("max_card must be at least 1");
    levels_ = enumerate(graph_, max_card, exec);
}

CliqueComplex CliqueComplex::full(Graph g, Exec exec)
{
    // clique number is bounded by max degree + 1
    std::size_t bound = 1;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        bound = std::max(bound, g.degree(v) + 1);
    CliqueComplex cx(std::move(g), bound + 1, exec);
    cx.levels_.resize(cx.clique_number() + 1);
    return cx;
}

const std::vector<Clique>& CliqueComplex::level(std::size_t k) const
{
    if (k == 0 || k > levels_.size())
        throw CapacityError("clique level " + std::to_string(k), k, levels_.size());
    return levels_[k - 1];
}

std::size_t CliqueComplex::clique_number() const noexcept
{
    std::size_t k = 0;
    while (k < levels_.size() && !levels_[k].empty())
        ++k;
    return k;
}

std::optional<std::size_t> CliqueComplex::index_of(std::span<const VertexId> c) const
{
    if (!std::is_sorted(c.begin(), c.end()) || std::adjacent_find(c.begin(), c.end()) != c.end())
        throw DomainError("clique must be given in strictly ascending order");
    if (c.empty() || c.size() > levels_.size())
        return std::nullopt;
    const auto& lv = levels_[c.size() - 1];
    auto it = std::lower_bound(lv.begin(), lv.end(), c, [](const Clique& a, std::span<const VertexId> b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    if (it == lv.end() || !std::equal(it->begin(), it->end(), c.begin(), c.end()))
        return std::nullopt;
    return static_cast<std::size_t>(it - lv.begin());
}

void CliqueComplex::require(std::size_t required, const char* what) const
{
    if (levels_.size() < required)
        throw CapacityError(what, required, levels_.size());
}

} // namespace gext
