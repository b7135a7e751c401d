#include <doctest.h>

#include <algorithm>

#include "gext/clique_complex.hpp"
#include "gext/errors.hpp"
#include "gext/random_forms.hpp"
#include "oracles.hpp"

using namespace gext;

namespace {

std::vector<std::size_t> sizes(const CliqueComplex& cx)
{
    std::vector<std::size_t> out;
    for (std::size_t k = 1; k <= cx.max_card(); ++k)
        out.push_back(cx.level_size(k));
    return out;
}

Graph random_graph(std::size_t n, unsigned percent, Rng& rng)
{
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (rng.chance(percent))
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

} // namespace

TEST_CASE("level sizes")
{
    CHECK(sizes(CliqueComplex(named::complete(4), 4)) == std::vector<std::size_t>{4, 6, 4, 1});
    CHECK(sizes(CliqueComplex(named::cycle(4), 3)) == std::vector<std::size_t>{4, 4, 0});

    // Petersen is triangle-free: confirmed against every vertex triple
    Graph p = named::petersen();
    CHECK(oracle::brute_cliques(p, 3).empty());
    CHECK(sizes(CliqueComplex(p, 3)) == std::vector<std::size_t>{10, 15, 0});
}

TEST_CASE("full complex stops one level above the clique number")
{
    CliqueComplex k5 = CliqueComplex::full(named::complete(5));
    CHECK(k5.clique_number() == 5);
    CHECK(k5.max_card() == 6);
    CHECK(k5.level_size(6) == 0);

    CliqueComplex oct = CliqueComplex::full(named::octahedron());
    CHECK(oct.clique_number() == 3);
    CHECK(sizes(oct) == std::vector<std::size_t>{6, 12, 8, 0});

    CliqueComplex empty = CliqueComplex::full(Graph{});
    CHECK(empty.clique_number() == 0);
}

TEST_CASE("index_of")
{
    CliqueComplex k3(named::complete(3), 3);
    CHECK(k3.index_of(std::vector<VertexId>{0, 1, 2}) == 0);

    CliqueComplex path(named::path(3), 3);
    CHECK_FALSE(path.index_of(std::vector<VertexId>{0, 2}).has_value());
    CHECK(path.index_of(std::vector<VertexId>{1, 2}) == 1);
    CHECK_THROWS_AS(path.index_of(std::vector<VertexId>{1, 0}), DomainError);
    CHECK_THROWS_AS(path.index_of(std::vector<VertexId>{1, 1}), DomainError);

    CHECK_THROWS_AS(path.level(4), CapacityError);
    CHECK_THROWS_AS(CliqueComplex(named::path(3), 0), DomainError);
}

TEST_CASE("ordered extension matches brute force on small graphs")
{
    Rng rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const auto n = static_cast<std::size_t>(rng.uniform(0, 8));
        Graph g = random_graph(n, static_cast<unsigned>(rng.uniform(20, 90)), rng);
        CliqueComplex serial(g, n + 1, Exec::Serial);
        CliqueComplex parallel(g, n + 1, Exec::Parallel);
        for (std::size_t k = 1; k <= n + 1; ++k) {
            CHECK(serial.level(k) == oracle::brute_cliques(g, k));
            CHECK(parallel.level(k) == serial.level(k));
        }
        // downward closure
        for (std::size_t k = 2; k <= n; ++k)
            for (const auto& c : serial.level(k))
                for (std::size_t drop = 0; drop < k; ++drop) {
                    Clique face;
                    for (std::size_t i = 0; i < k; ++i)
                        if (i != drop)
                            face.push_back(c[i]);
                    CHECK(serial.index_of(face).has_value());
                }
    }
}
