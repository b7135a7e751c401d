#include <doctest.h>

#include <algorithm>

#include "gext/cohomology.hpp"
#include "gext/errors.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace gext;

namespace {

RationalMatrix to_rational(const std::vector<std::vector<mpz_class>>& m)
{
    RationalMatrix out;
    for (const auto& row : m)
        out.emplace_back(row.begin(), row.end());
    return out;
}

} // namespace

TEST_CASE("coboundary matrix examples")
{
    CliqueComplex edge(named::complete(2), 2);
    auto d0 = coboundary_matrix(edge, 0);
    CHECK(d0.rows == 1);
    CHECK(d0.cols == 2);
    CHECK(d0.dense() == RationalMatrix{{-1, 1}});

    CliqueComplex tri(named::complete(3), 3);
    CHECK(coboundary_matrix(tri, 1).dense() == RationalMatrix{{1, -1, 1}});
    CHECK(rational_rank(coboundary_matrix(tri, 0).dense()) == 2);

    CliqueComplex k4(named::complete(4), 4);
    auto prod = multiply(coboundary_matrix(k4, 1).dense(), coboundary_matrix(k4, 0).dense(), 6);
    for (const auto& row : prod)
        for (const auto& x : row)
            CHECK(x == 0);

    CHECK_THROWS_AS(coboundary_matrix(tri, 2), CapacityError);
    CHECK(coboundary_matrix(edge, 0).to_triplets() == "1 2 2\n0 0 -1\n0 1 1\n");
}

TEST_CASE("coboundary matrices match the brute-force construction")
{
    for (const auto& [name, g] : test::small_corpus()) {
        CAPTURE(name);
        CliqueComplex cx = CliqueComplex::full(g);
        for (std::size_t k = 0; k + 2 <= cx.max_card(); ++k) {
            CHECK(coboundary_matrix(cx, k, Exec::Serial).dense() == to_rational(oracle::coboundary(g, k)));
            CHECK(coboundary_matrix(cx, k, Exec::Parallel).entries == coboundary_matrix(cx, k, Exec::Serial).entries);
        }
    }
}

TEST_CASE("rational rank")
{
    CHECK(rational_rank({}) == 0);
    CHECK(rational_rank({{0, 0}, {0, 0}}) == 0);
    CHECK(rational_rank({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 3);
    CHECK(rational_rank({{Rational(1, 2), 1}, {1, 2}}) == 1);

    Rng rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        auto rows = static_cast<std::size_t>(rng.uniform(1, 7)), cols = static_cast<std::size_t>(rng.uniform(1, 7));
        std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
        for (auto& row : m)
            for (auto& x : row)
                x = rng.chance(40) ? rng.uniform(-3, 3) : 0;
        // duplicate a row sometimes to force deficiency
        if (rows > 1 && rng.chance(50))
            m[rows - 1] = m[0];
        CHECK(rational_rank(to_rational(m)) == oracle::bareiss_rank(m));
    }
}

TEST_CASE("kernel basis")
{
    RationalMatrix m{{1, 1, 0}, {0, 0, 1}};
    auto basis = kernel_basis(m, 3);
    REQUIRE(basis.size() == 1);
    auto prod = multiply(m, {{basis[0][0]}, {basis[0][1]}, {basis[0][2]}}, 3);
    CHECK(prod[0][0] == 0);
    CHECK(prod[1][0] == 0);
    CHECK(kernel_basis({}, 4).size() == 4);
}

TEST_CASE("Betti numbers")
{
    struct Golden
    {
        const char* name;
        Graph graph;
        std::vector<std::size_t> betti;
    };
    const std::vector<Golden> goldens{
        {"C4", named::cycle(4), {1, 1}},
        {"K5", named::complete(5), {1, 0, 0, 0, 0}},
        {"octahedron", named::octahedron(), {1, 0, 1}},
        {"Petersen", named::petersen(), {1, 6}},
        {"two triangles", parse_edge_list("a b\nb c\nc a\nx y\ny z\nz x\n"), {2, 0, 0}},
        {"isolated", parse_edge_list("a\nb\n"), {2}},
    };
    for (const auto& g : goldens) {
        CAPTURE(g.name);
        CHECK(oracle::betti(g.graph) == g.betti);
        CHECK(betti(CliqueComplex::full(g.graph)) == g.betti);
    }
    CHECK(betti(CliqueComplex::full(Graph{})).empty());
}

TEST_CASE("cohomology invariants on random graphs")
{
    Rng rng(22);
    for (int trial = 0; trial < 40; ++trial) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 8));
        Graph g = test::random_graph(n, static_cast<unsigned>(rng.uniform(15, 85)), rng);
        CliqueComplex cx = CliqueComplex::full(g);
        auto b = betti(cx);

        CHECK(b == oracle::betti(g));
        CHECK(b[0] == oracle::components(g));

        long chi_cells = 0, chi_betti = 0;
        for (std::size_t k = 0; k < b.size(); ++k) {
            chi_cells += (k % 2 ? -1 : 1) * static_cast<long>(cx.level_size(k + 1));
            chi_betti += (k % 2 ? -1 : 1) * static_cast<long>(b[k]);
        }
        CHECK(chi_cells == chi_betti);

        for (std::size_t k = 0; k + 3 <= cx.max_card(); ++k) {
            auto prod = multiply(coboundary_matrix(cx, k + 1).dense(), coboundary_matrix(cx, k).dense(),
                                 cx.level_size(k + 2));
            for (const auto& row : prod)
                CHECK(std::all_of(row.begin(), row.end(), [](const Rational& x) { return x == 0; }));
        }

        // relabel by reversing ids
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (auto [u, v] : g.edges())
            edges.emplace_back(static_cast<VertexId>(n - 1 - u), static_cast<VertexId>(n - 1 - v));
        CHECK(betti(CliqueComplex::full(Graph::from_edges(n, edges))) == b);
    }
}
