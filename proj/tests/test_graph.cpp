#include <doctest.h>

#include "gext/errors.hpp"
#include "gext/graph.hpp"
#include "gext/random_forms.hpp"

using namespace gext;

namespace {

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

TEST_CASE("edge list parsing")
{
    SUBCASE("triangle")
    {
        Graph g = parse_edge_list("a b\nb c\nc a\n");
        CHECK(g.vertex_count() == 3);
        CHECK(g.edge_count() == 3);
        CHECK(g.label(0) == "a");
        CHECK(g.label(2) == "c");
    }
    SUBCASE("duplicates and reversed duplicates collapse")
    {
        Graph g = parse_edge_list("a b\nb a\na b\n");
        CHECK(g.vertex_count() == 2);
        CHECK(g.edge_count() == 1);
    }
    SUBCASE("comments, blank lines and isolated vertices")
    {
        Graph g = parse_edge_list("# header\n\nz\n  a   b \n\t# indented comment\n");
        CHECK(g.vertex_count() == 3);
        CHECK(*g.find("z") == 0);
        CHECK(g.neighbors(0).empty());
        CHECK(g.edge_count() == 1);
    }
    SUBCASE("self-loop is rejected")
    {
        CHECK_THROWS_AS(parse_edge_list("a a\n"), ParseError);
    }
    SUBCASE("malformed line reports its number")
    {
        try {
            parse_edge_list("a b\nb c d\n");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
    }
}

TEST_CASE("neighbors")
{
    Graph tri = parse_edge_list("a b\nb c\nc a\n");
    CHECK(tri.neighbors(*tri.find("a")) == std::vector<VertexId>{1, 2});

    Graph path = parse_edge_list("a b\nb c\n");
    CHECK(path.neighbors(*path.find("b")) == std::vector<VertexId>{0, 2});
    CHECK(path.degree(1) == 2);

    Graph iso = parse_edge_list("x\n");
    CHECK(iso.neighbors(0).empty());
    CHECK_THROWS_AS(iso.neighbors(1), DomainError);
}

TEST_CASE("graph JSON")
{
    Graph g = parse_edge_list("c\nb a\nc b\n");
    CHECK(to_graph_json(g) == R"({"edges":[["c","b"],["b","a"]],"vertices":["c","b","a"]})");

    Graph back = parse_graph_json(to_graph_json(g));
    CHECK(back.labels() == g.labels());
    CHECK(back.edges() == g.edges());

    CHECK_THROWS_AS(parse_graph_json(R"({"vertices":["a"],"edges":[["a","a"]]})"), DomainError);
    CHECK_THROWS_AS(parse_graph_json(R"({"vertices":["a"],"edges":[["a","q"]]})"), DomainError);
    CHECK_THROWS_AS(parse_graph_json(R"({"vertices":["a","a"]})"), DomainError);
    CHECK_THROWS_AS(parse_graph_json("not json"), ParseError);
}

TEST_CASE("adjacency is symmetric and irreflexive; serialization round-trips ids")
{
    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(static_cast<std::size_t>(rng.uniform(1, 9)), 45, rng);
        for (VertexId u = 0; u < g.vertex_count(); ++u) {
            CHECK_FALSE(g.adjacent(u, u));
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                CHECK(g.adjacent(u, v) == g.adjacent(v, u));
        }
        Graph again = parse_edge_list(to_edge_list(g));
        CHECK(again.labels() == g.labels());
        CHECK(again.edges() == g.edges());
    }
}

TEST_CASE("named graphs")
{
    CHECK(named::complete(5).edge_count() == 10);
    CHECK(named::cycle(6).edge_count() == 6);
    Graph p = named::petersen();
    CHECK(p.edge_count() == 15);
    for (VertexId v = 0; v < 10; ++v)
        CHECK(p.degree(v) == 3);
    Graph o = named::octahedron();
    CHECK(o.edge_count() == 12);
    for (VertexId v = 0; v < 6; ++v)
        CHECK(o.degree(v) == 4);
}
