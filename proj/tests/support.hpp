#pragma once

#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gext/cohomology.hpp"
#include "gext/form_io.hpp"
#include "gext/random_forms.hpp"

namespace test {

using namespace gext;

inline ComplexPtr make(Graph g, std::size_t cap)
{
    return std::make_shared<const CliqueComplex>(std::move(g), cap);
}

inline std::string data_path(const std::string& name)
{
    return std::string(GEXT_TEST_DATA) + "/" + name;
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline nlohmann::json read_json(const std::string& name)
{
    return nlohmann::json::parse(read_file(data_path(name)));
}

inline Form read_form(const std::string& name, const ComplexPtr& cx)
{
    return form_from_json(read_json(name), cx);
}

inline Graph random_graph(std::size_t n, unsigned percent, Rng& rng)
{
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (rng.chance(percent))
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

inline std::vector<std::pair<std::string, Graph>> small_corpus()
{
    return {{"K3", named::complete(3)},
            {"K4", named::complete(4)},
            {"C5", named::cycle(5)},
            {"P4", named::path(4)},
            {"octahedron", named::octahedron()},
            {"bowtie", parse_edge_list("a b\nb c\nc a\nc d\nd e\ne c\n")}};
}

// Random element of ker d in degree k: a random combination of a rational
// kernel basis of the coboundary matrix.
inline Form random_closed_form(const ComplexPtr& cx, std::size_t k, Rng& rng)
{
    const std::size_t cols = cx->level_size(k + 1);
    auto basis = kernel_basis(coboundary_matrix(*cx, k).dense(), cols);
    Form out(cx, k);
    for (const auto& vec : basis) {
        if (!rng.chance(70))
            continue;
        Rational c = rng.rational();
        for (std::size_t i = 0; i < cols; ++i)
            if (vec[i] != 0)
                out.add_coeff(i, c * vec[i]);
    }
    return out;
}

} // namespace test
