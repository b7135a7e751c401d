#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gext/graph.hpp"

namespace gext {

struct SelftestRow
{
    std::string check;
    std::string graph;
    std::size_t cases = 0;
    bool pass = true;
    std::string note; // first failure, if any
};

struct SelftestReport
{
    std::uint64_t seed = 0;
    std::vector<SelftestRow> rows;

    bool pass() const;
    nlohmann::json to_json() const;
    std::string table() const;
};

// The built-in corpus: K3, K4, K5, C4, C5, C6, Petersen, octahedron.
std::vector<std::pair<std::string, Graph>> selftest_corpus();

// Runs the identity suite (d^2 = 0, Leibniz, anticommutativity, the 0-form
// wedge shortcut, dchi chains, expansion, cut-off, uniqueness audit, Betti /
// Euler) on every corpus graph. Deterministic in `seed`.
SelftestReport run_selftest(std::uint64_t seed, std::size_t trials = 10);

} // namespace gext
