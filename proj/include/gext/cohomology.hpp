#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gext/clique_complex.hpp"
#include "gext/exec.hpp"
#include "gext/rational.hpp"

namespace gext {

// Matrix of d on basis k-forms: rows are (k+2)-cliques, columns
// (k+1)-cliques, both in canonical order. Entry (row, col) is (-1)^i when the
// column cell is the row cell with its i-th vertex removed.
struct CoboundaryMatrix
{
    struct Entry
    {
        std::size_t row;
        std::size_t col;
        int value;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    std::size_t degree = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Entry> entries; // row-major, each row's columns ascending

    std::vector<std::vector<Rational>> dense() const;

    // "rows cols nnz" header, then one "row col value" line per entry.
    std::string to_triplets() const;
};

// Needs levels k+1 and k+2; throws CapacityError otherwise.
CoboundaryMatrix coboundary_matrix(const CliqueComplex& cx, std::size_t k, Exec exec = Exec::Parallel);

using RationalMatrix = std::vector<std::vector<Rational>>;

// Exact rank over Q by Gauss-Jordan elimination.
std::size_t rational_rank(RationalMatrix m);

// Basis of the right null space {x : M x = 0}; `cols` is needed when M has
// no rows.
std::vector<std::vector<Rational>> kernel_basis(RationalMatrix m, std::size_t cols);

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b, std::size_t inner);

// b_0, ..., b_top of the clique complex, top = clique number - 1. The complex
// must reach one level beyond its clique number (CliqueComplex::full does).
std::vector<std::size_t> betti(const CliqueComplex& cx);

} // namespace gext
