#include "gext/cohomology.hpp"

#include <algorithm>

#include "gext/errors.hpp"
#include "parallel.hpp"

namespace gext {

std::vector<std::vector<Rational>> CoboundaryMatrix::dense() const
{
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
    for (const auto& e : entries)
        m[e.row][e.col] = e.value;
    return m;
}

std::string CoboundaryMatrix::to_triplets() const
{
    std::string out = std::to_string(rows) + " " + std::to_string(cols) + " " + std::to_string(entries.size()) + "\n";
    for (const auto& e : entries)
        out += std::to_string(e.row) + " " + std::to_string(e.col) + " " + std::to_string(e.value) + "\n";
    return out;
}

CoboundaryMatrix coboundary_matrix(const CliqueComplex& cx, std::size_t k, Exec exec)
{
    cx.require(k + 2, "coboundary matrix");
    const auto& row_cells = cx.level(k + 2);
    CoboundaryMatrix mat;
    mat.degree = k;
    mat.rows = row_cells.size();
    mat.cols = cx.level_size(k + 1);

    std::vector<std::vector<CoboundaryMatrix::Entry>> per_row(mat.rows);
    detail::for_each_index(mat.rows, exec, [&](std::size_t r) {
        const Clique& c = row_cells[r];
        std::vector<VertexId> face(c.size() - 1);
        for (std::size_t omit = 0; omit < c.size(); ++omit) {
            std::size_t j = 0;
            for (std::size_t i = 0; i < c.size(); ++i)
                if (i != omit)
                    face[j++] = c[i];
            per_row[r].push_back({r, *cx.index_of(face), omit % 2 == 0 ? 1 : -1});
        }
        std::sort(per_row[r].begin(), per_row[r].end(),
                  [](const auto& a, const auto& b) { return a.col < b.col; });
    });
    for (auto& row : per_row)
        mat.entries.insert(mat.entries.end(), row.begin(), row.end());
    return mat;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m)
{
    std::vector<std::size_t> pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[r]);
        const Rational inv = 1 / m[r][c];
        for (auto& x : m[r])
            x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t rational_rank(RationalMatrix m)
{
    return rref(m).size();
}

std::vector<std::vector<Rational>> kernel_basis(RationalMatrix m, std::size_t cols)
{
    for (const auto& row : m)
        if (row.size() != cols)
            throw DomainError("ragged matrix");
    auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots)
        is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Rational> x(cols);
        x[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            x[pivots[r]] = -m[r][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b, std::size_t inner)
{
    const std::size_t cols = b.empty() ? 0 : b[0].size();
    if (b.size() != inner)
        throw DomainError("inner dimensions disagree");
    RationalMatrix out(a.size(), std::vector<Rational>(cols));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < cols; ++j)
                    out[i][j] += a[i][k] * b[k][j];
    return out;
}

std::vector<std::size_t> betti(const CliqueComplex& cx)
{
    const std::size_t top = cx.clique_number();
    if (top == 0)
        return {};
    cx.require(top + 1, "betti numbers");

    // ranks[k] = rank of d on k-forms, k = 0..top-1 (d on top-degree forms is
    // the empty map to (top+2)-cliques and has rank 0)
    std::vector<std::size_t> ranks(top, 0);
    for (std::size_t k = 0; k + 1 < top; ++k)
        ranks[k] = rational_rank(coboundary_matrix(cx, k).dense());

    std::vector<std::size_t> b(top);
    for (std::size_t k = 0; k < top; ++k) {
        std::size_t kernel = cx.level_size(k + 1) - ranks[k];
        b[k] = kernel - (k == 0 ? 0 : ranks[k - 1]);
    }
    return b;
}

} // namespace gext
