#include "gext/calculus.hpp"

#include <algorithm>
#include <iterator>
#include <optional>

#include "gext/errors.hpp"
#include "gext/permutation.hpp"
#include "parallel.hpp"

namespace gext {

namespace {

void check_same_complex(const ComplexPtr& a, const ComplexPtr& b)
{
    if (a != b)
        throw DomainError("operands live on different clique complexes");
}

// Collects per-cell values computed independently into a sparse form.
Form gather(const ComplexPtr& cx, std::size_t degree, const std::vector<Rational>& values)
{
    Form out(cx, degree);
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] != 0)
            out.set_coeff(i, values[i]);
    return out;
}

template <class A, class B>
Tensor tensor_product_impl(const A& a, const B& b, Exec exec)
{
    check_same_complex(a.complex_ptr(), b.complex_ptr());
    const std::size_t r = a.degree(), s = b.degree(), m = r + s + 1;
    const auto& cx = a.complex_ptr();
    cx->require(m, "tensor product");
    const auto& cells = cx->level(m);
    const auto& perms = symmetric_group(m);

    using Entries = std::vector<std::pair<std::vector<VertexId>, Rational>>;
    std::vector<Entries> per_cell(cells.size());
    detail::for_each_index(cells.size(), exec, [&](std::size_t ci) {
        std::vector<VertexId> tuple(m);
        for (const auto& p : perms) {
            for (std::size_t i = 0; i < m; ++i)
                tuple[i] = cells[ci][p[i]];
            std::span<const VertexId> view(tuple);
            Rational left = a(view.first(r + 1));
            if (left == 0)
                continue;
            Rational value = left * b(view.subspan(r, s + 1));
            if (value != 0)
                per_cell[ci].emplace_back(tuple, std::move(value));
        }
    });

    Tensor out(cx, r + s);
    for (auto& entries : per_cell)
        for (auto& [tuple, value] : entries)
            out.set(tuple, value);
    return out;
}

// sum over sigma of sgn(sigma) a(c_sigma(0..r)) b(c_sigma(r..r+s)), without
// the 1/(r+s+1)! factor.
Rational wedge_sum(const Form& a, const Form& b, std::span<const VertexId> cell)
{
    const std::size_t r = a.degree(), s = b.degree(), m = cell.size();
    std::vector<VertexId> tuple(m);
    Rational acc = 0;
    for (const auto& p : symmetric_group(m)) {
        for (std::size_t i = 0; i < m; ++i)
            tuple[i] = cell[p[i]];
        std::span<const VertexId> view(tuple);
        Rational left = a(view.first(r + 1));
        if (left == 0)
            continue;
        Rational right = b(view.subspan(r, s + 1));
        if (right == 0)
            continue;
        if (p.sign > 0)
            acc += left * right;
        else
            acc -= left * right;
    }
    return acc;
}

} // namespace

Tensor tensor_product(const Tensor& a, const Tensor& b, Exec exec)
{
    return tensor_product_impl(a, b, exec);
}

Tensor tensor_product(const Form& a, const Form& b, Exec exec)
{
    return tensor_product_impl(a, b, exec);
}

Form skew_symmetrize(const Tensor& t, Exec exec)
{
    const std::size_t m = t.degree() + 1;
    const auto& cx = t.complex_ptr();
    const auto& cells = cx->level(m);
    const auto& perms = symmetric_group(m);
    const Rational norm = 1 / factorial(static_cast<unsigned>(m));

    std::vector<Rational> values(cells.size());
    detail::for_each_index(cells.size(), exec, [&](std::size_t ci) {
        std::vector<VertexId> tuple(m);
        Rational acc = 0;
        for (const auto& p : perms) {
            for (std::size_t i = 0; i < m; ++i)
                tuple[i] = cells[ci][p[i]];
            Rational v = t(tuple);
            if (p.sign > 0)
                acc += v;
            else
                acc -= v;
        }
        values[ci] = acc * norm;
    });
    return gather(cx, t.degree(), values);
}

Form wedge(const Form& a, const Form& b, Exec exec)
{
    check_same_complex(a.complex_ptr(), b.complex_ptr());
    const std::size_t m = a.degree() + b.degree() + 1;
    const auto& cx = a.complex_ptr();
    cx->require(m, "wedge product");
    const auto& cells = cx->level(m);
    const Rational norm = 1 / factorial(static_cast<unsigned>(m));
    symmetric_group(m); // build the table outside the parallel region

    std::vector<Rational> values(cells.size());
    if (!a.is_zero() && !b.is_zero()) {
        detail::for_each_index(cells.size(), exec,
                               [&](std::size_t ci) { values[ci] = wedge_sum(a, b, cells[ci]) * norm; });
    }
    return gather(cx, m - 1, values);
}

Rational wedge_at(const Form& a, const Form& b, std::span<const VertexId> tuple)
{
    check_same_complex(a.complex_ptr(), b.complex_ptr());
    const std::size_t m = a.degree() + b.degree() + 1;
    if (tuple.size() != m)
        throw DomainError("expected " + std::to_string(m) + " arguments, got " + std::to_string(tuple.size()));
    return wedge_sum(a, b, tuple) / factorial(static_cast<unsigned>(m));
}

Form wedge_chain(std::span<const Form> factors, Exec exec)
{
    if (factors.empty())
        throw DomainError("wedge_chain needs at least one factor");
    Form acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i)
        acc = wedge(acc, factors[i], exec);
    return acc;
}

Form exterior_derivative(const Form& a, Exec exec)
{
    const std::size_t m = a.degree() + 2;
    const auto& cx = a.complex_ptr();
    cx->require(m, "exterior derivative");
    const auto& cells = cx->level(m);

    std::vector<Rational> values(cells.size());
    if (!a.is_zero()) {
        detail::for_each_index(cells.size(), exec, [&](std::size_t ci) {
            const Clique& c = cells[ci];
            std::vector<VertexId> face(m - 1);
            Rational acc = 0;
            for (std::size_t omit = 0; omit < m; ++omit) {
                std::copy(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(omit), face.begin());
                std::copy(c.begin() + static_cast<std::ptrdiff_t>(omit) + 1, c.end(),
                          face.begin() + static_cast<std::ptrdiff_t>(omit));
                // faces of a clique are cliques, so the lookup always succeeds
                Rational v = a.coeff(*cx->index_of(face));
                if (omit % 2 == 0)
                    acc += v;
                else
                    acc -= v;
            }
            values[ci] = std::move(acc);
        });
    }
    return gather(cx, a.degree() + 1, values);
}

Form f_wedge_fast(const Form& f, const Form& a)
{
    check_same_complex(f.complex_ptr(), a.complex_ptr());
    if (f.degree() != 0)
        throw DomainError("f_wedge_fast needs a 0-form as first factor");
    const Rational inv = Rational(1) / static_cast<long>(a.degree() + 1);
    Form out(a.complex_ptr(), a.degree());
    for (const auto& [idx, value] : a.coeffs()) {
        Rational sum = 0;
        for (VertexId v : a.cell(idx))
            sum += f.coeff(v);
        out.set_coeff(idx, sum * inv * value);
    }
    return out;
}

Form dchi_chain(const ComplexPtr& cx, std::span<const VertexId> vertices)
{
    const std::size_t k = vertices.size();
    Form out(cx, k);
    if (k == 0)
        return constant(cx, 1);

    const Graph& g = cx->graph();
    for (VertexId v : vertices)
        if (v >= g.vertex_count())
            throw DomainError("unknown vertex", std::to_string(v));
    std::vector<VertexId> sorted(vertices.begin(), vertices.end());
    if (sort_with_sign(sorted) == 0)
        return out;

    // candidate x_tau(0): common neighbours of all v_i
    std::vector<VertexId> common = g.neighbors(vertices[0]);
    for (std::size_t i = 1; i < k && !common.empty(); ++i) {
        const auto& nb = g.neighbors(vertices[i]);
        std::vector<VertexId> next;
        std::set_intersection(common.begin(), common.end(), nb.begin(), nb.end(), std::back_inserter(next));
        common = std::move(next);
    }

    const Rational inv_fact = 1 / factorial(static_cast<unsigned>(k));
    for (VertexId x : common) {
        std::vector<VertexId> cell = sorted;
        cell.insert(std::upper_bound(cell.begin(), cell.end(), x), x);
        auto idx = cx->index_of(cell);
        if (!idx)
            continue; // the v_i are not pairwise adjacent
        // tau(i) = position of v_i in the cell, tau(0) = position of x
        std::vector<int> tau(k + 1);
        auto pos = [&](VertexId v) {
            return static_cast<int>(std::lower_bound(cell.begin(), cell.end(), v) - cell.begin());
        };
        tau[0] = pos(x);
        for (std::size_t i = 0; i < k; ++i)
            tau[i + 1] = pos(vertices[i]);
        out.set_coeff(*idx, inversion_sign(tau) * inv_fact);
    }
    return out;
}

Form dchi_chain_by_wedges(const ComplexPtr& cx, std::span<const VertexId> vertices, Exec exec)
{
    if (vertices.empty())
        return constant(cx, 1);
    std::vector<Form> factors;
    for (VertexId v : vertices)
        factors.push_back(exterior_derivative(chi(cx, v), exec));
    return wedge_chain(factors, exec);
}

Form coefficient_form(const Form& a, std::span<const VertexId> vertices)
{
    if (vertices.size() != a.degree())
        throw DomainError("coefficient form of a " + std::to_string(a.degree()) + "-form needs " +
                          std::to_string(a.degree()) + " vertices");
    const auto& cx = a.complex_ptr();
    Form out(cx, 0);
    std::vector<VertexId> tuple(vertices.size() + 1);
    std::copy(vertices.begin(), vertices.end(), tuple.begin() + 1);
    for (VertexId x = 0; x < cx->graph().vertex_count(); ++x) {
        tuple[0] = x;
        out.set_coeff(x, a(tuple));
    }
    return out;
}

std::set<std::vector<VertexId>> expansion_tuples(const Form& a)
{
    const std::size_t k = a.degree();
    std::set<std::vector<VertexId>> tuples;
    const auto& perms = symmetric_group(k);
    std::vector<VertexId> rest(k), tuple(k);
    for (const auto& [idx, value] : a.coeffs()) {
        const Clique& c = a.cell(idx);
        for (std::size_t drop = 0; drop <= k; ++drop) {
            std::size_t j = 0;
            for (std::size_t i = 0; i <= k; ++i)
                if (i != drop)
                    rest[j++] = c[i];
            for (const auto& p : perms) {
                for (std::size_t i = 0; i < k; ++i)
                    tuple[i] = rest[p[i]];
                tuples.insert(tuple);
            }
        }
    }
    return tuples;
}

Form expand_reconstruct(const Form& a, Exec exec)
{
    if (a.degree() == 0)
        throw DomainError("expansion needs a form of degree >= 1");
    const auto& cx = a.complex_ptr();
    Form sum(cx, a.degree());
    for (const auto& v : expansion_tuples(a))
        sum = sum + wedge(coefficient_form(a, v), dchi_chain(cx, v), exec);
    return sum;
}

Form cutoff_rho(const ComplexPtr& cx, std::span<const VertexId> c)
{
    std::vector<VertexId> sorted(c.begin(), c.end());
    if (sorted.empty() || sort_with_sign(sorted) == 0 || !cx->index_of(sorted))
        throw DomainError("cut-off support must be a clique of the complex");
    Form rho(cx, 0);
    for (VertexId v : sorted)
        rho.set_coeff(v, 1);
    return rho;
}

bool is_closed(const Form& a, Exec exec)
{
    return exterior_derivative(a, exec).is_zero();
}

} // namespace gext
