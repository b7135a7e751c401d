#include "gext/forms.hpp"

#include <algorithm>

#include "gext/errors.hpp"
#include "gext/permutation.hpp"

namespace gext {

namespace {

void check_arity(std::size_t degree, std::size_t size)
{
    if (size != degree + 1)
        throw DomainError("expected " + std::to_string(degree + 1) + " arguments, got " + std::to_string(size));
}

void check_same(const Form& a, const Form& b)
{
    if (a.complex_ptr() != b.complex_ptr())
        throw DomainError("forms live on different clique complexes");
    if (a.degree() != b.degree())
        throw DomainError("degree mismatch: " + std::to_string(a.degree()) + " vs " + std::to_string(b.degree()));
}

} // namespace

int sort_with_sign(std::vector<VertexId>& tuple)
{
    int sign = 1;
    for (std::size_t i = 1; i < tuple.size(); ++i) {
        for (std::size_t j = i; j > 0 && tuple[j - 1] >= tuple[j]; --j) {
            if (tuple[j - 1] == tuple[j])
                return 0;
            std::swap(tuple[j - 1], tuple[j]);
            sign = -sign;
        }
    }
    return sign;
}

Form::Form(ComplexPtr cx, std::size_t degree) : cx_(std::move(cx)), degree_(degree)
{
    if (!cx_)
        throw DomainError("form needs a clique complex");
    cx_->require(degree_ + 1, "form storage");
}

Rational Form::coeff(std::size_t index) const
{
    auto it = coeffs_.find(index);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void Form::set_coeff(std::size_t index, const Rational& value)
{
    if (index >= cells().size())
        throw DomainError("cell index out of range", std::to_string(index));
    if (value == 0)
        coeffs_.erase(index);
    else
        coeffs_[index] = value;
}

void Form::add_coeff(std::size_t index, const Rational& value)
{
    if (value == 0)
        return;
    set_coeff(index, coeff(index) + value);
}

void Form::set(std::span<const VertexId> tuple, const Rational& value)
{
    check_arity(degree_, tuple.size());
    std::vector<VertexId> sorted(tuple.begin(), tuple.end());
    int sign = sort_with_sign(sorted);
    auto idx = sign == 0 ? std::nullopt : cx_->index_of(sorted);
    if (!idx)
        throw DomainError("argument tuple is not an ordering of a clique");
    set_coeff(*idx, sign > 0 ? value : Rational(-value));
}

Rational Form::operator()(std::span<const VertexId> tuple) const
{
    check_arity(degree_, tuple.size());
    std::vector<VertexId> sorted(tuple.begin(), tuple.end());
    int sign = sort_with_sign(sorted);
    if (sign == 0)
        return 0;
    auto idx = cx_->index_of(sorted);
    if (!idx)
        return 0;
    Rational v = coeff(*idx);
    return sign > 0 ? v : Rational(-v);
}

Tensor::Tensor(ComplexPtr cx, std::size_t degree) : cx_(std::move(cx)), degree_(degree)
{
    if (!cx_)
        throw DomainError("tensor needs a clique complex");
    cx_->require(degree_ + 1, "tensor storage");
}

void Tensor::set(std::span<const VertexId> tuple, const Rational& value)
{
    check_arity(degree_, tuple.size());
    std::vector<VertexId> sorted(tuple.begin(), tuple.end());
    if (sort_with_sign(sorted) == 0 || !cx_->index_of(sorted))
        throw DomainError("tensor entry must sit on an ordering of a clique");
    std::vector<VertexId> key(tuple.begin(), tuple.end());
    if (value == 0)
        coeffs_.erase(key);
    else
        coeffs_[std::move(key)] = value;
}

Rational Tensor::operator()(std::span<const VertexId> tuple) const
{
    check_arity(degree_, tuple.size());
    auto it = coeffs_.find(std::vector<VertexId>(tuple.begin(), tuple.end()));
    return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational eval_form(const Form& alpha, std::span<const VertexId> tuple)
{
    return alpha(tuple);
}

Rational eval_tensor(const Tensor& t, std::span<const VertexId> tuple)
{
    return t(tuple);
}

Form chi(const ComplexPtr& cx, VertexId v)
{
    if (v >= cx->graph().vertex_count())
        throw DomainError("unknown vertex", std::to_string(v));
    Form f(cx, 0);
    f.set_coeff(v, 1); // level 1 is {0}, {1}, ... in id order
    return f;
}

Form constant(const ComplexPtr& cx, const Rational& c)
{
    Form f(cx, 0);
    for (std::size_t v = 0; v < cx->graph().vertex_count(); ++v)
        f.set_coeff(v, c);
    return f;
}

Tensor to_tensor(const Form& alpha)
{
    Tensor t(alpha.complex_ptr(), alpha.degree());
    const auto& perms = symmetric_group(alpha.degree() + 1);
    std::vector<VertexId> tuple(alpha.degree() + 1);
    for (const auto& [idx, value] : alpha.coeffs()) {
        const Clique& c = alpha.cell(idx);
        for (const auto& p : perms) {
            for (std::size_t i = 0; i < tuple.size(); ++i)
                tuple[i] = c[p[i]];
            t.set(tuple, p.sign > 0 ? value : Rational(-value));
        }
    }
    return t;
}

Form add(const Form& a, const Form& b)
{
    check_same(a, b);
    Form out = a;
    for (const auto& [idx, v] : b.coeffs())
        out.add_coeff(idx, v);
    return out;
}

Form subtract(const Form& a, const Form& b)
{
    check_same(a, b);
    Form out = a;
    for (const auto& [idx, v] : b.coeffs())
        out.add_coeff(idx, -v);
    return out;
}

Form scale(const Rational& c, const Form& a)
{
    Form out(a.complex_ptr(), a.degree());
    if (c == 0)
        return out;
    for (const auto& [idx, v] : a.coeffs())
        out.set_coeff(idx, c * v);
    return out;
}

Form basis_form(const ComplexPtr& cx, std::size_t degree, std::size_t index)
{
    Form f(cx, degree);
    f.set_coeff(index, 1);
    return f;
}

} // namespace gext
