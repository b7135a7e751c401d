#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "gext/clique_complex.hpp"
#include "gext/rational.hpp"

namespace gext {

using ComplexPtr = std::shared_ptr<const CliqueComplex>;

/**
 * Alternating k-form on a clique complex.
 *
 * Stored sparsely on canonical (ascending) (k+1)-cliques, keyed by the
 * clique's index within its level, so iteration order is canonical order.
 * Values at other orderings are recovered with the sorting sign; tuples with
 * repeated vertices or whose vertex set is not a clique evaluate to zero.
 * Zero coefficients are never stored.
 */
class Form
{
  public:
    using Coeffs = std::map<std::size_t, Rational>;

    // Zero form of the given degree. Throws CapacityError if the complex does
    // not hold (degree+1)-cliques.
    Form(ComplexPtr cx, std::size_t degree);

    std::size_t degree() const noexcept { return degree_; }
    const CliqueComplex& complex() const noexcept { return *cx_; }
    const ComplexPtr& complex_ptr() const noexcept { return cx_; }

    const Coeffs& coeffs() const noexcept { return coeffs_; }
    const std::vector<Clique>& cells() const { return cx_->level(degree_ + 1); }
    const Clique& cell(std::size_t index) const { return cells()[index]; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::size_t nonzeros() const noexcept { return coeffs_.size(); }

    Rational coeff(std::size_t index) const;
    void set_coeff(std::size_t index, const Rational& value);
    void add_coeff(std::size_t index, const Rational& value);

    // Assigns alpha(tuple) = value, storing the sign-adjusted value on the
    // canonical clique. DomainError if the tuple is not an ordering of a
    // (k+1)-clique.
    void set(std::span<const VertexId> tuple, const Rational& value);

    // Value at an arbitrary argument tuple. DomainError on arity mismatch.
    Rational operator()(std::span<const VertexId> tuple) const;
    Rational operator()(std::initializer_list<VertexId> tuple) const
    {
        return (*this)(std::span<const VertexId>(tuple.begin(), tuple.size()));
    }

    friend bool operator==(const Form& a, const Form& b)
    {
        return a.cx_ == b.cx_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }

  private:
    ComplexPtr cx_;
    std::size_t degree_;
    Coeffs coeffs_;
};

/**
 * General k-tensor: every ordering of a (k+1)-clique is an independent entry.
 * Keys are ordered tuples of distinct vertices whose set is a clique.
 */
class Tensor
{
  public:
    using Coeffs = std::map<std::vector<VertexId>, Rational>;

    Tensor(ComplexPtr cx, std::size_t degree);

    std::size_t degree() const noexcept { return degree_; }
    const CliqueComplex& complex() const noexcept { return *cx_; }
    const ComplexPtr& complex_ptr() const noexcept { return cx_; }
    const Coeffs& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    // DomainError unless the tuple is an ordering of a (k+1)-clique.
    void set(std::span<const VertexId> tuple, const Rational& value);

    Rational operator()(std::span<const VertexId> tuple) const;

    friend bool operator==(const Tensor& a, const Tensor& b)
    {
        return a.cx_ == b.cx_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }

  private:
    ComplexPtr cx_;
    std::size_t degree_;
    Coeffs coeffs_;
};

// Sorts `tuple` in place and returns the sign of the sorting permutation, or
// 0 if the tuple has a repeated vertex.
int sort_with_sign(std::vector<VertexId>& tuple);

Rational eval_form(const Form& alpha, std::span<const VertexId> tuple);
Rational eval_tensor(const Tensor& t, std::span<const VertexId> tuple);

// Characteristic 0-form of a vertex. DomainError for unknown vertices.
Form chi(const ComplexPtr& cx, VertexId v);
Form constant(const ComplexPtr& cx, const Rational& c);

// Every ordering of every stored clique, with the alternating sign applied.
Tensor to_tensor(const Form& alpha);

// Pointwise linear structure. Degree or complex mismatch throws DomainError.
Form add(const Form& a, const Form& b);
Form subtract(const Form& a, const Form& b);
Form scale(const Rational& c, const Form& a);

inline Form operator+(const Form& a, const Form& b) { return add(a, b); }
inline Form operator-(const Form& a, const Form& b) { return subtract(a, b); }
inline Form operator*(const Rational& c, const Form& a) { return scale(c, a); }

// Single-entry form with coefficient 1 on the cell of the given index.
Form basis_form(const ComplexPtr& cx, std::size_t degree, std::size_t index);

} // namespace gext
