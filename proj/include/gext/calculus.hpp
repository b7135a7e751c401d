#pragma once

#include <set>
#include <span>
#include <vector>

#include "gext/exec.hpp"
#include "gext/forms.hpp"

namespace gext {

// (a (x) b)(v_0..v_{r+s}) = a(v_0..v_r) * b(v_r..v_{r+s}) on every ordering
// of every (r+s+1)-clique; the two factors share the middle vertex v_r.
Tensor tensor_product(const Tensor& a, const Tensor& b, Exec exec = Exec::Parallel);
Tensor tensor_product(const Form& a, const Form& b, Exec exec = Exec::Parallel);

// Signed average over all argument orderings, normalised by 1/(r+1)!.
Form skew_symmetrize(const Tensor& t, Exec exec = Exec::Parallel);

// Skew symmetrization of the tensor product, evaluated cell by cell with the
// full permutation sum. Needs max_card >= r+s+1.
Form wedge(const Form& a, const Form& b, Exec exec = Exec::Parallel);

// Value of a ^ b at one argument tuple of length r+s+1.
Rational wedge_at(const Form& a, const Form& b, std::span<const VertexId> tuple);

// Left-nested product ((f_0 ^ f_1) ^ f_2) ^ ... ; wedge is not associative
// in general, so the nesting is fixed.
Form wedge_chain(std::span<const Form> factors, Exec exec = Exec::Parallel);

// Alternating sum over omitted arguments on each (r+2)-clique. Needs
// max_card >= r+2.
Form exterior_derivative(const Form& a, Exec exec = Exec::Parallel);
inline Form d(const Form& a, Exec exec = Exec::Parallel) { return exterior_derivative(a, exec); }

// f ^ a for a 0-form f: each coefficient scaled by the mean of f over the
// cell's vertices. Equal to wedge(f, a).
Form f_wedge_fast(const Form& f, const Form& a);

// d chi^{v_1} ^ ... ^ d chi^{v_k} from the closed form: on the cell
// (x_0 < ... < x_k) the value is sgn(tau)/k! where v_i = x_{tau(i)}, and zero
// when the v_i are not distinct or no such cell exists. k = 0 gives the
// constant 1.
Form dchi_chain(const ComplexPtr& cx, std::span<const VertexId> vertices);

// Same product built by left-nested wedges of the 1-forms d chi^{v_i}.
Form dchi_chain_by_wedges(const ComplexPtr& cx, std::span<const VertexId> vertices, Exec exec = Exec::Parallel);

// The 0-form x -> a(x, v_1, ..., v_k).
Form coefficient_form(const Form& a, std::span<const VertexId> vertices);

// Ordered k-tuples (v_1..v_k) whose coefficient form is not identically zero:
// exactly the orderings of k-subsets of support cells.
std::set<std::vector<VertexId>> expansion_tuples(const Form& a);

// Sum over expansion_tuples of coefficient_form(a, v) ^ dchi_chain(v).
// Returns a itself, exactly. Degree must be >= 1.
Form expand_reconstruct(const Form& a, Exec exec = Exec::Parallel);

// 0-form equal to 1 on the vertices of clique c, 0 elsewhere. DomainError if c
// is not a clique of the complex.
Form cutoff_rho(const ComplexPtr& cx, std::span<const VertexId> c);

bool is_closed(const Form& a, Exec exec = Exec::Parallel);

} // namespace gext
