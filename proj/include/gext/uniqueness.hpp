#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gext/forms.hpp"

namespace gext {

/**
 * A candidate exterior derivative: maps a degree-k form to what should be a
 * degree-(k+1) form on the same complex. Treated as a black box; it may throw
 * or return the wrong degree, and both are reported as degree-raising
 * failures.
 */
struct Operator
{
    std::string name;
    std::function<Form(const Form&)> apply;
};

// Outcome of one axiom. A failed verdict always carries a witness holding the
// inputs (as form JSON) and the first cell where the two sides differ.
struct Verdict
{
    bool pass = true;
    bool sampled = false;
    bool ran = false;
    std::size_t checks = 0;
    nlohmann::json witness;

    nlohmann::json to_json() const;
};

struct AxiomReport
{
    std::string operator_name;
    Verdict degree_raising;
    Verdict squares_to_zero;
    Verdict leibniz;
    Verdict agrees_on_functions;
    Verdict linearity_sampled;
    Verdict equality_with_d;

    // Every verdict that ran passed.
    bool all_pass() const;
    bool axioms_pass() const;
    nlohmann::json to_json() const;
};

/**
 * Checks the derivation axioms on `cx` (max_card >= 3 required):
 *   degree raising, squaring to zero, graded Leibniz, agreement with d on
 *   0-forms (exhaustive on chi^v plus `trials` random functions), and
 *   linearity (sampled).
 * Random inputs are drawn from `seed`; the report is a pure function of
 * (operator, complex, trials, seed). Failing witnesses are shrunk to a
 * single-entry input when the failure persists.
 */
AxiomReport check_axioms(const Operator& op, const ComplexPtr& cx, std::size_t trials, std::uint64_t seed);

// Compares op against d on every basis form of every degree k whose image
// cells exist. Given linearity this decides op == d on the complex.
Verdict certify_equality(const Operator& op, const ComplexPtr& cx);

// check_axioms followed by certify_equality, filling equality_with_d.
AxiomReport audit(const Operator& op, const ComplexPtr& cx, std::size_t trials, std::uint64_t seed);

// Re-runs the operator on the inputs stored in a failing witness and reports
// whether the recorded inequality is reproduced.
bool witness_reproduces(const Operator& op, const ComplexPtr& cx, std::string_view axiom,
                        const nlohmann::json& witness);

struct ChainLink
{
    std::string name;
    std::string lhs;
    std::string rhs;
    bool holds = false;
};

/**
 * The localisation argument specialised to the operator d, for a degree-k
 * form (k >= 1) and a (k+2)-clique c:
 *   rho            cut-off equal to 1 on c
 *   rho_alpha      rho ^ alpha
 *   tuples         vertex tuples with nonzero coefficient forms (finite)
 *   expansion      sum of (rho_alpha)_v ^ dchi_chain(v)
 *   termwise       sum of d((rho_alpha)_v) ^ dchi_chain(v)
 * with each equality of the chain recorded as a link.
 */
struct ProofTrace
{
    Form rho;
    Form rho_alpha;
    std::vector<std::vector<VertexId>> tuples;
    Form expansion;
    Form termwise;
    Rational final_value;
    std::vector<ChainLink> links;

    bool all_hold() const;
    nlohmann::json to_json() const;
};

ProofTrace proof_trace(const Form& alpha, std::span<const VertexId> clique);

// Operators used by tests, selftest and the CLI.
Operator exterior_derivative_operator();

// Evaluates every cell through cut-off, expansion and termwise d.
Operator proof_pipeline_operator();

// Operators that violate at least one hypothesis or differ from d:
// scaled_d, flip_edge_then_d, d_plus_identity, unnormalized_chain, zero,
// top_degree_sign_flip.
std::vector<Operator> mutant_catalogue(const ComplexPtr& cx);

// Operator table: {"degrees": {"k": [{"basis_clique": [...], "image": form}]}}
// Missing basis cells map to the zero form of degree k+1.
Operator operator_from_table(const nlohmann::json& table, const ComplexPtr& cx, std::string name = "table");

// Largest image degree mentioned in a table, so callers can size the complex.
std::size_t table_max_image_degree(const nlohmann::json& table);

// Tabulates op on every basis form of degrees 0..max_card-2.
nlohmann::json operator_to_table(const Operator& op, const ComplexPtr& cx);

} // namespace gext
