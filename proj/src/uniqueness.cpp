#include "gext/uniqueness.hpp"

#include <algorithm>
#include <map>

#include "gext/calculus.hpp"
#include "gext/errors.hpp"
#include "gext/form_io.hpp"
#include "gext/random_forms.hpp"

namespace gext {

using nlohmann::json;

namespace {

json cell_labels(const CliqueComplex& cx, const Clique& c)
{
    json out = json::array();
    for (VertexId v : c)
        out.push_back(cx.graph().label(v));
    return out;
}

// First canonical cell where a and b differ (same degree and complex).
std::optional<std::size_t> first_difference(const Form& a, const Form& b)
{
    auto ia = a.coeffs().begin(), ib = b.coeffs().begin();
    const auto ea = a.coeffs().end(), eb = b.coeffs().end();
    while (ia != ea || ib != eb) {
        if (ib == eb || (ia != ea && ia->first < ib->first))
            return ia->first;
        if (ia == ea || ib->first < ia->first)
            return ib->first;
        if (ia->second != ib->second)
            return ia->first;
        ++ia;
        ++ib;
    }
    return std::nullopt;
}

json difference_record(const Form& expected, const Form& actual, std::size_t idx)
{
    return {{"cell", cell_labels(expected.complex(), expected.cell(idx))},
            {"expected", to_string(expected.coeff(idx))},
            {"actual", to_string(actual.coeff(idx))}};
}

// Looks up a witness cell in a form of known degree.
Rational value_at(const Form& f, const json& cell)
{
    std::vector<VertexId> tuple;
    for (const auto& label : cell) {
        auto v = f.complex().graph().find(label.get<std::string>());
        if (!v)
            return 0;
        tuple.push_back(*v);
    }
    if (tuple.size() != f.degree() + 1)
        return 0;
    return f(tuple);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t tag, std::uint64_t degree)
{
    // splitmix-style mixing so streams for different checks are unrelated
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (tag * 64 + degree + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Single-entry pieces of a form, used to shrink witnesses.
std::vector<Form> single_entries(const Form& f)
{
    std::vector<Form> out;
    for (const auto& [idx, value] : f.coeffs()) {
        Form piece(f.complex_ptr(), f.degree());
        piece.set_coeff(idx, value);
        out.push_back(std::move(piece));
    }
    return out;
}

class Checker
{
  public:
    Checker(const Operator& op, const ComplexPtr& cx, AxiomReport& report) : op_(op), cx_(cx), report_(report) {}

    // Applies the operator, recording a degree-raising failure instead of
    // propagating bad output.
    std::optional<Form> apply(const Form& input)
    {
        auto& v = report_.degree_raising;
        v.ran = true;
        ++v.checks;
        std::string reason;
        try {
            Form out = op_.apply(input);
            if (out.complex_ptr() != input.complex_ptr())
                reason = "image lives on a different complex";
            else if (out.degree() != input.degree() + 1)
                reason = "image has degree " + std::to_string(out.degree());
            else
                return out;
        } catch (const std::exception& e) {
            reason = std::string("operator threw: ") + e.what();
        }
        if (v.pass) {
            v.pass = false;
            v.witness = {{"input", form_to_json(input)}, {"expected_degree", input.degree() + 1}, {"reason", reason}};
        }
        return std::nullopt;
    }

    // Empty optional: passes or could not be evaluated. Otherwise the
    // witness body.
    std::optional<json> agrees_on_functions(const Form& f)
    {
        auto img = apply(f);
        if (!img)
            return std::nullopt;
        Form expected = exterior_derivative(f);
        if (auto idx = first_difference(expected, *img)) {
            json w = difference_record(expected, *img, *idx);
            w["input"] = form_to_json(f);
            return w;
        }
        return std::nullopt;
    }

    std::optional<json> squares_to_zero(const Form& a)
    {
        auto once = apply(a);
        if (!once)
            return std::nullopt;
        auto twice = apply(*once);
        if (!twice || twice->is_zero())
            return std::nullopt;
        const auto& [idx, value] = *twice->coeffs().begin();
        return json{{"input", form_to_json(a)},
                    {"cell", cell_labels(*cx_, twice->cell(idx))},
                    {"expected", "0"},
                    {"actual", to_string(value)}};
    }

    std::optional<json> leibniz(const Form& a, const Form& b)
    {
        auto da = apply(a);
        auto db = apply(b);
        auto dab = apply(wedge(a, b));
        if (!da || !db || !dab)
            return std::nullopt;
        Form rhs = wedge(*da, b);
        Form second = wedge(a, *db);
        rhs = a.degree() % 2 == 0 ? rhs + second : rhs - second;
        if (auto idx = first_difference(rhs, *dab)) {
            json w = difference_record(rhs, *dab, *idx);
            w["alpha"] = form_to_json(a);
            w["beta"] = form_to_json(b);
            return w;
        }
        return std::nullopt;
    }

    std::optional<json> linearity(const Form& a, const Form& b, const Rational& s, const Rational& t)
    {
        auto da = apply(a);
        auto db = apply(b);
        auto dsum = apply(s * a + t * b);
        if (!da || !db || !dsum)
            return std::nullopt;
        Form expected = s * *da + t * *db;
        if (auto idx = first_difference(expected, *dsum)) {
            json w = difference_record(expected, *dsum, *idx);
            w["alpha"] = form_to_json(a);
            w["beta"] = form_to_json(b);
            w["a"] = to_string(s);
            w["b"] = to_string(t);
            return w;
        }
        return std::nullopt;
    }

    static void record(Verdict& v, std::optional<json> failure)
    {
        v.ran = true;
        ++v.checks;
        if (failure && v.pass) {
            v.pass = false;
            v.witness = std::move(*failure);
        }
    }

  private:
    const Operator& op_;
    ComplexPtr cx_;
    AxiomReport& report_;
};

// Returns a single-entry input that still fails, else the original witness.
template <class Check>
json shrink(const Form& input, json witness, Check&& check)
{
    if (input.nonzeros() <= 1)
        return witness;
    for (const auto& piece : single_entries(input))
        if (auto w = check(piece))
            return *w;
    return witness;
}

} // namespace

json Verdict::to_json() const
{
    json out{{"pass", pass}, {"ran", ran}, {"checks", checks}};
    if (sampled)
        out["sampled"] = true;
    if (!pass)
        out["witness"] = witness;
    return out;
}

bool AxiomReport::axioms_pass() const
{
    for (const Verdict* v : {&degree_raising, &squares_to_zero, &leibniz, &agrees_on_functions, &linearity_sampled})
        if (v->ran && !v->pass)
            return false;
    return true;
}

bool AxiomReport::all_pass() const
{
    return axioms_pass() && (!equality_with_d.ran || equality_with_d.pass);
}

json AxiomReport::to_json() const
{
    return {{"operator", operator_name},
            {"degree_raising", degree_raising.to_json()},
            {"squares_to_zero", squares_to_zero.to_json()},
            {"leibniz", leibniz.to_json()},
            {"agrees_on_functions", agrees_on_functions.to_json()},
            {"linearity_sampled", linearity_sampled.to_json()},
            {"equality_with_d", equality_with_d.to_json()},
            {"pass", all_pass()}};
}

AxiomReport check_axioms(const Operator& op, const ComplexPtr& cx, std::size_t trials, std::uint64_t seed)
{
    cx->require(3, "axiom check");
    AxiomReport report;
    report.operator_name = op.name;
    report.linearity_sampled.sampled = true;
    Checker check(op, cx, report);
    const std::size_t top = cx->max_card() - 2; // highest degree whose image cells exist

    // agreement on functions: every chi^v, then random 0-forms
    for (VertexId v = 0; v < cx->graph().vertex_count(); ++v)
        Checker::record(report.agrees_on_functions, check.agrees_on_functions(chi(cx, v)));
    {
        Rng rng(stream_seed(seed, 1, 0));
        for (std::size_t t = 0; t < trials; ++t) {
            Form f = random_form(cx, 0, rng);
            auto failure = check.agrees_on_functions(f);
            if (failure && report.agrees_on_functions.pass)
                failure = shrink(f, *failure, [&](const Form& p) { return check.agrees_on_functions(p); });
            Checker::record(report.agrees_on_functions, std::move(failure));
        }
    }

    for (std::size_t k = 0; k <= top; ++k) {
        Rng rng(stream_seed(seed, 2, k));
        // zero and basis-free random inputs; also exercises degree raising
        check.apply(Form(cx, k));
        for (std::size_t t = 0; t < trials; ++t)
            check.apply(random_form(cx, k, rng));
    }

    for (std::size_t k = 0; k + 1 <= top; ++k) {
        Rng rng(stream_seed(seed, 3, k));
        for (std::size_t t = 0; t < trials; ++t) {
            Form a = random_form(cx, k, rng);
            auto failure = check.squares_to_zero(a);
            if (failure && report.squares_to_zero.pass)
                failure = shrink(a, *failure, [&](const Form& p) { return check.squares_to_zero(p); });
            Checker::record(report.squares_to_zero, std::move(failure));
        }
    }

    for (std::size_t r = 0; r <= top; ++r) {
        for (std::size_t s = 0; r + s <= top; ++s) {
            Rng rng(stream_seed(seed, 4, r * 16 + s));
            for (std::size_t t = 0; t < trials; ++t) {
                Form a = random_form(cx, r, rng);
                Form b = random_form(cx, s, rng);
                auto failure = check.leibniz(a, b);
                if (failure && report.leibniz.pass) {
                    failure = shrink(a, *failure, [&](const Form& p) { return check.leibniz(p, b); });
                    Form a_small = form_from_json((*failure)["alpha"], cx);
                    failure = shrink(b, *failure, [&](const Form& p) { return check.leibniz(a_small, p); });
                }
                Checker::record(report.leibniz, std::move(failure));
            }
        }
    }

    for (std::size_t k = 0; k <= top; ++k) {
        Rng rng(stream_seed(seed, 5, k));
        for (std::size_t t = 0; t < trials; ++t) {
            Form a = random_form(cx, k, rng);
            Form b = random_form(cx, k, rng);
            Rational s = rng.rational(), u = rng.rational();
            Checker::record(report.linearity_sampled, check.linearity(a, b, s, u));
        }
    }
    return report;
}

Verdict certify_equality(const Operator& op, const ComplexPtr& cx)
{
    Verdict v;
    v.ran = true;
    for (std::size_t k = 0; k + 2 <= cx->max_card(); ++k) {
        if (cx->level_size(k + 2) == 0)
            continue;
        for (std::size_t i = 0; i < cx->level_size(k + 1); ++i) {
            ++v.checks;
            Form e = basis_form(cx, k, i);
            Form expected = exterior_derivative(e);
            json failure;
            try {
                Form actual = op.apply(e);
                if (actual.complex_ptr() != cx || actual.degree() != k + 1) {
                    failure = {{"reason", "image has wrong degree or complex"}};
                } else if (auto idx = first_difference(expected, actual)) {
                    failure = difference_record(expected, actual, *idx);
                }
            } catch (const std::exception& ex) {
                failure = {{"reason", std::string("operator threw: ") + ex.what()}};
            }
            if (!failure.is_null()) {
                failure["degree"] = k;
                failure["basis_clique"] = cell_labels(*cx, e.cell(i));
                failure["input"] = form_to_json(e);
                v.pass = false;
                v.witness = std::move(failure);
                return v;
            }
        }
    }
    return v;
}

AxiomReport audit(const Operator& op, const ComplexPtr& cx, std::size_t trials, std::uint64_t seed)
{
    AxiomReport report = check_axioms(op, cx, trials, seed);
    report.equality_with_d = certify_equality(op, cx);
    return report;
}

bool witness_reproduces(const Operator& op, const ComplexPtr& cx, std::string_view axiom, const json& w)
{
    try {
        if (axiom == "degree_raising") {
            Form input = form_from_json(w.at("input"), cx);
            try {
                Form out = op.apply(input);
                return out.degree() != input.degree() + 1 || out.complex_ptr() != cx;
            } catch (const std::exception&) {
                return true;
            }
        }
        if (axiom == "agrees_on_functions" || axiom == "equality_with_d") {
            Form input = form_from_json(w.at("input"), cx);
            Form actual = op.apply(input);
            if (w.contains("reason"))
                return actual.degree() != input.degree() + 1;
            Form expected = exterior_derivative(input);
            Rational e = value_at(expected, w.at("cell")), a = value_at(actual, w.at("cell"));
            return e != a && to_string(e) == w.at("expected") && to_string(a) == w.at("actual");
        }
        if (axiom == "squares_to_zero") {
            Form input = form_from_json(w.at("input"), cx);
            Form twice = op.apply(op.apply(input));
            Rational a = value_at(twice, w.at("cell"));
            return a != 0 && to_string(a) == w.at("actual");
        }
        if (axiom == "leibniz") {
            Form a = form_from_json(w.at("alpha"), cx), b = form_from_json(w.at("beta"), cx);
            Form lhs = op.apply(wedge(a, b));
            Form rhs = a.degree() % 2 == 0 ? wedge(op.apply(a), b) + wedge(a, op.apply(b))
                                           : wedge(op.apply(a), b) - wedge(a, op.apply(b));
            Rational l = value_at(lhs, w.at("cell")), r = value_at(rhs, w.at("cell"));
            return l != r && to_string(r) == w.at("expected") && to_string(l) == w.at("actual");
        }
        if (axiom == "linearity_sampled") {
            Form a = form_from_json(w.at("alpha"), cx), b = form_from_json(w.at("beta"), cx);
            Rational s = parse_rational(w.at("a").get<std::string>());
            Rational t = parse_rational(w.at("b").get<std::string>());
            Form lhs = op.apply(s * a + t * b);
            Form rhs = s * op.apply(a) + t * op.apply(b);
            Rational l = value_at(lhs, w.at("cell")), r = value_at(rhs, w.at("cell"));
            return l != r;
        }
    } catch (const std::exception&) {
        return false;
    }
    return false;
}

bool ProofTrace::all_hold() const
{
    return std::all_of(links.begin(), links.end(), [](const ChainLink& l) { return l.holds; });
}

json ProofTrace::to_json() const
{
    json out;
    out["rho"] = form_to_json(rho);
    out["rho_alpha"] = form_to_json(rho_alpha);
    out["tuples"] = json::array();
    for (const auto& t : tuples)
        out["tuples"].push_back(cell_labels(rho.complex(), t));
    out["expansion"] = form_to_json(expansion);
    out["termwise"] = form_to_json(termwise);
    out["final_value"] = to_string(final_value);
    out["links"] = json::array();
    for (const auto& l : links)
        out["links"].push_back({{"name", l.name}, {"lhs", l.lhs}, {"rhs", l.rhs}, {"holds", l.holds}});
    return out;
}

ProofTrace proof_trace(const Form& alpha, std::span<const VertexId> clique)
{
    const auto& cx = alpha.complex_ptr();
    const std::size_t k = alpha.degree();
    if (k == 0)
        throw DomainError("proof trace needs a form of degree >= 1");
    if (clique.size() != k + 2)
        throw DomainError("proof trace needs a " + std::to_string(k + 2) + "-clique");
    cx->require(k + 2, "proof trace");

    Form rho = cutoff_rho(cx, clique);
    Form rho_alpha = wedge(rho, alpha);
    auto tuple_set = expansion_tuples(rho_alpha);
    std::vector<std::vector<VertexId>> tuples(tuple_set.begin(), tuple_set.end());

    Form expansion(cx, k);
    Form termwise(cx, k + 1);
    for (const auto& v : tuples) {
        Form coeff = coefficient_form(rho_alpha, v);
        Form chain = dchi_chain(cx, v);
        expansion = expansion + wedge(coeff, chain);
        termwise = termwise + wedge(exterior_derivative(coeff), chain);
    }

    const Rational d_alpha_c = exterior_derivative(alpha)(clique);
    const Rational d_rho_alpha_c = exterior_derivative(rho_alpha)(clique);
    const Rational termwise_c = termwise(clique);

    // every tuple vertex lies within distance 1 of the clique
    const Graph& g = cx->graph();
    bool local = std::all_of(tuples.begin(), tuples.end(), [&](const std::vector<VertexId>& t) {
        return std::all_of(t.begin(), t.end(), [&](VertexId v) {
            return std::any_of(clique.begin(), clique.end(), [&](VertexId x) { return x == v || g.adjacent(x, v); });
        });
    });

    ProofTrace trace{rho, rho_alpha, tuples, expansion, termwise, d_alpha_c, {}};
    trace.links.push_back({"cutoff", to_string(d_rho_alpha_c), to_string(d_alpha_c), d_rho_alpha_c == d_alpha_c});
    trace.links.push_back({"finite_support", std::to_string(tuples.size()) + " tuples", "distance <= 1", local});
    trace.links.push_back(
        {"expansion", form_to_string(expansion), form_to_string(rho_alpha), expansion == rho_alpha});
    Form d_expansion = exterior_derivative(expansion);
    trace.links.push_back(
        {"termwise_d", form_to_string(termwise), form_to_string(d_expansion), termwise == d_expansion});
    trace.links.push_back({"evaluation", to_string(termwise_c), to_string(d_alpha_c), termwise_c == d_alpha_c});
    return trace;
}

Operator exterior_derivative_operator()
{
    return {"d", [](const Form& a) { return exterior_derivative(a); }};
}

Operator proof_pipeline_operator()
{
    return {"proof_pipeline", [](const Form& alpha) {
                if (alpha.degree() == 0)
                    return exterior_derivative(alpha);
                const auto& cx = alpha.complex_ptr();
                const std::size_t k = alpha.degree();
                Form out(cx, k + 1);
                const auto& cells = cx->level(k + 2);
                for (std::size_t i = 0; i < cells.size(); ++i) {
                    const Clique& c = cells[i];
                    Form rho_alpha = wedge(cutoff_rho(cx, c), alpha);
                    Rational value = 0;
                    for (const auto& v : expansion_tuples(rho_alpha))
                        value += wedge_at(exterior_derivative(coefficient_form(rho_alpha, v)), dchi_chain(cx, v), c);
                    out.set_coeff(i, value);
                }
                return out;
            }};
}

std::vector<Operator> mutant_catalogue(const ComplexPtr& cx)
{
    std::vector<Operator> out;
    out.push_back({"scaled_d", [](const Form& a) { return scale(2, exterior_derivative(a)); }});

    // negate the input coefficient on one edge (preferably one inside a
    // triangle) before differentiating 1-forms
    std::size_t edge = 0;
    if (cx->max_card() >= 3) {
        const auto& edges = cx->level(2);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const auto& nu = cx->graph().neighbors(edges[i][0]);
            const auto& nv = cx->graph().neighbors(edges[i][1]);
            std::vector<VertexId> common;
            std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
            if (!common.empty()) {
                edge = i;
                break;
            }
        }
    }
    out.push_back({"flip_edge_then_d", [edge](const Form& a) {
                       if (a.degree() != 1 || a.cells().empty())
                           return exterior_derivative(a);
                       Form flipped = a;
                       flipped.set_coeff(edge, -a.coeff(edge));
                       return exterior_derivative(flipped);
                   }});

    // d + id on A*: only one homogeneous component fits in a Form, so the
    // degree-preserving one is returned whenever it is nonzero
    out.push_back({"d_plus_identity", [](const Form& a) { return a.is_zero() ? exterior_derivative(a) : a; }});

    // expansion pipeline with the 1/k! dropped from the dchi chains: agrees
    // with d on functions and 1-forms, equals k! d above
    out.push_back({"unnormalized_chain", [](const Form& a) {
                       if (a.degree() == 0)
                           return exterior_derivative(a);
                       const auto& cx = a.complex_ptr();
                       const Rational weight = factorial(static_cast<unsigned>(a.degree()));
                       Form out(cx, a.degree() + 1);
                       for (const auto& v : expansion_tuples(a))
                           out = out + wedge(exterior_derivative(coefficient_form(a, v)),
                                             scale(weight, dchi_chain(cx, v)));
                       return out;
                   }});

    out.push_back({"zero", [](const Form& a) { return Form(a.complex_ptr(), a.degree() + 1); }});

    const std::size_t top = cx->max_card() >= 2 ? cx->max_card() - 2 : 0;
    out.push_back({"top_degree_sign_flip", [top](const Form& a) {
                       Form da = exterior_derivative(a);
                       return a.degree() == top ? scale(-1, da) : da;
                   }});
    return out;
}

Operator operator_from_table(const json& table, const ComplexPtr& cx, std::string name)
{
    if (!table.is_object() || !table.contains("degrees") || !table["degrees"].is_object())
        throw DomainError("operator table needs a \"degrees\" object");

    // images[k][cell index] = image of the basis form
    auto images = std::make_shared<std::map<std::size_t, std::map<std::size_t, Form>>>();
    for (const auto& [key, rows] : table["degrees"].items()) {
        std::size_t k;
        try {
            k = std::stoul(key);
        } catch (const std::exception&) {
            throw DomainError("degree keys must be integers", key);
        }
        if (!rows.is_array())
            throw DomainError("degree entries must be an array", key);
        for (const auto& row : rows) {
            std::vector<VertexId> cell;
            for (const auto& label : row.at("basis_clique")) {
                auto v = cx->graph().find(label.get<std::string>());
                if (!v)
                    throw DomainError("unknown vertex label", label.get<std::string>());
                cell.push_back(*v);
            }
            std::sort(cell.begin(), cell.end());
            if (cell.size() != k + 1)
                throw DomainError("basis clique size does not match degree", row.at("basis_clique").dump());
            auto idx = cx->index_of(cell);
            if (!idx)
                throw DomainError("basis clique is not a clique", row.at("basis_clique").dump());
            (*images)[k].insert_or_assign(*idx, form_from_json(row.at("image"), cx));
        }
    }

    return {std::move(name), [images, cx](const Form& a) {
                if (a.complex_ptr() != cx)
                    throw DomainError("form is not on the operator's complex");
                auto level = images->find(a.degree());
                std::optional<Form> acc;
                for (const auto& [idx, value] : a.coeffs()) {
                    if (level == images->end())
                        break;
                    auto it = level->second.find(idx);
                    if (it == level->second.end())
                        continue;
                    Form term = scale(value, it->second);
                    acc = acc ? add(*acc, term) : term;
                }
                return acc ? *acc : Form(cx, a.degree() + 1);
            }};
}

std::size_t table_max_image_degree(const json& table)
{
    std::size_t deg = 0;
    if (!table.is_object() || !table.contains("degrees") || !table["degrees"].is_object())
        return deg;
    for (const auto& [key, rows] : table["degrees"].items())
        if (rows.is_array())
            for (const auto& row : rows)
                if (row.contains("image"))
                    deg = std::max(deg, form_degree(row["image"]));
    return deg;
}

json operator_to_table(const Operator& op, const ComplexPtr& cx)
{
    json degrees = json::object();
    for (std::size_t k = 0; k + 2 <= cx->max_card(); ++k) {
        json rows = json::array();
        for (std::size_t i = 0; i < cx->level_size(k + 1); ++i) {
            Form e = basis_form(cx, k, i);
            rows.push_back({{"basis_clique", cell_labels(*cx, e.cell(i))}, {"image", form_to_json(op.apply(e))}});
        }
        degrees[std::to_string(k)] = std::move(rows);
    }
    return {{"degrees", std::move(degrees)}};
}

} // namespace gext
