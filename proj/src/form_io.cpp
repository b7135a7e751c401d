#include "gext/form_io.hpp"

#include <set>

#include "gext/errors.hpp"

namespace gext {

using nlohmann::json;

json form_to_json(const Form& alpha)
{
    const Graph& g = alpha.complex().graph();
    json entries = json::array();
    for (const auto& [idx, value] : alpha.coeffs()) {
        json labels = json::array();
        for (VertexId v : alpha.cell(idx))
            labels.push_back(g.label(v));
        entries.push_back({{"clique", std::move(labels)}, {"value", to_string(value)}});
    }
    return {{"degree", alpha.degree()}, {"entries", std::move(entries)}};
}

std::string form_to_string(const Form& alpha)
{
    return form_to_json(alpha).dump();
}

std::size_t form_degree(const json& doc)
{
    if (!doc.is_object() || !doc.contains("degree") || !doc["degree"].is_number_unsigned())
        throw DomainError("form JSON needs a non-negative integer \"degree\"");
    return doc["degree"].get<std::size_t>();
}

Form form_from_json(const json& doc, const ComplexPtr& cx)
{
    const std::size_t degree = form_degree(doc);
    Form alpha(cx, degree);
    if (!doc.contains("entries"))
        return alpha;
    if (!doc["entries"].is_array())
        throw DomainError("\"entries\" must be an array");

    const Graph& g = cx->graph();
    std::set<std::size_t> seen;
    for (const auto& entry : doc["entries"]) {
        if (!entry.is_object() || !entry.contains("clique") || !entry.contains("value") ||
            !entry["clique"].is_array())
            throw DomainError("form entry needs \"clique\" and \"value\"");
        std::vector<VertexId> tuple;
        for (const auto& label : entry["clique"]) {
            if (!label.is_string())
                throw DomainError("clique labels must be strings");
            auto v = g.find(label.get<std::string>());
            if (!v)
                throw DomainError("unknown vertex label", label.get<std::string>());
            tuple.push_back(*v);
        }
        if (tuple.size() != degree + 1)
            throw DomainError("clique size does not match degree", entry["clique"].dump());

        const auto& raw = entry["value"];
        Rational value;
        if (raw.is_string())
            value = parse_rational(raw.get<std::string>());
        else if (raw.is_number_integer())
            value = parse_rational(raw.dump());
        else
            throw DomainError("value must be a fraction string or integer", raw.dump());

        std::vector<VertexId> sorted = tuple;
        int sign = sort_with_sign(sorted);
        auto idx = sign == 0 ? std::nullopt : cx->index_of(sorted);
        if (!idx)
            throw DomainError("entry is not supported on a clique", entry["clique"].dump());
        if (!seen.insert(*idx).second)
            throw DomainError("cell listed twice", entry["clique"].dump());
        alpha.set_coeff(*idx, sign > 0 ? value : Rational(-value));
    }
    return alpha;
}

Form form_from_string(std::string_view text, const ComplexPtr& cx)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid form JSON: ") + e.what(), 1);
    }
    return form_from_json(doc, cx);
}

} // namespace gext
