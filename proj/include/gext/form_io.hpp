#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "gext/forms.hpp"

namespace gext {

// {"degree": k, "entries": [{"clique": [labels...], "value": "p/q"}, ...]}
// Emission is canonical: entries in canonical clique order, labels in id
// order, values as reduced fraction strings.
nlohmann::json form_to_json(const Form& alpha);
std::string form_to_string(const Form& alpha);

// Accepts cliques in any order (the sorting sign is applied) and values as
// fraction strings or JSON integers. Unknown labels, non-cliques and repeated
// cells throw DomainError.
Form form_from_json(const nlohmann::json& doc, const ComplexPtr& cx);
Form form_from_string(std::string_view text, const ComplexPtr& cx);

// Degree field only, so callers can size the complex before parsing.
std::size_t form_degree(const nlohmann::json& doc);

} // namespace gext
