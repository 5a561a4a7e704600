#pragma once

#include <string>

#include "weil/element.hpp"
#include "weil/presentation.hpp"

#include <nlohmann/json_fwd.hpp>

namespace weil {

/// Presentation schema: {"vars": s, "trunc": k, "extra_gens": [[e1..es], ...]}.
/// Serialization also carries derived "basis", "dim" and "height" fields;
/// parsing ignores them.
nlohmann::json presentation_to_json(const Presentation& p);
PresPtr presentation_from_json(const nlohmann::json& j);

/// Element schema:
/// {"presentation": <preset string or inline object>,
///  "coeffs": [{"mono": [e1..es], "c": real}, ...]}.
/// Zero coefficients are omitted on output.
nlohmann::json element_to_json(const WeilElement& a, const std::string& presentation_id = "");
WeilElement element_from_json(const nlohmann::json& j);

}  // namespace weil
