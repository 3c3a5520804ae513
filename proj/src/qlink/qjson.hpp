#pragma once

#include <json.hpp>
#include <string>

#include "laurent.hpp"

namespace qlink {

using Json = nlohmann::ordered_json;

// Canonical form: variables in roster (name) order, terms in lex order of
// their exponent vectors, coefficients as exact "num" / "num/den" strings.
// Identical polynomials always serialize to identical bytes.
Json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

std::string json_dump(const Json& j);

}  // namespace qlink
