#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace thrackle {

// Checks an instance against the small JSON Schema subset the shipped
// schemas use: type, properties, required, items, enum, minimum, maximum,
// minItems, maxItems, and boolean additionalProperties.  Returns one
// diagnostic per violation; empty means valid.
std::vector<std::string> schema_violations(const nlohmann::json& schema,
                                           const nlohmann::json& instance);

bool matches_schema(const nlohmann::json& schema, const nlohmann::json& instance);

}  // namespace thrackle
