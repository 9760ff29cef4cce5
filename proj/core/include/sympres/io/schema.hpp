#ifndef SYMPRES_IO_SCHEMA_HPP
#define SYMPRES_IO_SCHEMA_HPP

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace sympres {

/// Names ("verdict.schema.json", ...) of the schemas compiled into the library.
std::vector<std::string> schema_names();
/// Raises ParseError for an unknown name.
const nlohmann::json &schema(std::string_view name);

/// Validates against a schema using the subset of JSON Schema the published
/// schemas use: type, const, enum, minimum, required, properties,
/// additionalProperties (false), items, minItems, oneOf and $ref (local
/// "#/$defs/..." or another schema by name). Returns "" when valid,
/// otherwise the first violation with its JSON path.
std::string validate(const nlohmann::json &doc, std::string_view schema_name);
/// Raises AssertionFailure when validate() reports a violation.
void require_valid(const nlohmann::json &doc, std::string_view schema_name);

} // namespace sympres

#endif // SYMPRES_IO_SCHEMA_HPP
