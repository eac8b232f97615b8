#pragma once

// Minimal JSON-schema checker for the subset the shipped schemas use:
// "type", "properties", "required", "items". Enough to assert that CLI
// output conforms; not a general validator.

#include <json.hpp>

#include <string>

namespace schema_check {

using nlohmann::json;

inline bool type_matches(const json& value, const std::string& type) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "integer") return value.is_number_integer();
    if (type == "number") return value.is_number();
    if (type == "boolean") return value.is_boolean();
    return false;
}

inline bool validate(const json& value, const json& schema, std::string& error,
                     const std::string& path = "$") {
    if (schema.contains("type") && !type_matches(value, schema["type"].get<std::string>())) {
        error = path + ": expected type " + schema["type"].get<std::string>();
        return false;
    }
    if (schema.contains("required"))
        for (const auto& key : schema["required"]) {
            if (!value.contains(key.get<std::string>())) {
                error = path + ": missing required key \"" + key.get<std::string>() + "\"";
                return false;
            }
        }
    if (schema.contains("properties") && value.is_object())
        for (const auto& [key, sub] : schema["properties"].items()) {
            if (!value.contains(key)) continue;
            if (!validate(value.at(key), sub, error, path + "." + key)) return false;
        }
    if (schema.contains("items") && value.is_array())
        for (std::size_t i = 0; i < value.size(); ++i)
            if (!validate(value[i], schema["items"], error,
                          path + "[" + std::to_string(i) + "]"))
                return false;
    return true;
}

} // namespace schema_check
