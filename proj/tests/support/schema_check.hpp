#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace kummer::testing {

// Validates `value` against the JSON Schema subset used by
// docs/report.schema.json: type, enum, minimum, required, properties,
// additionalProperties (false) and items. Appends one message per violation.
inline void check_schema(const nlohmann::json& schema, const nlohmann::json& value,
                         const std::string& path, std::vector<std::string>& errors) {
  if (schema.contains("type")) {
    const std::string type = schema["type"];
    const bool ok = (type == "object" && value.is_object()) ||
                    (type == "array" && value.is_array()) ||
                    (type == "string" && value.is_string()) ||
                    (type == "integer" && value.is_number_integer()) ||
                    (type == "number" && value.is_number()) ||
                    (type == "boolean" && value.is_boolean());
    if (!ok) {
      errors.push_back(path + ": expected " + type);
      return;
    }
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& option : schema["enum"]) found = found || option == value;
    if (!found) errors.push_back(path + ": value not in enum");
  }
  if (schema.contains("minimum") && value.is_number() &&
      value.get<double>() < schema["minimum"].get<double>()) {
    errors.push_back(path + ": below minimum");
  }
  if (value.is_object()) {
    for (const auto& key : schema.value("required", nlohmann::json::array())) {
      if (!value.contains(key.get<std::string>())) {
        errors.push_back(path + ": missing " + key.get<std::string>());
      }
    }
    const auto properties = schema.value("properties", nlohmann::json::object());
    const bool closed = schema.contains("additionalProperties") &&
                        schema["additionalProperties"] == false;
    for (const auto& [key, member] : value.items()) {
      if (properties.contains(key)) {
        check_schema(properties[key], member, path + "." + key, errors);
      } else if (closed) {
        errors.push_back(path + ": unexpected property " + key);
      }
    }
  }
  if (value.is_array() && schema.contains("items")) {
    for (size_t k = 0; k < value.size(); ++k) {
      check_schema(schema["items"], value[k], path + "[" + std::to_string(k) + "]", errors);
    }
  }
}

inline nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  return nlohmann::json::parse(in);
}

inline std::vector<std::string> schema_errors(const nlohmann::json& document) {
  static const nlohmann::json schema =
      load_json(std::string(KUMMER_SOURCE_DIR) + "/docs/report.schema.json");
  std::vector<std::string> errors;
  check_schema(schema, document, "$", errors);
  return errors;
}

}  // namespace kummer::testing
