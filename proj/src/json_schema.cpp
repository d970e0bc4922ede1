#include "thrackle/json_schema.hpp"

namespace thrackle {

namespace {

bool type_matches(const std::string& type, const nlohmann::json& v) {
    if (type == "object") return v.is_object();
    if (type == "array") return v.is_array();
    if (type == "string") return v.is_string();
    if (type == "integer") return v.is_number_integer();
    if (type == "number") return v.is_number();
    if (type == "boolean") return v.is_boolean();
    if (type == "null") return v.is_null();
    return false;
}

void check(const nlohmann::json& schema, const nlohmann::json& v, const std::string& path,
           std::vector<std::string>& out) {
    if (schema.contains("type")) {
        const auto type = schema.at("type").get<std::string>();
        if (!type_matches(type, v)) {
            out.push_back(path + ": expected " + type);
            return;  // further keyword checks would only cascade
        }
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& allowed : schema.at("enum"))
            if (allowed == v) found = true;
        if (!found) out.push_back(path + ": value not in enum");
    }
    if (v.is_number()) {
        if (schema.contains("minimum") && v.get<double>() < schema.at("minimum").get<double>())
            out.push_back(path + ": below minimum");
        if (schema.contains("maximum") && v.get<double>() > schema.at("maximum").get<double>())
            out.push_back(path + ": above maximum");
    }
    if (v.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema.at("required"))
                if (!v.contains(key.get<std::string>()))
                    out.push_back(path + ": missing required key '" + key.get<std::string>() + "'");
        const bool closed = schema.contains("additionalProperties") &&
                            schema.at("additionalProperties").is_boolean() &&
                            !schema.at("additionalProperties").get<bool>();
        for (const auto& [key, value] : v.items()) {
            if (schema.contains("properties") && schema.at("properties").contains(key))
                check(schema.at("properties").at(key), value, path + "/" + key, out);
            else if (closed)
                out.push_back(path + ": unexpected key '" + key + "'");
        }
    }
    if (v.is_array()) {
        if (schema.contains("minItems") && v.size() < schema.at("minItems").get<std::size_t>())
            out.push_back(path + ": fewer than minItems");
        if (schema.contains("maxItems") && v.size() > schema.at("maxItems").get<std::size_t>())
            out.push_back(path + ": more than maxItems");
        if (schema.contains("items")) {
            std::size_t i = 0;
            for (const auto& item : v)
                check(schema.at("items"), item, path + "/" + std::to_string(i++), out);
        }
    }
}

}  // namespace

std::vector<std::string> schema_violations(const nlohmann::json& schema,
                                           const nlohmann::json& instance) {
    std::vector<std::string> out;
    check(schema, instance, "$", out);
    return out;
}

bool matches_schema(const nlohmann::json& schema, const nlohmann::json& instance) {
    return schema_violations(schema, instance).empty();
}

}  // namespace thrackle
