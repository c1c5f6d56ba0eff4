#pragma once

// Minimal JSON Schema checker covering the subset used by
// schemas/reports.schema.json: type (single or list), properties, required,
// items, enum, oneOf and $ref into #/definitions. Test support only.

#include <json.hpp>

#include <string>

namespace schema_check {

using nlohmann::json;

inline const json& resolve_ref(const json& root, const std::string& ref) {
    const std::string prefix = "#/definitions/";
    if (ref.rfind(prefix, 0) != 0) throw std::runtime_error("unsupported $ref: " + ref);
    return root.at("definitions").at(ref.substr(prefix.size()));
}

inline bool type_matches(const std::string& type, const json& value) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "integer") return value.is_number_integer();
    if (type == "number") return value.is_number();
    if (type == "boolean") return value.is_boolean();
    if (type == "null") return value.is_null();
    throw std::runtime_error("unsupported schema type: " + type);
}

inline bool validate(const json& root, const json& schema, const json& value,
                     std::string* why = nullptr) {
    auto fail = [&](const std::string& msg) {
        if (why && why->empty()) *why = msg;
        return false;
    };
    if (schema.contains("$ref"))
        return validate(root, resolve_ref(root, schema["$ref"].get<std::string>()), value, why);
    if (schema.contains("enum")) {
        for (const auto& option : schema["enum"])
            if (option == value) return true;
        return fail("value not in enum: " + value.dump());
    }
    if (schema.contains("oneOf")) {
        int hits = 0;
        for (const auto& option : schema["oneOf"])
            if (validate(root, option, value)) ++hits;
        if (hits != 1)
            return fail("oneOf matched " + std::to_string(hits) + " branches for " +
                        value.dump().substr(0, 80));
        return true;
    }
    if (schema.contains("type")) {
        const json& t = schema["type"];
        bool ok = false;
        if (t.is_array()) {
            for (const auto& option : t) ok = ok || type_matches(option.get<std::string>(), value);
        } else {
            ok = type_matches(t.get<std::string>(), value);
        }
        if (!ok) return fail("type mismatch for " + value.dump().substr(0, 80));
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>()))
                    return fail("missing required key: " + key.get<std::string>());
        if (schema.contains("properties"))
            for (const auto& [key, sub] : schema["properties"].items())
                if (value.contains(key) && !validate(root, sub, value[key], why))
                    return fail("at key " + key);
    }
    if (value.is_array() && schema.contains("items"))
        for (const auto& item : value)
            if (!validate(root, schema["items"], item, why)) return fail("in array item");
    return true;
}

inline bool validate_report(const json& schema_root, const json& report,
                            std::string* why = nullptr) {
    return validate(schema_root, schema_root, report, why);
}

} // namespace schema_check
