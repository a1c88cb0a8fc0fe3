#ifndef WARING_TESTS_SCHEMA_CHECK_HPP
#define WARING_TESTS_SCHEMA_CHECK_HPP

// Validator for the subset of JSON Schema used by schemas/response.schema.json:
// type, enum, required, properties, items, oneOf, minimum and local $ref.

#include <json.hpp>

#include <string>
#include <vector>

namespace testing {

class SchemaCheck {
public:
    explicit SchemaCheck(nlohmann::json root) : root_(std::move(root)) {}

    std::vector<std::string> errors(const nlohmann::json& doc) const {
        std::vector<std::string> out;
        check(root_, doc, "$", out);
        return out;
    }

private:
    const nlohmann::json& resolve(const nlohmann::json& schema) const {
        if (!schema.contains("$ref")) return schema;
        std::string ref = schema.at("$ref").get<std::string>();
        return root_.at(nlohmann::json::json_pointer(ref.substr(1)));
    }

    static bool has_type(const nlohmann::json& v, const std::string& t) {
        if (t == "object") return v.is_object();
        if (t == "array") return v.is_array();
        if (t == "string") return v.is_string();
        if (t == "integer") return v.is_number_integer();
        if (t == "number") return v.is_number();
        if (t == "boolean") return v.is_boolean();
        if (t == "null") return v.is_null();
        return false;
    }

    void check(const nlohmann::json& raw, const nlohmann::json& v, const std::string& path, std::vector<std::string>& out) const {
        const nlohmann::json& s = resolve(raw);
        if (s.contains("type")) {
            bool ok = false;
            if (s.at("type").is_array()) {
                for (const auto& t : s.at("type")) ok = ok || has_type(v, t.get<std::string>());
            } else {
                ok = has_type(v, s.at("type").get<std::string>());
            }
            if (!ok) {
                out.push_back(path + ": wrong type");
                return;
            }
        }
        if (s.contains("enum")) {
            bool ok = false;
            for (const auto& e : s.at("enum")) ok = ok || e == v;
            if (!ok) out.push_back(path + ": value not in enum");
        }
        if (s.contains("minimum") && v.is_number() && v.get<double>() < s.at("minimum").get<double>()) {
            out.push_back(path + ": below minimum");
        }
        if (v.is_object()) {
            if (s.contains("required")) {
                for (const auto& k : s.at("required")) {
                    if (!v.contains(k.get<std::string>())) out.push_back(path + ": missing " + k.get<std::string>());
                }
            }
            if (s.contains("properties")) {
                for (const auto& [k, sub] : s.at("properties").items()) {
                    if (v.contains(k)) check(sub, v.at(k), path + "." + k, out);
                }
            }
        }
        if (v.is_array() && s.contains("items")) {
            for (std::size_t i = 0; i < v.size(); ++i) check(s.at("items"), v[i], path + "[" + std::to_string(i) + "]", out);
        }
        if (s.contains("oneOf")) {
            int matches = 0;
            for (const auto& alt : s.at("oneOf")) {
                std::vector<std::string> sub;
                check(alt, v, path, sub);
                if (sub.empty()) ++matches;
            }
            if (matches != 1) out.push_back(path + ": matches " + std::to_string(matches) + " oneOf branches");
        }
    }

    nlohmann::json root_;
};

}  // namespace testing

#endif  // WARING_TESTS_SCHEMA_CHECK_HPP
