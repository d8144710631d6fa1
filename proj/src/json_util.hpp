#pragma once
// Internal helpers shared by the JSON readers.

#include <algorithm>
#include <string>
#include <string_view>

#include <json.hpp>

#include "evident/error.hpp"

namespace evident::detail {

inline nlohmann::json parse_json(std::string_view text) {
    try {
        return nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        const auto end = std::min<std::size_t>(e.byte, text.size());
        const auto line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + end, '\n'));
        throw ParseError(line, e.what());
    }
}

inline const nlohmann::json& require_field(const nlohmann::json& object, const char* key, const std::string& where) {
    if (!object.is_object()) throw ParseError(0, where + " must be an object");
    auto it = object.find(key);
    if (it == object.end()) throw ParseError(0, where + " is missing \"" + key + "\"");
    return *it;
}

inline double require_number(const nlohmann::json& value, const std::string& where) {
    if (!value.is_number()) throw ParseError(0, where + " must be a number");
    return value.get<double>();
}

inline std::string require_string(const nlohmann::json& value, const std::string& where) {
    if (!value.is_string()) throw ParseError(0, where + " must be a string");
    return value.get<std::string>();
}

inline std::vector<std::string> require_string_list(const nlohmann::json& value, const std::string& where) {
    if (!value.is_array()) throw ParseError(0, where + " must be a list of strings");
    std::vector<std::string> out;
    for (const auto& item : value) out.push_back(require_string(item, where));
    return out;
}

}  // namespace evident::detail
