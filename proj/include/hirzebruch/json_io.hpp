#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hirzebruch/arrangement.hpp"
#include "hirzebruch/cyclofield.hpp"
#include "hirzebruch/errors.hpp"

namespace hirzebruch::io {

using nlohmann::json;

inline json element_to_json(const CycloElement& e) { return to_strings(e); }

inline CycloElement element_from_json(const json& j, int order)
{
    if (!j.is_array()) throw ParseError("coefficient must be an array of \"p/q\" strings");
    std::vector<std::string> text;
    for (const auto& c : j) {
        if (c.is_string())
            text.push_back(c.get<std::string>());
        else if (c.is_number_integer())
            text.push_back(std::to_string(c.get<long long>()));
        else
            throw ParseError("coefficient entries must be strings or integers");
    }
    return from_strings(order, text);
}

inline json triple_to_json(const Triple& t)
{
    return json::array({element_to_json(t[0]), element_to_json(t[1]), element_to_json(t[2])});
}

/// {"name": str, "cyclotomic_order": m, "lines": [[coeff, coeff, coeff], ...]}
inline json arrangement_to_json(const Arrangement& arr)
{
    json lines = json::array();
    for (const auto& l : arr.lines()) lines.push_back(triple_to_json(l.coeffs));
    return {{"name", arr.name()}, {"cyclotomic_order", arr.field_order()}, {"lines", lines}};
}

inline Arrangement arrangement_from_json(const json& j)
{
    try {
        if (!j.is_object()) throw ParseError("arrangement must be a JSON object");
        if (!j.contains("cyclotomic_order") || !j.at("cyclotomic_order").is_number_integer())
            throw ParseError("missing integer field \"cyclotomic_order\"");
        const int order = j.at("cyclotomic_order").get<int>();
        if (order < 1) throw ParseError("cyclotomic_order must be positive");
        if (!j.contains("lines") || !j.at("lines").is_array()) throw ParseError("missing array field \"lines\"");
        std::vector<ProjLine> lines;
        for (const auto& l : j.at("lines")) {
            if (!l.is_array() || l.size() != 3) throw ParseError("each line needs exactly three coefficients");
            lines.emplace_back(element_from_json(l[0], order), element_from_json(l[1], order),
                               element_from_json(l[2], order));
        }
        std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "";
        return Arrangement(order, std::move(lines), std::move(name));
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed arrangement JSON: ") + e.what());
    }
}

inline json parse_json_text(const std::string& text, const std::string& origin)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
}

inline json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path);
}

}  // namespace hirzebruch::io
