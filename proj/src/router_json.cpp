#include <set>

#include "evident/router.hpp"
#include "json_util.hpp"

namespace evident {

using detail::require_field;
using detail::require_number;
using detail::require_string;

std::vector<SourceDescriptor> parse_sources(std::string_view text) {
    const auto doc = detail::parse_json(text);
    if (!doc.is_array()) throw ParseError(0, "sources file must be a list of source objects");
    std::vector<SourceDescriptor> out;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto where = "source[" + std::to_string(i) + "]";
        const auto& item = doc[i];
        SourceDescriptor source;
        source.id = require_string(require_field(item, "id", where), where + ".id");
        const auto& priority = require_field(item, "priority", where);
        if (!priority.is_number_integer()) throw ParseError(0, where + ".priority must be an integer");
        source.priority = priority.get<int>();
        const auto& schema = require_field(item, "schema", where);
        if (!schema.is_object()) throw ParseError(0, where + ".schema must be an object");
        for (const auto& [attribute, weight] : schema.items()) {
            source.schema[attribute] = require_number(weight, where + ".schema." + attribute);
        }
        validate(source);
        if (!seen.insert(source.id).second) throw Error(ErrorCode::DuplicateSource, "source '" + source.id + "' repeated");
        out.push_back(std::move(source));
    }
    return out;
}

namespace {

QueryExpr query_from_json(const nlohmann::json& node, const std::string& where) {
    const auto op = require_string(require_field(node, "op", where), where + ".op");
    if (op == "atom") return QueryExpr::atom(require_string(require_field(node, "name", where), where + ".name"));

    const auto& children_json = require_field(node, "children", where);
    if (!children_json.is_array()) throw ParseError(0, where + ".children must be a list");
    std::vector<QueryExpr> children;
    for (std::size_t i = 0; i < children_json.size(); ++i) {
        children.push_back(query_from_json(children_json[i], where + ".children[" + std::to_string(i) + "]"));
    }
    if (op == "and") return QueryExpr::all_of(std::move(children));
    if (op == "or") return QueryExpr::any_of(std::move(children));
    if (op == "implies") {
        if (children.size() != 2) throw ParseError(0, where + ": implies takes exactly two children");
        return QueryExpr::implies(std::move(children[0]), std::move(children[1]));
    }
    throw ParseError(0, where + ": unknown op \"" + op + "\"");
}

}  // namespace

QueryExpr parse_query(std::string_view text) { return query_from_json(detail::parse_json(text), "query"); }

}  // namespace evident
