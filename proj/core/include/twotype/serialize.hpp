#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "twotype/actions.hpp"

namespace tt {

using json = nlohmann::json;

// built-in names: 1, Z<n>, S3, D4, Q8, K4; modules Z<m>-trivial, Z<m>-inv
FiniteGroup builtin_group(const std::string& name);
ModuleRef builtin_module(const FiniteGroup& g, const std::string& name);

// "sha256:<hex>" of the compact dump, keys sorted
std::string content_hash(const json& doc);

json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const json& doc, const std::string& path = "");
json hom_to_json(const AbHom& h);

// Named groups, modules, cochains, 2-types and pointed actions; documents
// refer to each other by content hash or by name within their section.
struct Workspace {
    std::map<std::string, FiniteGroup> groups;
    std::map<std::string, ModuleRef> modules;
    std::map<std::string, Cochain> cochains;
    std::map<std::string, TwoType> types;
    std::map<std::string, PointedAction> actions;

    // canonical form: every reference is a content hash
    json to_json() const;
};

// throws ParseError naming the document path
Workspace load_workspace(const json& doc);
json canonicalize(const json& doc);
std::string canonical_text(const json& doc);
json parse_document(const std::string& text, const std::string& source);

} // namespace tt
