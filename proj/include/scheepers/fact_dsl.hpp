#ifndef SCHEEPERS_FACT_DSL_HPP
#define SCHEEPERS_FACT_DSL_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "scheepers/fact.hpp"
#include "scheepers/inference.hpp"
#include "scheepers/models.hpp"

namespace scheepers {

/// A serial number or a structural property identity.
using property_ref = std::variant<int, property_id>;

struct property_decl {
    int serial = 0;
    std::string name;
    std::optional<cardinal_expr> non;
    friend bool operator==(const property_decl&, const property_decl&) = default;
};

struct variant_decl {
    property_id id;
    std::optional<cardinal_expr> non;
    friend bool operator==(const variant_decl&, const variant_decl&) = default;
};

struct arrow_decl {
    property_ref from;
    property_ref to;
    friend bool operator==(const arrow_decl&, const arrow_decl&) = default;
};

struct nonimp_decl {
    property_ref from;
    property_ref to;
    std::optional<std::string> model;
    friend bool operator==(const nonimp_decl&, const nonimp_decl&) = default;
};

struct card_decl {
    property_ref target;
    bound_relation relation = bound_relation::eq;
    cardinal_expr value;
    friend bool operator==(const card_decl&, const card_decl&) = default;
};

struct include_decl {
    std::string path;
    friend bool operator==(const include_decl&, const include_decl&) = default;
};

struct declaration {
    std::variant<property_decl, variant_decl, arrow_decl, nonimp_decl, card_decl, include_decl> body;
    std::optional<std::string> cite;
    std::size_t line = 0;  // not part of equality

    friend bool operator==(const declaration& a, const declaration& b) {
        return a.body == b.body && a.cite == b.cite;
    }
};

struct fact_file {
    std::vector<declaration> declarations;
    friend bool operator==(const fact_file&, const fact_file&) = default;
};

/// Line-oriented fact language:
///
///     property <serial> "<name>" [non=<expr>]
///     variant <kind> <from> <to> <borel|open|clopen> [non=<expr>]
///     arrow <ref> <ref>
///     nonimp <ref> <ref> (model=<name> | cite="<text>")
///     card <ref> (eq|ge|le) <expr>
///     include "<path>"
///
/// Any declaration may end with cite="<text>"; '#' starts a comment.
/// Throws syntax_errors with every malformed line.
fact_file parse_facts(std::string_view text, const std::string& origin = "<facts>");

std::string render_declaration(const declaration& d);
std::string render_facts(const fact_file& f);

struct source_text {
    std::string origin;
    std::string text;
};

/// Maps an include path, as written in `from_origin`, to its text.
using include_resolver =
    std::function<std::optional<source_text>(const std::string& path, const std::string& from_origin)>;

/// From an embedded file, only embedded files; otherwise the filesystem
/// relative to the including file, falling back to embedded files.
include_resolver default_resolver();

/// Expands includes and resolves references, turning declarations into
/// properties and facts. A fact's source is its cite, or origin:line.
/// Throws syntax_errors or invalid_knowledge_base.
knowledge_base load_knowledge_base(const source_text& root, const model_registry& registry,
                                   const include_resolver& resolve = default_resolver());

}  // namespace scheepers

#endif  // SCHEEPERS_FACT_DSL_HPP
