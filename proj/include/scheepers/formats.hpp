#ifndef SCHEEPERS_FORMATS_HPP
#define SCHEEPERS_FORMATS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "scheepers/combinatorics.hpp"
#include "scheepers/fact.hpp"
#include "scheepers/models.hpp"

namespace scheepers {

// Verdict tables: one line of n symbols (+ - ?) per row. A row may be
// followed by `framed: <col> <col> ...` listing its framed cells, which
// must be '-' cells.

std::string render_table(const judgment_table& t);

/// Throws bad_symbol (every bad character) or bad_shape.
judgment_table parse_table(std::string_view text, const std::string& origin = "<table>");

/// Structural problems of a 22x22 reference table: diagonal not all
/// Implies, Unknown count other than 55, framed count other than 21 or a
/// framed cell that is not NotImplies. Empty when it is sound.
std::vector<std::string> check_reference_invariants(const judgment_table& t);

/// The shipped transcription of the reference table. Throws corrupt_data
/// when it fails check_reference_invariants.
const judgment_table& load_reference_table();

// Model registry files:
//
//     constraint <expr> <= <expr> cite "<text>"
//     model <name> cite "<text>"
//     level <atom> <integer>

struct model_file {
    std::vector<zfc_constraint> constraints;
    std::vector<model> models;
    friend bool operator==(const model_file&, const model_file&) = default;
};

/// Throws syntax_errors.
model_file parse_models(std::string_view text, const std::string& origin = "<models>");
std::string render_models(const model_file& f);

/// parse_models, then model_registry validation.
model_registry load_registry(std::string_view text, const std::string& origin = "<models>");

// Family files: one row per line as `<word>/<tail>` (e.g. `0100/1`),
// arrays separated by blank lines.

/// Throws syntax_errors or bad_shape.
array_family parse_family(std::string_view text, const std::string& origin = "<family>");
std::string render_family(const array_family& f);

}  // namespace scheepers

#endif  // SCHEEPERS_FORMATS_HPP
