#ifndef SCHEEPERS_EMBEDDED_HPP
#define SCHEEPERS_EMBEDDED_HPP

#include <optional>
#include <string_view>

#include "scheepers/inference.hpp"
#include "scheepers/models.hpp"

namespace scheepers {

/// Contents of a shipped data file by name: base.facts, diagram.facts,
/// models.txt, reference_table.txt.
std::optional<std::string_view> embedded_file(std::string_view name);

/// Parsed once from models.txt.
const model_registry& default_registry();

/// Parsed once from base.facts against default_registry().
const knowledge_base& default_knowledge_base();

}  // namespace scheepers

#endif  // SCHEEPERS_EMBEDDED_HPP
