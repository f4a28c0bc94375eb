#ifndef SCHEEPERS_TESTS_SUPPORT_HPP
#define SCHEEPERS_TESTS_SUPPORT_HPP

#include <string>
#include <string_view>

#include "scheepers/embedded.hpp"
#include "scheepers/fact_dsl.hpp"

namespace scheepers::testing {

inline include_resolver embedded_resolver() {
    return [](const std::string& path, const std::string&) -> std::optional<source_text> {
        if (auto text = embedded_file(path)) return source_text{path, std::string(*text)};
        return std::nullopt;
    };
}

inline std::string embedded_text(std::string_view name) { return std::string(*embedded_file(name)); }

/// diagram.facts followed by base.facts, without the include line.
inline std::string flattened_base() {
    std::string base = embedded_text("base.facts");
    const std::string inc = "include \"diagram.facts\"\n";
    base.erase(base.find(inc), inc.size());
    return embedded_text("diagram.facts") + base;
}

inline knowledge_base kb_from(const std::string& text, const model_registry& registry = default_registry()) {
    return load_knowledge_base({"test.facts", text}, registry, embedded_resolver());
}

/// Replaces the first occurrence of `from`; throws if it is absent.
inline std::string replace_once(std::string text, std::string_view from, std::string_view to) {
    auto at = text.find(from);
    if (at == std::string::npos) throw std::runtime_error("text not found: " + std::string(from));
    return text.replace(at, from.size(), to);
}

/// Drops every line containing `needle`.
inline std::string drop_lines(const std::string& text, std::string_view needle) {
    std::string out;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        auto line = std::string_view(text).substr(start, end - start);
        if (line.find(needle) == std::string_view::npos) {
            out += line;
            out += '\n';
        }
        start = end + 1;
    }
    return out;
}

}  // namespace scheepers::testing

#endif
