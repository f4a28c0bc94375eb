#include "scheepers/embedded.hpp"

#include <string>

#include "scheepers/fact_dsl.hpp"
#include "scheepers/formats.hpp"

namespace scheepers {

const model_registry& default_registry() {
    static const model_registry registry = [] {
        auto text = embedded_file("models.txt");
        if (!text) throw corrupt_data("models.txt is not embedded");
        return load_registry(*text, "models.txt");
    }();
    return registry;
}

const knowledge_base& default_knowledge_base() {
    static const knowledge_base kb = [] {
        auto text = embedded_file("base.facts");
        if (!text) throw corrupt_data("base.facts is not embedded");
        return load_knowledge_base({"base.facts", std::string(*text)}, default_registry());
    }();
    return kb;
}

}  // namespace scheepers
