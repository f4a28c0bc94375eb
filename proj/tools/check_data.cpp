// Loads every shipped data file and checks the closure against the
// reference table.

#include <iostream>

#include "scheepers/embedded.hpp"
#include "scheepers/formats.hpp"
#include "scheepers/inference.hpp"

int main() {
    using namespace scheepers;
    try {
        const auto& reference = load_reference_table();
        auto result = close(default_knowledge_base(), default_registry());
        auto d = diff(result.serial_table(), reference);
        if (!d.empty()) {
            for (const auto& c : d)
                std::cerr << "cell (" << c.row << ", " << c.col << "): computed " << verdict_name(c.left)
                          << ", reference " << verdict_name(c.right) << "\n";
            return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "check_data: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
