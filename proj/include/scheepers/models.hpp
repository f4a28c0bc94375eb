#ifndef SCHEEPERS_MODELS_HPP
#define SCHEEPERS_MODELS_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scheepers/cardinal.hpp"

namespace scheepers {

/// A named configuration of the continuum: each atom sits at a level,
/// 1 = aleph1 and the top level = c. Atoms may be left out.
struct model {
    std::string name;
    std::string citation;
    std::map<cardinal_atom, int> levels;

    std::optional<int> level(cardinal_atom a) const;

    friend bool operator==(const model&, const model&) = default;
};

/// lhs <= rhs holds in ZFC.
struct zfc_constraint {
    cardinal_expr lhs;
    cardinal_expr rhs;
    std::string citation;

    friend bool operator==(const zfc_constraint&, const zfc_constraint&) = default;
};

struct violation {
    std::string constraint;
    int lhs_level = 0;
    int rhs_level = 0;
};

/// Throws unknown_atom when an atom of `e` has no level in `m`.
int eval(const cardinal_expr& e, const model& m);

/// Like eval but absent when an atom is missing.
std::optional<int> try_eval(const cardinal_expr& e, const model& m);

/// Empty iff the model satisfies every constraint, has aleph1 at level 1 and
/// c at its top level. Constraints mentioning an atom the model leaves out
/// are skipped.
std::vector<violation> validate_model(const model& m, std::span<const zfc_constraint> constraints);

/// Validated, immutable collection of models and the constraints they obey.
class model_registry {
public:
    model_registry() = default;
    /// Throws invalid_registry listing every violation or duplicate name.
    model_registry(std::vector<model> models, std::vector<zfc_constraint> constraints);

    const std::vector<model>& models() const noexcept { return models_; }
    const std::vector<zfc_constraint>& constraints() const noexcept { return constraints_; }
    const model* find(std::string_view name) const;

    /// First registered model (in registration order) where x evaluates
    /// strictly below y; models missing an atom of x or y are skipped.
    std::optional<std::string> consistently_less(const cardinal_expr& x, const cardinal_expr& y) const;

    /// Sound, incomplete entailment x <= y from the constraint list: atom
    /// order is the transitive closure of atom-to-atom constraints (min/max
    /// sides are split), then min/max are decomposed structurally.
    bool provably_le(const cardinal_expr& x, const cardinal_expr& y) const;

private:
    std::vector<model> models_;
    std::vector<zfc_constraint> constraints_;
    std::map<std::pair<cardinal_atom, cardinal_atom>, bool> atom_le_;
};

}  // namespace scheepers

#endif  // SCHEEPERS_MODELS_HPP
