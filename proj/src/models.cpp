#include "scheepers/models.hpp"

#include <algorithm>
#include <set>

#include "scheepers/error.hpp"

namespace scheepers {

std::optional<int> model::level(cardinal_atom a) const {
    auto it = levels.find(a);
    if (it == levels.end()) return std::nullopt;
    return it->second;
}

std::optional<int> try_eval(const cardinal_expr& e, const model& m) {
    if (e.kind() == cardinal_expr::op::atom) return m.level(e.atom());
    std::optional<int> acc;
    for (const auto& c : e.children()) {
        auto v = try_eval(c, m);
        if (!v) return std::nullopt;
        if (!acc)
            acc = v;
        else
            acc = e.kind() == cardinal_expr::op::min ? std::min(*acc, *v) : std::max(*acc, *v);
    }
    return acc;
}

int eval(const cardinal_expr& e, const model& m) {
    for (auto a : atoms_of(e))
        if (!m.level(a))
            throw unknown_atom("atom " + std::string(atom_name(a)) + " has no level in model " + m.name);
    return *try_eval(e, m);
}

std::vector<violation> validate_model(const model& m, std::span<const zfc_constraint> constraints) {
    std::vector<violation> out;
    auto aleph1 = m.level(cardinal_atom::aleph1);
    auto c = m.level(cardinal_atom::c);
    if (aleph1 != 1) out.push_back({"aleph1 at level 1", aleph1.value_or(0), 1});
    int top = 0;
    for (auto [a, level] : m.levels) top = std::max(top, level);
    if (c != top) out.push_back({"c at the top level", c.value_or(0), top});
    for (auto [a, level] : m.levels)
        if (level < 1) out.push_back({std::string(atom_name(a)) + " >= level 1", level, 1});

    for (const auto& k : constraints) {
        auto l = try_eval(k.lhs, m);
        auto r = try_eval(k.rhs, m);
        if (!l || !r) continue;
        if (*l > *r) out.push_back({to_string(k.lhs) + " <= " + to_string(k.rhs), *l, *r});
    }
    return out;
}

namespace {

// Atoms a with a <= x guaranteed by one constraint side: for lhs = max{...}
// every child is below; for rhs = min{...} the lhs is below every child.
std::vector<cardinal_atom> lower_atoms(const cardinal_expr& e) {
    if (e.kind() == cardinal_expr::op::atom) return {e.atom()};
    if (e.kind() == cardinal_expr::op::max) {
        std::vector<cardinal_atom> out;
        for (const auto& c : e.children())
            if (c.kind() == cardinal_expr::op::atom) out.push_back(c.atom());
        return out;
    }
    return {};
}

std::vector<cardinal_atom> upper_atoms(const cardinal_expr& e) {
    if (e.kind() == cardinal_expr::op::atom) return {e.atom()};
    if (e.kind() == cardinal_expr::op::min) {
        std::vector<cardinal_atom> out;
        for (const auto& c : e.children())
            if (c.kind() == cardinal_expr::op::atom) out.push_back(c.atom());
        return out;
    }
    return {};
}

}  // namespace

model_registry::model_registry(std::vector<model> models, std::vector<zfc_constraint> constraints)
    : models_(std::move(models)), constraints_(std::move(constraints)) {
    std::string problems;
    std::set<std::string> names;
    for (const auto& m : models_) {
        if (!names.insert(m.name).second) problems += "\n  duplicate model name " + m.name;
        if (m.citation.empty()) problems += "\n  model " + m.name + " has no citation";
        for (const auto& v : validate_model(m, constraints_))
            problems += "\n  model " + m.name + " violates " + v.constraint + " (" +
                        std::to_string(v.lhs_level) + " > " + std::to_string(v.rhs_level) + ")";
    }
    if (!problems.empty()) throw invalid_registry("invalid model registry:" + problems);

    for (auto a : all_atoms) {
        atom_le_[{a, a}] = true;
        atom_le_[{cardinal_atom::aleph1, a}] = true;
        atom_le_[{a, cardinal_atom::c}] = true;
    }
    for (const auto& k : constraints_)
        for (auto l : lower_atoms(k.lhs))
            for (auto r : upper_atoms(k.rhs)) atom_le_[{l, r}] = true;
    for (auto k : all_atoms)
        for (auto i : all_atoms)
            for (auto j : all_atoms)
                if (atom_le_.contains({i, k}) && atom_le_.contains({k, j})) atom_le_[{i, j}] = true;
}

const model* model_registry::find(std::string_view name) const {
    for (const auto& m : models_)
        if (m.name == name) return &m;
    return nullptr;
}

std::optional<std::string> model_registry::consistently_less(const cardinal_expr& x,
                                                              const cardinal_expr& y) const {
    for (const auto& m : models_) {
        auto a = try_eval(x, m);
        auto b = try_eval(y, m);
        if (a && b && *a < *b) return m.name;
    }
    return std::nullopt;
}

bool model_registry::provably_le(const cardinal_expr& x, const cardinal_expr& y) const {
    using op = cardinal_expr::op;
    if (x == y) return true;
    if (x.kind() == op::max)
        return std::all_of(x.children().begin(), x.children().end(),
                           [&](const auto& c) { return provably_le(c, y); });
    if (y.kind() == op::min)
        return std::all_of(y.children().begin(), y.children().end(),
                           [&](const auto& c) { return provably_le(x, c); });
    if (x.kind() == op::min &&
        std::any_of(x.children().begin(), x.children().end(),
                    [&](const auto& c) { return provably_le(c, y); }))
        return true;
    if (y.kind() == op::max &&
        std::any_of(y.children().begin(), y.children().end(),
                    [&](const auto& c) { return provably_le(x, c); }))
        return true;
    if (x.kind() == op::atom && y.kind() == op::atom) return atom_le_.contains({x.atom(), y.atom()});
    return false;
}

}  // namespace scheepers
