#include "scheepers/fact.hpp"

#include <algorithm>

#include "scheepers/error.hpp"

namespace scheepers {

std::string_view relation_name(bound_relation r) {
    switch (r) {
    case bound_relation::eq: return "eq";
    case bound_relation::ge: return "ge";
    case bound_relation::le: return "le";
    }
    return "?";
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

std::string_view relation_symbol(bound_relation r) {
    switch (r) {
    case bound_relation::eq: return "=";
    case bound_relation::ge: return ">=";
    case bound_relation::le: return "<=";
    }
    return "?";
}

}  // namespace

std::string describe(const fact& f) {
    return std::visit(
        overloaded{
            [](const arrow_fact& a) { return display_name(a.from) + " -> " + display_name(a.to); },
            [](const nonimp_fact& n) {
                std::string out = display_name(n.from) + " -/-> " + display_name(n.to);
                if (n.witness_model) out += " (model " + *n.witness_model + ")";
                return out;
            },
            [](const bound_fact& b) {
                return "non(" + display_name(b.target) + ") " +
                       std::string(relation_symbol(b.relation)) + " " + to_string(b.value);
            },
        },
        f.body);
}

std::string canonical_key(const fact& f) {
    auto key = std::visit(
        overloaded{
            [](const arrow_fact& a) { return "0 " + structural_ref(a.from) + " " + structural_ref(a.to); },
            [](const nonimp_fact& n) {
                return "1 " + structural_ref(n.from) + " " + structural_ref(n.to) + " " +
                       n.witness_model.value_or("");
            },
            [](const bound_fact& b) {
                return "2 " + structural_ref(b.target) + " " + std::string(relation_name(b.relation)) +
                       " " + to_string(b.value);
            },
        },
        f.body);
    return key + " | " + f.source;
}

std::string_view verdict_name(verdict v) {
    switch (v) {
    case verdict::unknown: return "Unknown";
    case verdict::implies: return "Implies";
    case verdict::not_implies: return "NotImplies";
    }
    return "?";
}

char verdict_symbol(verdict v) {
    switch (v) {
    case verdict::unknown: return '?';
    case verdict::implies: return '+';
    case verdict::not_implies: return '-';
    }
    return '?';
}

std::string_view rule_name(rule_id r) {
    switch (r) {
    case rule_id::fact: return "fact";
    case rule_id::r1: return "R1";
    case rule_id::r2: return "R2";
    case rule_id::r3a: return "R3a";
    case rule_id::r3b: return "R3b";
    case rule_id::r4: return "R4";
    case rule_id::r5: return "R5";
    case rule_id::r6: return "R6";
    }
    return "?";
}

void judgment_table::set_framed(std::size_t row, std::size_t col, bool on) {
    if (row >= size_ || col >= size_) throw bad_shape("framed cell outside the table");
    if (on)
        framed_.insert({row, col});
    else
        framed_.erase({row, col});
}

std::size_t judgment_table::count(verdict v) const {
    return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), v));
}

std::vector<cell_diff> diff(const judgment_table& a, const judgment_table& b) {
    if (a.size() != b.size())
        throw shape_mismatch("tables have sizes " + std::to_string(a.size()) + " and " +
                             std::to_string(b.size()));
    std::vector<cell_diff> out;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a.at(i, j) != b.at(i, j)) out.push_back({i, j, a.at(i, j), b.at(i, j)});
    return out;
}

}  // namespace scheepers
