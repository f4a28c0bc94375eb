#ifndef SCHEEPERS_FACT_HPP
#define SCHEEPERS_FACT_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "scheepers/cardinal.hpp"
#include "scheepers/property.hpp"

namespace scheepers {

struct arrow_fact {
    property_id from;
    property_id to;
    friend bool operator==(const arrow_fact&, const arrow_fact&) = default;
};

/// `from` does not imply `to`; the witness names a registered model when
/// the non-implication is justified by one.
struct nonimp_fact {
    property_id from;
    property_id to;
    std::optional<std::string> witness_model;
    friend bool operator==(const nonimp_fact&, const nonimp_fact&) = default;
};

enum class bound_relation { eq, ge, le };

std::string_view relation_name(bound_relation r);  // eq, ge, le

/// non(target) = / >= / <= value.
struct bound_fact {
    property_id target;
    bound_relation relation = bound_relation::eq;
    cardinal_expr value;
    friend bool operator==(const bound_fact&, const bound_fact&) = default;
};

struct fact {
    std::variant<arrow_fact, nonimp_fact, bound_fact> body;
    std::string source;

    friend bool operator==(const fact&, const fact&) = default;
};

/// One-line human-readable rendering (not the DSL form).
std::string describe(const fact& f);

/// Canonical sort key used to make the closure independent of fact order.
std::string canonical_key(const fact& f);

enum class verdict { unknown, implies, not_implies };

std::string_view verdict_name(verdict v);  // Unknown, Implies, NotImplies
char verdict_symbol(verdict v);            // ?, +, -

enum class statement_kind { implies, not_implies, lower_bound, upper_bound, exact_value };

/// A derived or base assertion about properties, addressed by index into the
/// owning knowledge base's property list.
struct statement {
    statement_kind kind = statement_kind::implies;
    std::size_t first = 0;
    std::size_t second = 0;  // unused for bound statements
    std::optional<cardinal_expr> value;

    friend bool operator==(const statement&, const statement&) = default;
};

enum class rule_id { fact, r1, r2, r3a, r3b, r4, r5, r6 };

std::string_view rule_name(rule_id r);  // fact, R1, ..., R6

struct proof_step {
    rule_id rule = rule_id::fact;
    std::vector<std::size_t> premises;       // indices of earlier steps
    std::optional<std::size_t> fact_index;   // for rule_id::fact
    std::optional<std::string> witness;      // model name for R4
    statement conclusion;

    friend bool operator==(const proof_step&, const proof_step&) = default;
};

struct proof_trace {
    std::vector<proof_step> steps;
    friend bool operator==(const proof_trace&, const proof_trace&) = default;
};

struct judgment {
    verdict value = verdict::unknown;
    proof_trace trace;  // empty iff value == unknown
};

/// Square verdict grid plus the cells flagged as newly settled. Frames are
/// metadata; a framed cell is semantically a plain NotImplies.
class judgment_table {
public:
    judgment_table() = default;
    explicit judgment_table(std::size_t size)
        : size_(size), cells_(size * size, verdict::unknown) {}

    std::size_t size() const noexcept { return size_; }
    verdict at(std::size_t row, std::size_t col) const { return cells_.at(row * size_ + col); }
    void set(std::size_t row, std::size_t col, verdict v) { cells_.at(row * size_ + col) = v; }

    const std::set<std::pair<std::size_t, std::size_t>>& framed() const noexcept { return framed_; }
    bool is_framed(std::size_t row, std::size_t col) const { return framed_.contains({row, col}); }
    void set_framed(std::size_t row, std::size_t col, bool on = true);

    std::size_t count(verdict v) const;

    friend bool operator==(const judgment_table&, const judgment_table&) = default;

private:
    std::size_t size_ = 0;
    std::vector<verdict> cells_;
    std::set<std::pair<std::size_t, std::size_t>> framed_;
};

struct cell_diff {
    std::size_t row = 0;
    std::size_t col = 0;
    verdict left = verdict::unknown;
    verdict right = verdict::unknown;
    friend bool operator==(const cell_diff&, const cell_diff&) = default;
};

/// All cells where the verdicts differ, in (row, col) order. Frames are
/// ignored. Throws shape_mismatch for tables of different size.
std::vector<cell_diff> diff(const judgment_table& a, const judgment_table& b);

}  // namespace scheepers

#endif  // SCHEEPERS_FACT_HPP
