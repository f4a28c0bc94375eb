#ifndef SCHEEPERS_INFERENCE_HPP
#define SCHEEPERS_INFERENCE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "scheepers/error.hpp"
#include "scheepers/fact.hpp"
#include "scheepers/models.hpp"
#include "scheepers/property.hpp"

namespace scheepers {

/// Properties and base facts in canonical order: numbered properties by
/// serial, then the rest structurally; facts sorted by canonical_key with
/// exact duplicates removed.
struct knowledge_base {
    std::vector<property> properties;
    std::vector<fact> facts;

    std::optional<std::size_t> index_of(const property_id& id) const;
    /// Throws unknown_property.
    std::size_t require(const property_id& id) const;
};

/// Validates endpoints, citations and witness models against `registry`
/// and returns the canonical form. Throws invalid_knowledge_base.
knowledge_base make_knowledge_base(std::vector<property> properties, std::vector<fact> facts,
                                   const model_registry& registry);

/// How one statement entered the closure.
struct derivation {
    statement conclusion;
    rule_id rule = rule_id::fact;
    std::vector<std::size_t> premises;  // earlier derivation indices
    std::optional<std::size_t> fact_index;
    std::optional<std::string> witness;
    std::size_t depth = 0;
};

struct cardinality {
    std::optional<cardinal_expr> exact;
    std::vector<cardinal_expr> lower;  // canonical text order
    std::vector<cardinal_expr> upper;
};

class closure_result {
public:
    const knowledge_base& kb() const noexcept { return kb_; }
    std::size_t iterations() const noexcept { return iterations_; }
    const std::vector<derivation>& derivations() const noexcept { return derivations_; }

    verdict cell(std::size_t row, std::size_t col) const;
    judgment judgment_at(std::size_t row, std::size_t col) const;
    cardinality interval(std::size_t prop) const;

    /// Trace of one derivation: its ancestors in derivation order.
    proof_trace trace_of(std::size_t derivation_index) const;

    /// 22x22 verdicts over the numbered properties; throws bad_shape when
    /// one of the serials is missing from the knowledge base.
    judgment_table serial_table() const;

private:
    friend class closure_engine;

    knowledge_base kb_;
    std::size_t iterations_ = 0;
    std::vector<derivation> derivations_;
    std::vector<std::size_t> implies_;      // n*n derivation index or npos
    std::vector<std::size_t> not_implies_;  // n*n
};

/// Raised when the fixpoint would judge a pair both ways.
class contradiction : public error {
public:
    contradiction(property_id from, property_id to, proof_trace implies_trace,
                  proof_trace not_implies_trace, const std::string& rendered);

    const property_id& from() const noexcept { return from_; }
    const property_id& to() const noexcept { return to_; }
    const proof_trace& implies_trace() const noexcept { return implies_trace_; }
    const proof_trace& not_implies_trace() const noexcept { return not_implies_trace_; }

private:
    property_id from_;
    property_id to_;
    proof_trace implies_trace_;
    proof_trace not_implies_trace_;
};

/// Least fixpoint of rules R1..R6 over the base facts; rounds are
/// breadth-first, so every statement keeps a derivation of minimal depth,
/// ties broken by rule order then index order. Throws contradiction.
closure_result close(const knowledge_base& kb, const model_registry& registry);

/// Throws unknown_property.
judgment query(const closure_result& result, const property_id& p, const property_id& q);

/// Rendered trace, one step per line; throws nothing_to_explain on an
/// Unknown cell.
std::string explain(const closure_result& result, const property_id& p, const property_id& q);

std::string render_trace(const closure_result& result, const proof_trace& trace);

std::string render_statement(const knowledge_base& kb, const statement& s);

cardinality derive_cardinality(const closure_result& result, const property_id& p);

/// `non(P) = e`, or `lower <= non(P) <= upper` over settled atoms with
/// provably dominated bounds pruned, followed by a line for bounds that
/// mention an unsettled atom.
std::string render_cardinality(const closure_result& result, const model_registry& registry,
                               const property_id& p);

/// Re-checks every step of `trace` against the rule definitions, the base
/// facts and the registry. Returns the first failure, or nothing.
std::optional<std::string> replay_trace(const closure_result& result, const model_registry& registry,
                                        const proof_trace& trace);

}  // namespace scheepers

#endif  // SCHEEPERS_INFERENCE_HPP
