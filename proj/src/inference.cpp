#include "scheepers/inference.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace scheepers {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

bool property_order(const property& a, const property& b) {
    if (a.serial && b.serial) return *a.serial < *b.serial;
    if (a.serial || b.serial) return a.serial.has_value();
    return a.id < b.id;
}

std::vector<statement> statements_of(const fact& f, const knowledge_base& kb) {
    return std::visit(
        overloaded{
            [&](const arrow_fact& a) {
                return std::vector<statement>{
                    {statement_kind::implies, kb.require(a.from), kb.require(a.to), std::nullopt}};
            },
            [&](const nonimp_fact& n) {
                return std::vector<statement>{
                    {statement_kind::not_implies, kb.require(n.from), kb.require(n.to), std::nullopt}};
            },
            [&](const bound_fact& b) {
                auto i = kb.require(b.target);
                auto v = normalize_expr(b.value);
                std::vector<statement> out;
                if (b.relation != bound_relation::le)
                    out.push_back({statement_kind::lower_bound, i, 0, v});
                if (b.relation != bound_relation::ge)
                    out.push_back({statement_kind::upper_bound, i, 0, v});
                return out;
            },
        },
        f.body);
}

}  // namespace

std::optional<std::size_t> knowledge_base::index_of(const property_id& id) const {
    for (std::size_t i = 0; i < properties.size(); ++i)
        if (properties[i].id == id) return i;
    return std::nullopt;
}

std::size_t knowledge_base::require(const property_id& id) const {
    if (auto i = index_of(id)) return *i;
    throw unknown_property("property " + display_name(id) + " is not registered");
}

knowledge_base make_knowledge_base(std::vector<property> properties, std::vector<fact> facts,
                                   const model_registry& registry) {
    std::string problems;
    std::set<property_id> ids;
    for (const auto& p : properties) {
        if (!ids.insert(p.id).second) problems += "\n  duplicate property " + display_name(p.id);
        auto expected = serial_of(p.id);
        if (p.serial != expected) {
            problems += "\n  property " + display_name(p.id) + " has serial " +
                        (p.serial ? std::to_string(*p.serial) : std::string("none")) +
                        ", the diagram gives " +
                        (expected ? std::to_string(*expected) : std::string("none"));
        }
    }

    auto check_endpoint = [&](const property_id& id) {
        if (!ids.contains(id)) problems += "\n  unregistered property " + display_name(id);
    };
    for (const auto& f : facts) {
        if (f.source.empty()) problems += "\n  fact without a source: " + describe(f);
        std::visit(overloaded{
                       [&](const arrow_fact& a) {
                           check_endpoint(a.from);
                           check_endpoint(a.to);
                           if (a.from == a.to) problems += "\n  arrow from a property to itself: " + describe(f);
                       },
                       [&](const nonimp_fact& n) {
                           check_endpoint(n.from);
                           check_endpoint(n.to);
                           if (n.witness_model && !registry.find(*n.witness_model))
                               problems += "\n  unknown witness model " + *n.witness_model;
                       },
                       [&](const bound_fact& b) {
                           check_endpoint(b.target);
                           try {
                               normalize_expr(b.value);
                           } catch (const malformed_expr& e) {
                               problems += "\n  " + std::string(e.what());
                           }
                       },
                   },
                   f.body);
    }
    if (!problems.empty()) throw invalid_knowledge_base("invalid knowledge base:" + problems);

    std::sort(properties.begin(), properties.end(), property_order);
    std::stable_sort(facts.begin(), facts.end(),
                     [](const fact& a, const fact& b) { return canonical_key(a) < canonical_key(b); });
    facts.erase(std::unique(facts.begin(), facts.end()), facts.end());
    return knowledge_base{std::move(properties), std::move(facts)};
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string name_of(const knowledge_base& kb, std::size_t i) {
    return display_name(kb.properties.at(i).id);
}

}  // namespace

std::string render_statement(const knowledge_base& kb, const statement& s) {
    switch (s.kind) {
    case statement_kind::implies: return name_of(kb, s.first) + " -> " + name_of(kb, s.second);
    case statement_kind::not_implies: return name_of(kb, s.first) + " -/-> " + name_of(kb, s.second);
    case statement_kind::lower_bound:
        return to_string(*s.value) + " <= non(" + name_of(kb, s.first) + ")";
    case statement_kind::upper_bound:
        return "non(" + name_of(kb, s.first) + ") <= " + to_string(*s.value);
    case statement_kind::exact_value:
        return "non(" + name_of(kb, s.first) + ") = " + to_string(*s.value);
    }
    return "?";
}

std::string render_trace(const closure_result& result, const proof_trace& trace) {
    std::string out;
    const auto& kb = result.kb();
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& step = trace.steps[i];
        out += std::to_string(i + 1) + ". [" + std::string(rule_name(step.rule)) + "] " +
               render_statement(kb, step.conclusion);
        if (step.fact_index) out += "    (source: " + kb.facts.at(*step.fact_index).source + ")";
        if (!step.premises.empty()) {
            out += "    from";
            for (std::size_t k = 0; k < step.premises.size(); ++k)
                out += (k ? ", " : " ") + std::to_string(step.premises[k] + 1);
        }
        if (step.witness) {
            const auto& prem = trace.steps;
            const auto& lower = prem.at(step.premises.at(0)).conclusion;
            const auto& upper = prem.at(step.premises.at(1)).conclusion;
            out += "; model " + *step.witness + ": " + to_string(*upper.value) + " < " +
                   to_string(*lower.value);
        }
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Fixpoint

contradiction::contradiction(property_id from, property_id to, proof_trace implies_trace,
                             proof_trace not_implies_trace, const std::string& rendered)
    : error(rendered),
      from_(from),
      to_(to),
      implies_trace_(std::move(implies_trace)),
      not_implies_trace_(std::move(not_implies_trace)) {}

class closure_engine {
public:
    closure_engine(const knowledge_base& kb, const model_registry& registry)
        : registry_(registry), n_(kb.properties.size()) {
        result_.kb_ = kb;
        result_.implies_.assign(n_ * n_, npos);
        result_.not_implies_.assign(n_ * n_, npos);
        lower_.resize(n_);
        upper_.resize(n_);
        exact_.resize(n_);
    }

    closure_result run() {
        const auto& kb = result_.kb_;
        for (std::size_t f = 0; f < kb.facts.size(); ++f)
            for (auto& s : statements_of(kb.facts[f], kb)) {
                derivation d;
                d.conclusion = std::move(s);
                d.fact_index = f;
                add(std::move(d));
            }
        raise_conflict();

        const std::size_t max_rounds = n_ * n_ + 2;
        for (std::size_t round = 1;; ++round) {
            if (round > max_rounds) throw std::logic_error("closure did not reach a fixpoint");
            limit_ = derivations().size();
            depth_ = round;
            apply_r1();
            apply_r2();
            apply_r3a();
            apply_r3b();
            apply_r4();
            apply_r5();
            apply_r6();
            raise_conflict();
            result_.iterations_ = round;
            if (derivations().size() == limit_) break;
        }
        return std::move(result_);
    }

private:
    struct bound_entry {
        std::size_t expr;
        std::size_t deriv;
    };

    const std::vector<derivation>& derivations() const { return result_.derivations_; }
    std::size_t& implies(std::size_t i, std::size_t j) { return result_.implies_[i * n_ + j]; }
    std::size_t& not_implies(std::size_t i, std::size_t j) { return result_.not_implies_[i * n_ + j]; }
    bool visible(std::size_t d) const { return d < limit_; }

    std::size_t intern(const cardinal_expr& e) {
        auto key = to_string(e);
        auto [it, inserted] = expr_ids_.try_emplace(key, exprs_.size());
        if (inserted) {
            exprs_.push_back(e);
            std::vector<std::optional<int>> row;
            for (const auto& m : registry_.models()) row.push_back(try_eval(e, m));
            values_.push_back(std::move(row));
        }
        return it->second;
    }

    static std::size_t find_bound(const std::vector<bound_entry>& v, std::size_t expr) {
        for (const auto& b : v)
            if (b.expr == expr) return b.deriv;
        return npos;
    }

    void add(derivation d) {
        auto& s = d.conclusion;
        const std::size_t index = derivations().size();
        d.depth = d.fact_index ? 0 : depth_;
        switch (s.kind) {
        case statement_kind::implies:
            if (implies(s.first, s.second) != npos) return;
            if (not_implies(s.first, s.second) != npos) conflicts_.emplace_back(index, not_implies(s.first, s.second));
            implies(s.first, s.second) = index;
            break;
        case statement_kind::not_implies:
            if (not_implies(s.first, s.second) != npos) return;
            if (implies(s.first, s.second) != npos) conflicts_.emplace_back(implies(s.first, s.second), index);
            not_implies(s.first, s.second) = index;
            break;
        case statement_kind::lower_bound:
        case statement_kind::upper_bound:
        case statement_kind::exact_value: {
            auto& list = s.kind == statement_kind::lower_bound   ? lower_[s.first]
                         : s.kind == statement_kind::upper_bound ? upper_[s.first]
                                                                 : exact_[s.first];
            auto id = intern(*s.value);
            if (find_bound(list, id) != npos) return;
            list.push_back({id, index});
            break;
        }
        }
        result_.derivations_.push_back(std::move(d));
    }

    // Reports the conflict of least combined depth, so an injected fact is
    // blamed before its consequences.
    void raise_conflict() {
        if (conflicts_.empty()) return;
        auto weight = [&](const std::pair<std::size_t, std::size_t>& c) {
            return derivations()[c.first].depth + derivations()[c.second].depth;
        };
        auto best = std::min_element(conflicts_.begin(), conflicts_.end(),
                                     [&](const auto& a, const auto& b) { return weight(a) < weight(b); });
        conflict(best->first, best->second);
    }

    [[noreturn]] void conflict(std::size_t implies_index, std::size_t not_implies_index) {
        auto it = result_.trace_of(implies_index);
        auto nt = result_.trace_of(not_implies_index);
        const auto& s = derivations()[implies_index].conclusion;
        const auto& kb = result_.kb_;
        std::string text = "contradiction: " + name_of(kb, s.first) + " is judged both to imply and not to imply " +
                           name_of(kb, s.second) + "\n--- implication trace\n" + render_trace(result_, it) +
                           "--- non-implication trace\n" + render_trace(result_, nt);
        throw contradiction(kb.properties[s.first].id, kb.properties[s.second].id, std::move(it),
                            std::move(nt), text);
    }

    void derive(statement_kind kind, std::size_t a, std::size_t b, rule_id rule,
                std::vector<std::size_t> premises, std::optional<cardinal_expr> value = std::nullopt,
                std::optional<std::string> witness = std::nullopt) {
        derivation d;
        d.conclusion = {kind, a, b, std::move(value)};
        d.rule = rule;
        d.premises = std::move(premises);
        d.witness = std::move(witness);
        add(std::move(d));
    }

    // R1: P -> P.
    void apply_r1() {
        for (std::size_t i = 0; i < n_; ++i)
            if (implies(i, i) == npos) derive(statement_kind::implies, i, i, rule_id::r1, {});
    }

    // R2: P -> Q, Q -> R  =>  P -> R.
    void apply_r2() {
        for (std::size_t p = 0; p < n_; ++p)
            for (std::size_t r = 0; r < n_; ++r) {
                if (implies(p, r) != npos) continue;
                for (std::size_t q = 0; q < n_; ++q) {
                    if (q == p || q == r) continue;
                    auto a = implies(p, q), b = implies(q, r);
                    if (a != npos && b != npos && visible(a) && visible(b)) {
                        derive(statement_kind::implies, p, r, rule_id::r2, {a, b});
                        break;
                    }
                }
            }
    }

    // R3a: P -> Q, K -/-> Q  =>  K -/-> P.
    void apply_r3a() {
        for (std::size_t k = 0; k < n_; ++k)
            for (std::size_t p = 0; p < n_; ++p) {
                if (not_implies(k, p) != npos) continue;
                for (std::size_t q = 0; q < n_; ++q) {
                    if (q == p) continue;
                    auto a = implies(p, q), b = not_implies(k, q);
                    if (a != npos && b != npos && visible(a) && visible(b)) {
                        derive(statement_kind::not_implies, k, p, rule_id::r3a, {a, b});
                        break;
                    }
                }
            }
    }

    // R3b: P -> Q, P -/-> R  =>  Q -/-> R.
    void apply_r3b() {
        for (std::size_t q = 0; q < n_; ++q)
            for (std::size_t r = 0; r < n_; ++r) {
                if (not_implies(q, r) != npos) continue;
                for (std::size_t p = 0; p < n_; ++p) {
                    if (p == q) continue;
                    auto a = implies(p, q), b = not_implies(p, r);
                    if (a != npos && b != npos && visible(a) && visible(b)) {
                        derive(statement_kind::not_implies, q, r, rule_id::r3b, {a, b});
                        break;
                    }
                }
            }
    }

    // R4: x <= non(Q), non(P) <= y, consistently y < x  =>  Q -/-> P.
    void apply_r4() {
        const auto& models = registry_.models();
        for (std::size_t q = 0; q < n_; ++q)
            for (std::size_t p = 0; p < n_; ++p) {
                if (p == q || not_implies(q, p) != npos) continue;
                bool done = false;
                for (const auto& lo : lower_[q]) {
                    if (!visible(lo.deriv)) continue;
                    for (const auto& up : upper_[p]) {
                        if (!visible(up.deriv)) continue;
                        for (std::size_t m = 0; m < models.size(); ++m) {
                            const auto& x = values_[lo.expr][m];
                            const auto& y = values_[up.expr][m];
                            if (x && y && *y < *x) {
                                derive(statement_kind::not_implies, q, p, rule_id::r4, {lo.deriv, up.deriv},
                                       std::nullopt, models[m].name);
                                done = true;
                                break;
                            }
                        }
                        if (done) break;
                    }
                    if (done) break;
                }
            }
    }

    // R5: P -> Q moves lower bounds of non(P) up to Q and upper bounds of
    // non(Q) down to P.
    void apply_r5() {
        for (std::size_t p = 0; p < n_; ++p)
            for (std::size_t q = 0; q < n_; ++q) {
                if (p == q) continue;
                auto a = implies(p, q);
                if (a == npos || !visible(a)) continue;
                for (std::size_t k = 0; k < lower_[p].size(); ++k) {
                    auto lo = lower_[p][k];
                    if (!visible(lo.deriv) || find_bound(lower_[q], lo.expr) != npos) continue;
                    derive(statement_kind::lower_bound, q, 0, rule_id::r5, {a, lo.deriv}, exprs_[lo.expr]);
                }
            }
        for (std::size_t p = 0; p < n_; ++p)
            for (std::size_t q = 0; q < n_; ++q) {
                if (p == q) continue;
                auto a = implies(p, q);
                if (a == npos || !visible(a)) continue;
                for (std::size_t k = 0; k < upper_[q].size(); ++k) {
                    auto up = upper_[q][k];
                    if (!visible(up.deriv) || find_bound(upper_[p], up.expr) != npos) continue;
                    derive(statement_kind::upper_bound, p, 0, rule_id::r5, {a, up.deriv}, exprs_[up.expr]);
                }
            }
    }

    // R6: e <= non(P) <= e  =>  non(P) = e.
    void apply_r6() {
        for (std::size_t p = 0; p < n_; ++p)
            for (std::size_t k = 0; k < lower_[p].size(); ++k) {
                auto lo = lower_[p][k];
                if (!visible(lo.deriv)) continue;
                auto up = find_bound(upper_[p], lo.expr);
                if (up == npos || !visible(up) || find_bound(exact_[p], lo.expr) != npos) continue;
                derive(statement_kind::exact_value, p, 0, rule_id::r6, {lo.deriv, up}, exprs_[lo.expr]);
            }
    }

    const model_registry& registry_;
    std::size_t n_;
    closure_result result_;
    std::size_t limit_ = 0;
    std::size_t depth_ = 0;
    std::vector<std::pair<std::size_t, std::size_t>> conflicts_;  // (implies, not_implies)

    std::vector<cardinal_expr> exprs_;
    std::map<std::string, std::size_t> expr_ids_;
    std::vector<std::vector<std::optional<int>>> values_;  // [expr][model]
    std::vector<std::vector<bound_entry>> lower_, upper_, exact_;
};

closure_result close(const knowledge_base& kb, const model_registry& registry) {
    return closure_engine(kb, registry).run();
}

// ---------------------------------------------------------------------------
// Result accessors

verdict closure_result::cell(std::size_t row, std::size_t col) const {
    const auto n = kb_.properties.size();
    if (row >= n || col >= n) throw unknown_property("cell outside the property range");
    if (implies_[row * n + col] != npos) return verdict::implies;
    if (not_implies_[row * n + col] != npos) return verdict::not_implies;
    return verdict::unknown;
}

proof_trace closure_result::trace_of(std::size_t derivation_index) const {
    std::set<std::size_t> needed;
    std::vector<std::size_t> stack{derivation_index};
    while (!stack.empty()) {
        auto d = stack.back();
        stack.pop_back();
        if (!needed.insert(d).second) continue;
        for (auto p : derivations_.at(d).premises) stack.push_back(p);
    }
    std::map<std::size_t, std::size_t> step_of;
    proof_trace trace;
    for (auto d : needed) {
        const auto& src = derivations_[d];
        proof_step step;
        step.rule = src.rule;
        step.fact_index = src.fact_index;
        step.witness = src.witness;
        step.conclusion = src.conclusion;
        for (auto p : src.premises) step.premises.push_back(step_of.at(p));
        step_of[d] = trace.steps.size();
        trace.steps.push_back(std::move(step));
    }
    return trace;
}

judgment closure_result::judgment_at(std::size_t row, std::size_t col) const {
    const auto n = kb_.properties.size();
    auto v = cell(row, col);
    if (v == verdict::unknown) return {};
    auto d = v == verdict::implies ? implies_[row * n + col] : not_implies_[row * n + col];
    return {v, trace_of(d)};
}

cardinality closure_result::interval(std::size_t prop) const {
    if (prop >= kb_.properties.size()) throw unknown_property("property index out of range");
    cardinality out;
    for (const auto& d : derivations_) {
        const auto& s = d.conclusion;
        if (s.first != prop) continue;
        switch (s.kind) {
        case statement_kind::lower_bound: out.lower.push_back(*s.value); break;
        case statement_kind::upper_bound: out.upper.push_back(*s.value); break;
        case statement_kind::exact_value:
            if (!out.exact) out.exact = *s.value;
            break;
        default: break;
        }
    }
    std::sort(out.lower.begin(), out.lower.end(), expr_less{});
    std::sort(out.upper.begin(), out.upper.end(), expr_less{});
    return out;
}

judgment_table closure_result::serial_table() const {
    std::vector<std::size_t> index(serial_count, npos);
    for (std::size_t i = 0; i < kb_.properties.size(); ++i)
        if (auto s = kb_.properties[i].serial) index[static_cast<std::size_t>(*s)] = i;
    for (int s = 0; s < serial_count; ++s)
        if (index[static_cast<std::size_t>(s)] == npos)
            throw bad_shape("serial " + std::to_string(s) + " is missing from the knowledge base");
    judgment_table table(serial_count);
    for (std::size_t i = 0; i < serial_count; ++i)
        for (std::size_t j = 0; j < serial_count; ++j) table.set(i, j, cell(index[i], index[j]));
    return table;
}

// ---------------------------------------------------------------------------
// Queries

judgment query(const closure_result& result, const property_id& p, const property_id& q) {
    return result.judgment_at(result.kb().require(p), result.kb().require(q));
}

std::string explain(const closure_result& result, const property_id& p, const property_id& q) {
    auto j = query(result, p, q);
    if (j.value == verdict::unknown)
        throw nothing_to_explain("nothing to explain: " + display_name(p) + " -> " + display_name(q) +
                                 " is unsettled");
    return render_trace(result, j.trace);
}

cardinality derive_cardinality(const closure_result& result, const property_id& p) {
    return result.interval(result.kb().require(p));
}

namespace {

// Keeps the bounds not strictly dominated by another one: the largest
// lower bounds or the smallest upper bounds.
std::vector<cardinal_expr> strongest(const std::vector<cardinal_expr>& xs, const model_registry& reg,
                                     bool lower) {
    std::vector<cardinal_expr> out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < xs.size() && !dominated; ++j) {
            if (i == j) continue;
            const auto& weak = xs[i];
            const auto& strong = xs[j];
            bool le = lower ? reg.provably_le(weak, strong) : reg.provably_le(strong, weak);
            bool ge = lower ? reg.provably_le(strong, weak) : reg.provably_le(weak, strong);
            // Equivalent bounds: keep the first one.
            if (le && (!ge || j < i)) dominated = true;
        }
        if (!dominated) out.push_back(xs[i]);
    }
    return out;
}

std::string join(const std::vector<cardinal_expr>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + to_string(xs[i]);
    return out;
}

std::string interval_line(const std::string& name, const std::vector<cardinal_expr>& lo,
                          const std::vector<cardinal_expr>& up) {
    std::string out;
    if (!lo.empty()) out += join(lo) + " <= ";
    out += name;
    if (!up.empty()) out += " <= " + join(up);
    return out;
}

}  // namespace

std::string render_cardinality(const closure_result& result, const model_registry& registry,
                               const property_id& p) {
    auto card = derive_cardinality(result, p);
    const auto name = "non(" + display_name(p) + ")";
    if (card.exact) return name + " = " + to_string(*card.exact) + "\n";

    std::vector<cardinal_expr> lo, up, lo_open, up_open;
    for (const auto& e : card.lower) (mentions_unsettled_atom(e) ? lo_open : lo).push_back(e);
    for (const auto& e : card.upper) (mentions_unsettled_atom(e) ? up_open : up).push_back(e);
    lo = strongest(lo, registry, true);
    up = strongest(up, registry, false);
    lo_open = strongest(lo_open, registry, true);
    up_open = strongest(up_open, registry, false);

    if (lo.empty() && up.empty() && lo_open.empty() && up_open.empty()) return name + " unknown\n";
    std::string out;
    if (!lo.empty() || !up.empty()) out += interval_line(name, lo, up) + "\n";
    if (!lo_open.empty() || !up_open.empty()) out += interval_line(name, lo_open, up_open) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// Replay

std::optional<std::string> replay_trace(const closure_result& result, const model_registry& registry,
                                        const proof_trace& trace) {
    const auto& kb = result.kb();
    const auto n = kb.properties.size();
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& step = trace.steps[i];
        const auto& c = step.conclusion;
        auto fail = [&](const std::string& why) {
            return std::optional<std::string>("step " + std::to_string(i + 1) + " [" +
                                              std::string(rule_name(step.rule)) + "] " + why);
        };
        if (c.first >= n || c.second >= n) return fail("refers to an unknown property");
        bool bound_kind = c.kind == statement_kind::lower_bound || c.kind == statement_kind::upper_bound ||
                          c.kind == statement_kind::exact_value;
        if (bound_kind != c.value.has_value()) return fail("malformed statement");

        std::vector<const statement*> prem;
        for (auto p : step.premises) {
            if (p >= i) return fail("premise does not precede the step");
            prem.push_back(&trace.steps[p].conclusion);
        }
        auto need = [&](std::size_t k) { return prem.size() == k; };
        auto is = [](const statement* s, statement_kind k) { return s->kind == k; };

        switch (step.rule) {
        case rule_id::fact: {
            if (!step.fact_index || *step.fact_index >= kb.facts.size() || !prem.empty())
                return fail("does not name a base fact");
            auto produced = statements_of(kb.facts[*step.fact_index], kb);
            if (std::find(produced.begin(), produced.end(), c) == produced.end())
                return fail("conclusion is not stated by the cited fact");
            break;
        }
        case rule_id::r1:
            if (!need(0) || c.kind != statement_kind::implies || c.first != c.second)
                return fail("is not P -> P");
            break;
        case rule_id::r2:
            if (!need(2) || !is(prem[0], statement_kind::implies) || !is(prem[1], statement_kind::implies) ||
                c.kind != statement_kind::implies || prem[0]->second != prem[1]->first ||
                c.first != prem[0]->first || c.second != prem[1]->second)
                return fail("is not a transitivity instance");
            break;
        case rule_id::r3a:
            // P -> Q, K -/-> Q  =>  K -/-> P
            if (!need(2) || !is(prem[0], statement_kind::implies) ||
                !is(prem[1], statement_kind::not_implies) || c.kind != statement_kind::not_implies ||
                prem[0]->second != prem[1]->second || c.first != prem[1]->first || c.second != prem[0]->first)
                return fail("is not a right propagation instance");
            break;
        case rule_id::r3b:
            // P -> Q, P -/-> R  =>  Q -/-> R
            if (!need(2) || !is(prem[0], statement_kind::implies) ||
                !is(prem[1], statement_kind::not_implies) || c.kind != statement_kind::not_implies ||
                prem[0]->first != prem[1]->first || c.first != prem[0]->second || c.second != prem[1]->second)
                return fail("is not a left propagation instance");
            break;
        case rule_id::r4: {
            // x <= non(Q), non(P) <= y, y < x in the witness  =>  Q -/-> P
            if (!need(2) || !is(prem[0], statement_kind::lower_bound) ||
                !is(prem[1], statement_kind::upper_bound) || c.kind != statement_kind::not_implies ||
                c.first != prem[0]->first || c.second != prem[1]->first || !step.witness)
                return fail("is not a cardinality rule instance");
            const auto* m = registry.find(*step.witness);
            if (!m) return fail("cites an unregistered model " + *step.witness);
            auto x = try_eval(*prem[0]->value, *m);
            auto y = try_eval(*prem[1]->value, *m);
            if (!x || !y || !(*y < *x)) return fail("witness model does not separate the bounds");
            break;
        }
        case rule_id::r5: {
            if (!need(2) || !is(prem[0], statement_kind::implies)) return fail("is not a bound propagation instance");
            const auto& imp = *prem[0];
            bool ok = false;
            if (is(prem[1], statement_kind::lower_bound) && c.kind == statement_kind::lower_bound)
                ok = prem[1]->first == imp.first && c.first == imp.second && prem[1]->value == c.value;
            if (is(prem[1], statement_kind::upper_bound) && c.kind == statement_kind::upper_bound)
                ok = prem[1]->first == imp.second && c.first == imp.first && prem[1]->value == c.value;
            if (!ok) return fail("is not a bound propagation instance");
            break;
        }
        case rule_id::r6:
            if (!need(2) || !is(prem[0], statement_kind::lower_bound) ||
                !is(prem[1], statement_kind::upper_bound) || c.kind != statement_kind::exact_value ||
                prem[0]->first != c.first || prem[1]->first != c.first || prem[0]->value != c.value ||
                prem[1]->value != c.value)
                return fail("is not an interval collapse instance");
            break;
        }
    }
    if (trace.steps.empty()) return std::optional<std::string>("empty trace");
    return std::nullopt;
}

}  // namespace scheepers
