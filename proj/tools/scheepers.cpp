// Command-line front end for the selection-principle knowledge base.
//
// Exit codes: 0 success, 1 non-empty diff or nothing to explain, 2 usage,
// parse or domain error, 3 contradiction.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "scheepers/combinatorics.hpp"
#include "scheepers/embedded.hpp"
#include "scheepers/fact_dsl.hpp"
#include "scheepers/formats.hpp"
#include "scheepers/inference.hpp"
#include "scheepers/problems.hpp"

namespace {

using namespace scheepers;
using json = nlohmann::ordered_json;

enum exit_code { ok = 0, differs = 1, failure = 2, contradicted = 3 };

struct config {
    std::string facts_path;
    std::string models_path;
    std::string format = "table";
    double budget = default_search_budget;

    bool jsonl() const { return format == "jsonl"; }
};

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw usage_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class session {
public:
    explicit session(const config& cfg) : cfg_(cfg) {}

    const model_registry& registry() {
        if (cfg_.models_path.empty()) return default_registry();
        if (!registry_) registry_ = load_registry(read_file(cfg_.models_path), cfg_.models_path);
        return *registry_;
    }

    const closure_result& closure() {
        if (!closure_) {
            knowledge_base kb = cfg_.facts_path.empty()
                                    ? default_knowledge_base()
                                    : load_knowledge_base({cfg_.facts_path, read_file(cfg_.facts_path)}, registry());
            closure_ = close(kb, registry());
        }
        return *closure_;
    }

    property_id resolve(const std::string& ref) {
        int serial = 0;
        auto [ptr, ec] = std::from_chars(ref.data(), ref.data() + ref.size(), serial);
        if (ec == std::errc{} && ptr == ref.data() + ref.size()) return property_by_serial(serial).id;
        if (auto id = parse_structural_ref(ref)) return *id;
        throw usage_error("bad property reference '" + ref + "' (expected a serial or kind:from:to:variant)");
    }

private:
    const config& cfg_;
    std::optional<model_registry> registry_;
    std::optional<closure_result> closure_;
};

std::string name_of(const property_id& id) {
    auto s = serial_of(id);
    return s ? std::to_string(*s) + " " + display_name(id) : display_name(id);
}

judgment_table framed_table(const closure_result& result) {
    auto t = result.serial_table();
    const auto& reference = load_reference_table();
    for (auto [r, c] : reference.framed())
        if (t.at(r, c) == verdict::not_implies) t.set_framed(r, c);
    return t;
}

int cmd_table(session& s, const config& cfg) {
    auto t = framed_table(s.closure());
    if (!cfg.jsonl()) {
        std::cout << render_table(t);
        return ok;
    }
    for (std::size_t r = 0; r < t.size(); ++r) {
        std::string cells;
        json framed = json::array();
        for (std::size_t c = 0; c < t.size(); ++c) {
            cells += verdict_symbol(t.at(r, c));
            if (t.is_framed(r, c)) framed.push_back(c);
        }
        std::cout << json{{"row", r}, {"cells", cells}, {"framed", framed}}.dump() << "\n";
    }
    return ok;
}

int cmd_query(session& s, const config& cfg, const std::string& a, const std::string& b) {
    auto p = s.resolve(a);
    auto q = s.resolve(b);
    auto j = query(s.closure(), p, q);
    if (cfg.jsonl())
        std::cout << json{{"from", name_of(p)}, {"to", name_of(q)}, {"verdict", verdict_name(j.value)}}.dump() << "\n";
    else
        std::cout << verdict_name(j.value) << "\n";
    return ok;
}

json step_json(const closure_result& result, const proof_trace& trace, std::size_t i) {
    const auto& step = trace.steps[i];
    json premises = json::array();
    for (auto p : step.premises) premises.push_back(p + 1);
    json out{{"step", i + 1},
             {"rule", rule_name(step.rule)},
             {"statement", render_statement(result.kb(), step.conclusion)},
             {"premises", premises}};
    if (step.fact_index) out["source"] = result.kb().facts.at(*step.fact_index).source;
    if (step.witness) out["model"] = *step.witness;
    return out;
}

int cmd_explain(session& s, const config& cfg, const std::string& a, const std::string& b) {
    auto p = s.resolve(a);
    auto q = s.resolve(b);
    const auto& result = s.closure();
    if (!cfg.jsonl()) {
        std::cout << explain(result, p, q);
        return ok;
    }
    auto j = query(result, p, q);
    if (j.value == verdict::unknown) explain(result, p, q);  // throws nothing_to_explain
    for (std::size_t i = 0; i < j.trace.steps.size(); ++i)
        std::cout << step_json(result, j.trace, i).dump() << "\n";
    return ok;
}

int cmd_card(session& s, const config& cfg, const std::string& a) {
    auto p = s.resolve(a);
    const auto& result = s.closure();
    if (!cfg.jsonl()) {
        std::cout << render_cardinality(result, s.registry(), p);
        return ok;
    }
    auto card = derive_cardinality(result, p);
    auto texts = [](const std::vector<cardinal_expr>& xs) {
        json out = json::array();
        for (const auto& x : xs) out.push_back(to_string(x));
        return out;
    };
    json out{{"property", name_of(p)},
             {"exact", card.exact ? json(to_string(*card.exact)) : json(nullptr)},
             {"lower", texts(card.lower)},
             {"upper", texts(card.upper)}};
    std::cout << out.dump() << "\n";
    return ok;
}

int cmd_diff(session& s, const config& cfg, const std::string& path) {
    judgment_table left = path.empty() ? s.closure().serial_table()
                                       : parse_table(read_file(path), path == "-" ? "<stdin>" : path);
    auto cells = diff(left, load_reference_table());
    for (const auto& c : cells) {
        if (cfg.jsonl())
            std::cout << json{{"row", c.row},
                              {"col", c.col},
                              {"computed", verdict_name(c.left)},
                              {"reference", verdict_name(c.right)}}
                             .dump()
                      << "\n";
        else
            std::cout << "(" << c.row << ", " << c.col << "): " << verdict_name(c.left) << ", reference "
                      << verdict_name(c.right) << "\n";
    }
    return cells.empty() ? ok : differs;
}

int cmd_problems(const config& cfg) {
    for (const auto& e : list_problems()) {
        std::string label = e.issue ? "Issue " + std::to_string(*e.issue) : "Problem " + e.label;
        if (cfg.jsonl()) {
            json out{{"issue", e.issue ? json(*e.issue) : json(nullptr)},
                     {"label", e.label},
                     {"statement", e.statement},
                     {"status", problem_state_name(e.status.state)}};
            if (e.status.state == problem_state::solved) {
                out["answer"] = e.status.answer;
                out["credit"] = e.status.credit;
            }
            if (e.status.state == problem_state::partially_solved) out["note"] = e.status.note;
            std::cout << out.dump() << "\n";
        } else {
            std::cout << label << ": " << to_string(e.status) << "\n    " << e.statement << "\n";
        }
    }
    return ok;
}

struct diag_params {
    std::string file;
    std::size_t cols = 0;
    std::size_t size = 1;
    std::size_t hits = 1;
    std::size_t exceptions = 0;
};

std::string set_text(const std::vector<std::size_t>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
    return out + "}";
}

int cmd_diag(const config& cfg, const diag_params& p) {
    gamma_family f(parse_family(read_file(p.file), p.file));
    auto found = finitely_tau_diagonalizable(f, p.cols, p.size, p.hits, p.exceptions, cfg.budget);
    if (cfg.jsonl()) {
        json out{{"diagonalizable", found.has_value()}};
        if (found) out["sets"] = found->sets;
        std::cout << out.dump() << "\n";
    } else if (!found) {
        std::cout << "not finitely tau-diagonalizable within the bounds\n";
    } else {
        for (std::size_t n = 0; n < found->sets.size(); ++n)
            std::cout << "F_" << n << " = " << set_text(found->sets[n]) << "\n";
    }
    return ok;
}

int cmd_odiag(const config& cfg, const std::string& file, std::size_t cols) {
    auto f = parse_family(read_file(file), file);
    check_shape(f);
    auto found = o_diagonalizable(f, cols, cfg.budget);
    if (cfg.jsonl()) {
        json out{{"diagonalizable", found.has_value()}};
        if (found) out["g"] = found->g;
        std::cout << out.dump() << "\n";
    } else if (!found) {
        std::cout << "not o-diagonalizable within the bounds\n";
    } else {
        std::cout << "g =";
        for (auto v : found->g) std::cout << " " << v;
        std::cout << "\n";
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Implications and critical cardinalities among selection principles"};
    app.require_subcommand(1);
    app.fallthrough();
    config cfg;
    app.add_option("--facts", cfg.facts_path, "Fact file (default: shipped base facts)");
    app.add_option("--models", cfg.models_path, "Model registry file (default: shipped registry)");
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"table", "jsonl"}));
    app.add_option("--budget", cfg.budget, "Search budget for the combinatorial checks")
        ->check(CLI::PositiveNumber);

    std::string a, b, path;
    diag_params dp;
    std::size_t ocols = 0;
    std::string ofile;

    auto* table = app.add_subcommand("table", "Print the closure over the 22 numbered properties");
    auto* query_cmd = app.add_subcommand("query", "Verdict for a pair");
    query_cmd->add_option("from", a)->required();
    query_cmd->add_option("to", b)->required();
    auto* explain_cmd = app.add_subcommand("explain", "Proof trace for a settled pair");
    explain_cmd->add_option("from", a)->required();
    explain_cmd->add_option("to", b)->required();
    auto* card = app.add_subcommand("card", "Derived critical cardinality");
    card->add_option("property", a)->required();
    auto* diff_cmd = app.add_subcommand("diff", "Compare a table (default: the closure) with the reference");
    diff_cmd->add_option("table", path, "Table file, or - for stdin");
    auto* problems = app.add_subcommand("problems", "List the problem registry");
    auto* diag = app.add_subcommand("diag", "Search for a finite tau-diagonalization of a gamma-family");
    diag->add_option("file", dp.file)->required();
    diag->add_option("--cols", dp.cols, "Column bound M")->required();
    diag->add_option("--size", dp.size, "Largest set size k");
    diag->add_option("--hits", dp.hits, "Rows that must hit each member");
    diag->add_option("--exceptions", dp.exceptions, "Rows allowed to break comparability");
    auto* odiag = app.add_subcommand("odiag", "Search for an o-diagonalizing function");
    odiag->add_option("file", ofile)->required();
    odiag->add_option("--cols", ocols, "Column bound M")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? ok : failure;
    }

    session s(cfg);
    try {
        if (*table) return cmd_table(s, cfg);
        if (*query_cmd) return cmd_query(s, cfg, a, b);
        if (*explain_cmd) return cmd_explain(s, cfg, a, b);
        if (*card) return cmd_card(s, cfg, a);
        if (*diff_cmd) return cmd_diff(s, cfg, path);
        if (*problems) return cmd_problems(cfg);
        if (*diag) return cmd_diag(cfg, dp);
        if (*odiag) return cmd_odiag(cfg, ofile, ocols);
    } catch (const contradiction& e) {
        std::cerr << e.what() << "\n";
        return contradicted;
    } catch (const nothing_to_explain& e) {
        std::cerr << e.what() << "\n";
        return differs;
    } catch (const scheepers::error& e) {
        std::cerr << e.what() << "\n";
        return failure;
    } catch (const usage_error& e) {
        std::cerr << e.what() << "\n";
        return failure;
    }
    return failure;
}
