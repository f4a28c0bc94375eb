#include "scheepers/fact_dsl.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "line_lexer.hpp"
#include "scheepers/embedded.hpp"

namespace scheepers {

namespace {

using detail::token;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

struct line_error {
    std::size_t column;
    std::string message;
};

std::optional<int> parse_int(std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

class line_parser {
public:
    line_parser(const std::vector<token>& tokens, std::set<std::string> allowed_keys)
        : keyword_(tokens.front()) {
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            const auto& t = tokens[i];
            if (!t.key) {
                positional_.push_back(t);
                continue;
            }
            if (!allowed_keys.contains(*t.key))
                throw line_error{t.column, "unexpected option '" + *t.key + "' for " + keyword_.text};
            if (keys_.contains(*t.key)) throw line_error{t.column, "duplicate option '" + *t.key + "'"};
            keys_.emplace(*t.key, t);
        }
    }

    void arity(std::size_t n, const std::string& what) const {
        if (positional_.size() < n)
            throw line_error{end_column(), keyword_.text + " expects " + what + ", missing " +
                                               std::to_string(n - positional_.size()) + " argument(s)"};
        if (positional_.size() > n)
            throw line_error{positional_[n].column, "unexpected trailing argument '" + positional_[n].text + "'"};
    }

    const token& at(std::size_t i) const { return positional_.at(i); }

    const token* key(const std::string& k) const {
        auto it = keys_.find(k);
        return it == keys_.end() ? nullptr : &it->second;
    }

    std::optional<std::string> cite() const {
        const auto* t = key("cite");
        if (!t) return std::nullopt;
        if (t->text.empty()) throw line_error{t->value_column, "empty citation"};
        return t->text;
    }

    std::size_t end_column() const {
        const token& last = positional_.empty() ? keyword_ : positional_.back();
        return last.column + last.text.size() + (last.quoted ? 2 : 0);
    }

private:
    token keyword_;
    std::vector<token> positional_;
    std::map<std::string, token> keys_;
};

cardinal_expr expr_at(const std::string& text, std::size_t column) {
    try {
        return normalize_expr(parse_expr(text));
    } catch (const expr_syntax_error& e) {
        throw line_error{column + e.offset(), e.what()};
    } catch (const malformed_expr& e) {
        throw line_error{column, e.what()};
    }
}

property_ref ref_at(const token& t) {
    if (t.quoted) throw line_error{t.column, "expected a serial or kind:from:to:variant"};
    if (auto n = parse_int(t.text)) return *n;
    if (auto id = parse_structural_ref(t.text)) return *id;
    throw line_error{t.column, "bad property reference '" + t.text + "'"};
}

void require_bare(const token& t, const std::string& what) {
    if (t.quoted) throw line_error{t.column, "expected " + what + ", found a string"};
}

declaration parse_declaration(const std::vector<token>& tokens) {
    const auto& kw = tokens.front().text;
    declaration d;
    if (kw == "property") {
        line_parser p(tokens, {"non", "cite"});
        p.arity(2, "<serial> \"<name>\"");
        require_bare(p.at(0), "a serial");
        auto serial = parse_int(p.at(0).text);
        if (!serial) throw line_error{p.at(0).column, "bad serial '" + p.at(0).text + "'"};
        if (!p.at(1).quoted) throw line_error{p.at(1).column, "property name must be quoted"};
        property_decl decl{*serial, p.at(1).text, std::nullopt};
        if (const auto* non = p.key("non")) decl.non = expr_at(non->text, non->value_column);
        d.body = std::move(decl);
        d.cite = p.cite();
    } else if (kw == "variant") {
        line_parser p(tokens, {"non", "cite"});
        p.arity(4, "<kind> <from> <to> <variant>");
        for (std::size_t i = 0; i < 4; ++i) require_bare(p.at(i), "a word");
        auto kind = selector_from_name(p.at(0).text);
        if (!kind) throw line_error{p.at(0).column, "unknown selector kind '" + p.at(0).text + "'"};
        auto from = cover_from_name(p.at(1).text);
        if (!from) throw line_error{p.at(1).column, "unknown cover class '" + p.at(1).text + "'"};
        auto to = cover_from_name(p.at(2).text);
        if (!to) throw line_error{p.at(2).column, "unknown cover class '" + p.at(2).text + "'"};
        auto var = variant_from_name(p.at(3).text);
        if (!var) throw line_error{p.at(3).column, "unknown variant '" + p.at(3).text + "'"};
        variant_decl decl{{*kind, *from, *to, *var}, std::nullopt};
        if (const auto* non = p.key("non")) decl.non = expr_at(non->text, non->value_column);
        d.body = std::move(decl);
        d.cite = p.cite();
    } else if (kw == "arrow") {
        line_parser p(tokens, {"cite"});
        p.arity(2, "<source> <target>");
        d.body = arrow_decl{ref_at(p.at(0)), ref_at(p.at(1))};
        d.cite = p.cite();
    } else if (kw == "nonimp") {
        line_parser p(tokens, {"model", "cite"});
        p.arity(2, "<source> <target>");
        nonimp_decl decl{ref_at(p.at(0)), ref_at(p.at(1)), std::nullopt};
        if (const auto* m = p.key("model")) {
            if (m->text.empty()) throw line_error{m->value_column, "empty model name"};
            decl.model = m->text;
        }
        d.cite = p.cite();
        if (!decl.model && !d.cite) throw line_error{p.end_column(), "nonimp needs model=<name> or cite=\"...\""};
        d.body = std::move(decl);
    } else if (kw == "card") {
        line_parser p(tokens, {"cite"});
        p.arity(3, "<ref> eq|ge|le <expr>");
        card_decl decl;
        decl.target = ref_at(p.at(0));
        const auto& rel = p.at(1).text;
        if (rel == "eq") decl.relation = bound_relation::eq;
        else if (rel == "ge") decl.relation = bound_relation::ge;
        else if (rel == "le") decl.relation = bound_relation::le;
        else throw line_error{p.at(1).column, "expected eq, ge or le, found '" + rel + "'"};
        require_bare(p.at(2), "an expression");
        decl.value = expr_at(p.at(2).text, p.at(2).column);
        d.body = std::move(decl);
        d.cite = p.cite();
    } else if (kw == "include") {
        line_parser p(tokens, {});
        p.arity(1, "\"<path>\"");
        if (!p.at(0).quoted) throw line_error{p.at(0).column, "include path must be quoted"};
        d.body = include_decl{p.at(0).text};
    } else {
        throw line_error{tokens.front().column, "unknown declaration '" + kw + "'"};
    }
    return d;
}

std::string render_ref(const property_ref& r) {
    return std::visit(overloaded{[](int s) { return std::to_string(s); },
                                 [](const property_id& id) { return structural_ref(id); }},
                      r);
}

}  // namespace

fact_file parse_facts(std::string_view text, const std::string& origin) {
    fact_file out;
    std::vector<diagnostic> errors;
    auto lines = detail::split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto lexed = detail::lex_line(lines[i]);
        if (lexed.error) {
            errors.push_back({i + 1, lexed.error_column, *lexed.error});
            continue;
        }
        if (lexed.tokens.empty()) continue;
        try {
            auto d = parse_declaration(lexed.tokens);
            d.line = i + 1;
            out.declarations.push_back(std::move(d));
        } catch (const line_error& e) {
            errors.push_back({i + 1, e.column, e.message});
        }
    }
    if (!errors.empty()) throw syntax_errors(origin, std::move(errors));
    return out;
}

std::string render_declaration(const declaration& d) {
    auto with_non = [](std::string s, const std::optional<cardinal_expr>& non) {
        if (non) s += " non=" + to_string(*non);
        return s;
    };
    std::string out = std::visit(
        overloaded{
            [&](const property_decl& p) {
                return with_non("property " + std::to_string(p.serial) + " " + detail::quote(p.name), p.non);
            },
            [&](const variant_decl& v) {
                return with_non("variant " + std::string(selector_name(v.id.kind)) + " " +
                                    std::string(cover_name(v.id.from)) + " " + std::string(cover_name(v.id.to)) +
                                    " " + std::string(variant_name(v.id.variant)),
                                v.non);
            },
            [](const arrow_decl& a) { return "arrow " + render_ref(a.from) + " " + render_ref(a.to); },
            [](const nonimp_decl& n) {
                std::string s = "nonimp " + render_ref(n.from) + " " + render_ref(n.to);
                if (n.model) s += " model=" + *n.model;
                return s;
            },
            [](const card_decl& c) {
                return "card " + render_ref(c.target) + " " + std::string(relation_name(c.relation)) + " " +
                       to_string(c.value);
            },
            [](const include_decl& i) { return "include " + detail::quote(i.path); },
        },
        d.body);
    if (d.cite) out += " cite=" + detail::quote(*d.cite);
    return out;
}

std::string render_facts(const fact_file& f) {
    std::string out;
    for (const auto& d : f.declarations) out += render_declaration(d) + "\n";
    return out;
}

include_resolver default_resolver() {
    return [](const std::string& path, const std::string& from_origin) -> std::optional<source_text> {
        auto embedded = [&]() -> std::optional<source_text> {
            if (auto text = embedded_file(path)) return source_text{path, std::string(*text)};
            return std::nullopt;
        };
        if (embedded_file(from_origin)) return embedded();
        namespace fs = std::filesystem;
        fs::path candidate = path;
        if (candidate.is_relative()) candidate = fs::path(from_origin).parent_path() / candidate;
        std::ifstream in(candidate, std::ios::binary);
        if (!in) return embedded();
        std::ostringstream ss;
        ss << in.rdbuf();
        return source_text{candidate.string(), ss.str()};
    };
}

namespace {

struct located {
    declaration decl;
    std::string origin;
};

void expand(const source_text& src, const include_resolver& resolve, std::vector<std::string>& stack,
            std::vector<located>& out, std::vector<std::string>& problems) {
    auto file = parse_facts(src.text, src.origin);
    stack.push_back(src.origin);
    for (auto& d : file.declarations) {
        if (const auto* inc = std::get_if<include_decl>(&d.body)) {
            auto where = src.origin + ":" + std::to_string(d.line);
            auto child = resolve(inc->path, src.origin);
            if (!child) {
                problems.push_back(where + ": cannot resolve include \"" + inc->path + "\"");
                continue;
            }
            if (std::find(stack.begin(), stack.end(), child->origin) != stack.end()) {
                problems.push_back(where + ": include cycle through " + child->origin);
                continue;
            }
            expand(*child, resolve, stack, out, problems);
            continue;
        }
        out.push_back({std::move(d), src.origin});
    }
    stack.pop_back();
}

}  // namespace

knowledge_base load_knowledge_base(const source_text& root, const model_registry& registry,
                                   const include_resolver& resolve) {
    std::vector<located> decls;
    std::vector<std::string> problems;
    std::vector<std::string> stack;
    expand(root, resolve, stack, decls, problems);

    std::vector<property> properties;
    std::vector<fact> facts;
    std::map<int, property_id> by_serial;
    std::set<property_id> declared;

    auto where = [](const located& l) { return l.origin + ":" + std::to_string(l.decl.line); };
    auto source_of = [&](const located& l) { return l.decl.cite.value_or(where(l)); };

    for (const auto& l : decls) {
        if (const auto* p = std::get_if<property_decl>(&l.decl.body)) {
            if (p->serial < 0 || p->serial >= serial_count) {
                problems.push_back(where(l) + ": unknown serial " + std::to_string(p->serial));
                continue;
            }
            auto id = parse_display_name(p->name);
            const auto& expected = property_by_serial(p->serial);
            if (!id || *id != expected.id) {
                problems.push_back(where(l) + ": serial " + std::to_string(p->serial) + " is " +
                                   display_name(expected.id) + ", not \"" + p->name + "\"");
                continue;
            }
            if (!declared.insert(*id).second) {
                problems.push_back(where(l) + ": property " + p->name + " declared twice");
                continue;
            }
            by_serial[p->serial] = *id;
            properties.push_back({*id, p->serial, p->non ? std::optional(normalize_expr(*p->non)) : std::nullopt});
            if (p->non) facts.push_back({bound_fact{*id, bound_relation::eq, *p->non}, source_of(l)});
        } else if (const auto* v = std::get_if<variant_decl>(&l.decl.body)) {
            if (auto s = serial_of(v->id)) {
                problems.push_back(where(l) + ": " + display_name(v->id) + " is serial " + std::to_string(*s) +
                                   "; declare it with `property`");
                continue;
            }
            if (!declared.insert(v->id).second) {
                problems.push_back(where(l) + ": property " + display_name(v->id) + " declared twice");
                continue;
            }
            properties.push_back({v->id, std::nullopt, v->non ? std::optional(normalize_expr(*v->non)) : std::nullopt});
            if (v->non) facts.push_back({bound_fact{v->id, bound_relation::eq, *v->non}, source_of(l)});
        }
    }

    auto resolve_ref = [&](const property_ref& r, const located& l) -> std::optional<property_id> {
        if (const auto* s = std::get_if<int>(&r)) {
            auto it = by_serial.find(*s);
            if (it != by_serial.end()) return it->second;
            problems.push_back(where(l) + ": serial " + std::to_string(*s) + " is not declared");
            return std::nullopt;
        }
        const auto& id = std::get<property_id>(r);
        if (declared.contains(id)) return id;
        problems.push_back(where(l) + ": property " + structural_ref(id) + " is not declared");
        return std::nullopt;
    };

    for (const auto& l : decls) {
        std::visit(overloaded{
                       [&](const arrow_decl& a) {
                           auto from = resolve_ref(a.from, l);
                           auto to = resolve_ref(a.to, l);
                           if (from && to) facts.push_back({arrow_fact{*from, *to}, source_of(l)});
                       },
                       [&](const nonimp_decl& n) {
                           auto from = resolve_ref(n.from, l);
                           auto to = resolve_ref(n.to, l);
                           std::string source = l.decl.cite.value_or(n.model ? "model:" + *n.model : where(l));
                           if (from && to) facts.push_back({nonimp_fact{*from, *to, n.model}, source});
                       },
                       [&](const card_decl& c) {
                           if (auto t = resolve_ref(c.target, l))
                               facts.push_back({bound_fact{*t, c.relation, c.value}, source_of(l)});
                       },
                       [](const auto&) {},
                   },
                   l.decl.body);
    }

    if (!problems.empty()) {
        std::string msg = "invalid knowledge base:";
        for (const auto& p : problems) msg += "\n  " + p;
        throw invalid_knowledge_base(msg);
    }
    return make_knowledge_base(std::move(properties), std::move(facts), registry);
}

}  // namespace scheepers
