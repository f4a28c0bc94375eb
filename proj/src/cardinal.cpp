#include "scheepers/cardinal.hpp"

#include <algorithm>
#include <cctype>

namespace scheepers {

std::string_view atom_name(cardinal_atom a) {
    switch (a) {
    case cardinal_atom::aleph1: return "aleph1";
    case cardinal_atom::p: return "p";
    case cardinal_atom::t: return "t";
    case cardinal_atom::h: return "h";
    case cardinal_atom::s: return "s";
    case cardinal_atom::g: return "g";
    case cardinal_atom::b: return "b";
    case cardinal_atom::d: return "d";
    case cardinal_atom::u: return "u";
    case cardinal_atom::cov_m: return "cov(M)";
    case cardinal_atom::od: return "od";
    case cardinal_atom::c: return "c";
    }
    return "?";
}

std::optional<cardinal_atom> atom_from_name(std::string_view name) {
    if (name == "covM") return cardinal_atom::cov_m;
    for (auto a : all_atoms)
        if (atom_name(a) == name) return a;
    return std::nullopt;
}

cardinal_expr cardinal_expr::of(cardinal_atom a) {
    cardinal_expr e;
    e.atom_ = a;
    return e;
}

cardinal_expr cardinal_expr::combine(op o, std::vector<cardinal_expr> children) {
    cardinal_expr e;
    e.op_ = o;
    e.children_ = std::move(children);
    return e;
}

std::string to_string(const cardinal_expr& e) {
    if (e.kind() == cardinal_expr::op::atom) return std::string(atom_name(e.atom()));
    std::string out = e.kind() == cardinal_expr::op::min ? "min{" : "max{";
    bool first = true;
    for (const auto& c : e.children()) {
        if (!first) out += ',';
        first = false;
        out += to_string(c);
    }
    out += '}';
    return out;
}

std::strong_ordering compare_exprs(const cardinal_expr& a, const cardinal_expr& b) {
    return to_string(a) <=> to_string(b);
}

cardinal_expr normalize_expr(const cardinal_expr& e) {
    if (e.kind() == cardinal_expr::op::atom) return e;

    std::vector<cardinal_expr> flat;
    for (const auto& child : e.children()) {
        auto n = normalize_expr(child);
        if (n.kind() == e.kind())
            flat.insert(flat.end(), n.children().begin(), n.children().end());
        else
            flat.push_back(std::move(n));
    }
    if (flat.size() < 2)
        throw malformed_expr(std::string(e.kind() == cardinal_expr::op::min ? "min" : "max") +
                             " needs at least two arguments, got " + std::to_string(flat.size()));

    std::sort(flat.begin(), flat.end(), expr_less{});
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    if (flat.size() == 1) return flat.front();
    return cardinal_expr::combine(e.kind(), std::move(flat));
}

namespace {

void collect_atoms(const cardinal_expr& e, std::set<cardinal_atom>& out) {
    if (e.kind() == cardinal_expr::op::atom) {
        out.insert(e.atom());
        return;
    }
    for (const auto& c : e.children()) collect_atoms(c, out);
}

class expr_parser {
public:
    explicit expr_parser(std::string_view text) : text_(text) {}

    cardinal_expr parse_all() {
        auto e = parse();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) { throw expr_syntax_error(pos_, msg); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }

    cardinal_expr parse() {
        skip_space();
        for (auto [word, o] : {std::pair{std::string_view("min{"), cardinal_expr::op::min},
                               std::pair{std::string_view("max{"), cardinal_expr::op::max}}) {
            if (!starts_with(word)) continue;
            pos_ += word.size();
            std::vector<cardinal_expr> children;
            for (;;) {
                children.push_back(parse());
                skip_space();
                if (pos_ < text_.size() && text_[pos_] == ',') {
                    ++pos_;
                    continue;
                }
                if (pos_ < text_.size() && text_[pos_] == '}') {
                    ++pos_;
                    break;
                }
                fail("expected ',' or '}'");
            }
            return cardinal_expr::combine(o, std::move(children));
        }
        // Longest atom spelling wins so that "cov(M)" is not read as "c".
        std::optional<cardinal_atom> best;
        std::size_t best_len = 0;
        for (auto a : all_atoms) {
            auto n = atom_name(a);
            if (starts_with(n) && n.size() > best_len) best = a, best_len = n.size();
        }
        if (starts_with("covM") && best_len < 4) best = cardinal_atom::cov_m, best_len = 4;
        if (!best) fail("expected a cardinal atom, min{...} or max{...}");
        std::size_t end = pos_ + best_len;
        if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end])))
            fail("unknown cardinal atom");
        pos_ = end;
        return cardinal_expr::of(*best);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::set<cardinal_atom> atoms_of(const cardinal_expr& e) {
    std::set<cardinal_atom> out;
    collect_atoms(e, out);
    return out;
}

bool mentions_unsettled_atom(const cardinal_expr& e) {
    auto atoms = atoms_of(e);
    return std::any_of(atoms.begin(), atoms.end(), is_unsettled_atom);
}

cardinal_expr parse_expr(std::string_view text) { return expr_parser(text).parse_all(); }

}  // namespace scheepers
