#include "scheepers/formats.hpp"

#include <charconv>
#include <set>

#include "line_lexer.hpp"
#include "scheepers/embedded.hpp"

namespace scheepers {

namespace {

std::string_view strip_comment(std::string_view line) {
    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    return line;
}

std::size_t leading_blanks(std::string_view line) {
    std::size_t i = 0;
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    return i;
}

template <class T>
std::optional<T> parse_number(std::string_view s) {
    T v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

std::optional<verdict> verdict_from_symbol(char ch) {
    switch (ch) {
        case '+': return verdict::implies;
        case '-': return verdict::not_implies;
        case '?': return verdict::unknown;
        default: return std::nullopt;
    }
}

}  // namespace

std::string render_table(const judgment_table& t) {
    std::string out;
    for (std::size_t r = 0; r < t.size(); ++r) {
        for (std::size_t c = 0; c < t.size(); ++c) out += verdict_symbol(t.at(r, c));
        out += '\n';
        std::string framed;
        for (std::size_t c = 0; c < t.size(); ++c)
            if (t.is_framed(r, c)) framed += " " + std::to_string(c);
        if (!framed.empty()) out += "framed:" + framed + "\n";
    }
    return out;
}

judgment_table parse_table(std::string_view text, const std::string& origin) {
    struct framed_line {
        std::size_t line;
        std::size_t row;
        std::vector<std::pair<std::size_t, std::size_t>> columns;  // value, text column
    };
    std::vector<std::vector<verdict>> rows;
    std::vector<std::size_t> row_lines;
    std::vector<framed_line> frames;
    std::vector<diagnostic> errors;

    auto lines = detail::split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto raw = strip_comment(lines[i]);
        auto lead = leading_blanks(raw);
        auto body = raw.substr(lead);
        if (body.empty()) continue;
        if (body.starts_with("framed:")) {
            if (rows.empty()) {
                errors.push_back({i + 1, lead + 1, "framed line before the first row"});
                continue;
            }
            if (!frames.empty() && frames.back().row == rows.size() - 1) {
                errors.push_back({i + 1, lead + 1, "second framed line for one row"});
                continue;
            }
            framed_line fl{i + 1, rows.size() - 1, {}};
            auto lexed = detail::lex_line(body.substr(7));
            for (const auto& tok : lexed.tokens) {
                auto column = lead + 7 + tok.column;
                auto v = tok.quoted || tok.key ? std::nullopt : parse_number<std::size_t>(tok.text);
                if (!v) {
                    errors.push_back({i + 1, column, "expected a column index, found '" + tok.text + "'"});
                    continue;
                }
                fl.columns.emplace_back(*v, column);
            }
            frames.push_back(std::move(fl));
            continue;
        }
        std::vector<verdict> row;
        bool ok = true;
        for (std::size_t k = 0; k < body.size(); ++k) {
            auto v = verdict_from_symbol(body[k]);
            if (!v) {
                errors.push_back({i + 1, lead + k + 1, std::string("bad symbol '") + body[k] + "'"});
                ok = false;
                continue;
            }
            row.push_back(*v);
        }
        if (ok) {
            rows.push_back(std::move(row));
            row_lines.push_back(i + 1);
        } else {
            rows.emplace_back();
            row_lines.push_back(0);
        }
    }
    if (!errors.empty()) throw bad_symbol(origin, std::move(errors));

    const std::size_t n = rows.size();
    for (std::size_t r = 0; r < n; ++r) {
        if (rows[r].size() != n)
            throw bad_shape(origin + ":" + std::to_string(row_lines[r]) + ": row " + std::to_string(r) + " has " +
                            std::to_string(rows[r].size()) + " cells, expected " + std::to_string(n));
    }
    judgment_table t(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) t.set(r, c, rows[r][c]);
    for (const auto& fl : frames) {
        for (auto [c, column] : fl.columns) {
            if (c >= n)
                errors.push_back({fl.line, column, "framed column " + std::to_string(c) + " out of range"});
            else if (t.at(fl.row, c) != verdict::not_implies)
                errors.push_back({fl.line, column, "framed cell (" + std::to_string(fl.row) + ", " +
                                                       std::to_string(c) + ") is not '-'"});
            else if (t.is_framed(fl.row, c))
                errors.push_back({fl.line, column, "column " + std::to_string(c) + " framed twice"});
            else
                t.set_framed(fl.row, c);
        }
    }
    if (!errors.empty()) throw syntax_errors(origin, std::move(errors));
    return t;
}

std::vector<std::string> check_reference_invariants(const judgment_table& t) {
    std::vector<std::string> problems;
    if (t.size() != static_cast<std::size_t>(serial_count)) {
        problems.push_back("table is " + std::to_string(t.size()) + "x" + std::to_string(t.size()) +
                           ", expected 22x22");
        return problems;
    }
    for (std::size_t i = 0; i < t.size(); ++i)
        if (t.at(i, i) != verdict::implies) problems.push_back("diagonal cell " + std::to_string(i) + " is not '+'");
    if (auto u = t.count(verdict::unknown); u != 55)
        problems.push_back(std::to_string(u) + " unknown cells, expected 55");
    if (t.framed().size() != 21)
        problems.push_back(std::to_string(t.framed().size()) + " framed cells, expected 21");
    for (auto [r, c] : t.framed())
        if (t.at(r, c) != verdict::not_implies)
            problems.push_back("framed cell (" + std::to_string(r) + ", " + std::to_string(c) + ") is not '-'");
    return problems;
}

const judgment_table& load_reference_table() {
    static const judgment_table table = [] {
        auto text = embedded_file("reference_table.txt");
        if (!text) throw corrupt_data("reference_table.txt is not embedded");
        judgment_table t;
        try {
            t = parse_table(*text, "reference_table.txt");
        } catch (const error& e) {
            throw corrupt_data(std::string("reference_table.txt: ") + e.what());
        }
        auto problems = check_reference_invariants(t);
        if (!problems.empty()) {
            std::string msg = "reference_table.txt fails its invariants:";
            for (const auto& p : problems) msg += "\n  " + p;
            throw corrupt_data(msg);
        }
        return t;
    }();
    return table;
}

namespace {

struct line_error {
    std::size_t column;
    std::string message;
};

std::string expect_cite(const std::vector<detail::token>& toks, std::size_t at, std::size_t end_column) {
    if (toks.size() <= at || toks[at].quoted || toks[at].key || toks[at].text != "cite")
        throw line_error{toks.size() > at ? toks[at].column : end_column, "expected cite \"<text>\""};
    if (toks.size() <= at + 1 || !toks[at + 1].quoted)
        throw line_error{toks.size() > at + 1 ? toks[at + 1].column : end_column, "expected a quoted citation"};
    if (toks.size() > at + 2) throw line_error{toks[at + 2].column, "unexpected trailing text"};
    return toks[at + 1].text;
}

cardinal_expr expr_token(const detail::token& t) {
    if (t.quoted || t.key) throw line_error{t.column, "expected an expression"};
    try {
        return normalize_expr(parse_expr(t.text));
    } catch (const expr_syntax_error& e) {
        throw line_error{t.column + e.offset(), e.what()};
    } catch (const malformed_expr& e) {
        throw line_error{t.column, e.what()};
    }
}

}  // namespace

model_file parse_models(std::string_view text, const std::string& origin) {
    model_file out;
    std::vector<diagnostic> errors;
    auto lines = detail::split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto lexed = detail::lex_line(lines[i]);
        if (lexed.error) {
            errors.push_back({i + 1, lexed.error_column, *lexed.error});
            continue;
        }
        const auto& toks = lexed.tokens;
        if (toks.empty()) continue;
        auto end_column = lines[i].size() + 1;
        try {
            const auto& kw = toks[0].text;
            if (toks[0].quoted || toks[0].key) throw line_error{toks[0].column, "expected a keyword"};
            if (kw == "constraint") {
                if (toks.size() < 4) throw line_error{end_column, "expected constraint <expr> <= <expr> cite \"...\""};
                if (toks[2].quoted || toks[2].key || toks[2].text != "<=")
                    throw line_error{toks[2].column, "expected '<='"};
                zfc_constraint c{expr_token(toks[1]), expr_token(toks[3]), expect_cite(toks, 4, end_column)};
                out.constraints.push_back(std::move(c));
            } else if (kw == "model") {
                if (toks.size() < 2 || toks[1].quoted || toks[1].key)
                    throw line_error{toks.size() > 1 ? toks[1].column : end_column, "expected a model name"};
                model m;
                m.name = toks[1].text;
                m.citation = expect_cite(toks, 2, end_column);
                out.models.push_back(std::move(m));
            } else if (kw == "level") {
                if (out.models.empty()) throw line_error{toks[0].column, "level outside a model block"};
                if (toks.size() < 3) throw line_error{end_column, "expected level <atom> <integer>"};
                if (toks.size() > 3) throw line_error{toks[3].column, "unexpected trailing text"};
                auto a = toks[1].quoted || toks[1].key ? std::nullopt : atom_from_name(toks[1].text);
                if (!a) throw line_error{toks[1].column, "unknown atom '" + toks[1].text + "'"};
                auto v = toks[2].quoted || toks[2].key ? std::nullopt : parse_number<int>(toks[2].text);
                if (!v) throw line_error{toks[2].column, "expected an integer level"};
                auto& levels = out.models.back().levels;
                if (levels.contains(*a))
                    throw line_error{toks[1].column, "level of " + std::string(atom_name(*a)) + " given twice"};
                levels.emplace(*a, *v);
            } else {
                throw line_error{toks[0].column, "unknown declaration '" + kw + "'"};
            }
        } catch (const line_error& e) {
            errors.push_back({i + 1, e.column, e.message});
        }
    }
    if (!errors.empty()) throw syntax_errors(origin, std::move(errors));
    return out;
}

std::string render_models(const model_file& f) {
    std::string out;
    for (const auto& c : f.constraints)
        out += "constraint " + to_string(c.lhs) + " <= " + to_string(c.rhs) + " cite " + detail::quote(c.citation) +
               "\n";
    for (const auto& m : f.models) {
        if (!out.empty()) out += "\n";
        out += "model " + m.name + " cite " + detail::quote(m.citation) + "\n";
        for (auto [a, v] : m.levels) out += "level " + std::string(atom_name(a)) + " " + std::to_string(v) + "\n";
    }
    return out;
}

model_registry load_registry(std::string_view text, const std::string& origin) {
    auto f = parse_models(text, origin);
    return model_registry(std::move(f.models), std::move(f.constraints));
}

array_family parse_family(std::string_view text, const std::string& origin) {
    array_family out;
    std::vector<diagnostic> errors;
    std::vector<std::size_t> first_lines;
    bool in_block = false;
    auto lines = detail::split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto raw = strip_comment(lines[i]);
        auto lead = leading_blanks(raw);
        auto body = raw.substr(lead);
        if (body.empty()) {
            // A comment-only line does not end a block.
            if (lines[i].find('#') == std::string_view::npos) in_block = false;
            continue;
        }
        if (!in_block) {
            out.members.emplace_back();
            first_lines.push_back(i + 1);
            in_block = true;
        }
        auto slash = body.find('/');
        if (slash == std::string_view::npos) {
            errors.push_back({i + 1, lead + 1, "expected <word>/<tail>"});
            continue;
        }
        array_row row;
        bool ok = true;
        for (std::size_t k = 0; k < slash; ++k) {
            if (body[k] != '0' && body[k] != '1') {
                errors.push_back({i + 1, lead + k + 1, std::string("bad bit '") + body[k] + "'"});
                ok = false;
                continue;
            }
            row.word.push_back(static_cast<std::uint8_t>(body[k] - '0'));
        }
        auto tail = body.substr(slash + 1);
        if (tail != "0" && tail != "1") {
            errors.push_back({i + 1, lead + slash + 2, "tail must be 0 or 1"});
            ok = false;
        } else {
            row.tail = static_cast<std::uint8_t>(tail[0] - '0');
        }
        if (ok) out.members.back().rows.push_back(std::move(row));
    }
    if (!errors.empty()) throw syntax_errors(origin, std::move(errors));
    if (!out.members.empty()) out.rows = out.members.front().rows.size();
    for (std::size_t k = 0; k < out.members.size(); ++k) {
        if (out.members[k].rows.size() != out.rows)
            throw bad_shape(origin + ":" + std::to_string(first_lines[k]) + ": array " + std::to_string(k) + " has " +
                            std::to_string(out.members[k].rows.size()) + " rows, expected " +
                            std::to_string(out.rows));
    }
    return out;
}

std::string render_family(const array_family& f) {
    std::string out;
    for (std::size_t k = 0; k < f.members.size(); ++k) {
        if (k > 0) out += "\n";
        for (const auto& row : f.members[k].rows) {
            for (auto bit : row.word) out += static_cast<char>('0' + bit);
            out += "/";
            out += static_cast<char>('0' + row.tail);
            out += "\n";
        }
    }
    return out;
}

}  // namespace scheepers
