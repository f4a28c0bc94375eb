#include "line_lexer.hpp"

#include <cctype>

namespace scheepers::detail {

lexed_line lex_line(std::string_view line) {
    lexed_line out;
    std::size_t i = 0;
    const std::size_t n = line.size();
    auto space = [&](std::size_t k) { return std::isspace(static_cast<unsigned char>(line[k])) != 0; };

    while (i < n) {
        while (i < n && space(i)) ++i;
        if (i >= n || line[i] == '#') break;

        token tok;
        tok.column = i + 1;
        std::string raw;
        int depth = 0;
        bool saw_quote = false;
        while (i < n && (depth > 0 || !space(i))) {
            char ch = line[i];
            if (ch == '#' && depth == 0) break;
            if (ch == '"') {
                if (!raw.empty() && raw.back() != '=') {
                    out.error = "unexpected quote";
                    out.error_column = i + 1;
                    return out;
                }
                saw_quote = true;
                std::size_t start = i;
                ++i;
                std::string value;
                bool closed = false;
                while (i < n) {
                    if (line[i] == '\\' && i + 1 < n) {
                        value += line[i + 1];
                        i += 2;
                        continue;
                    }
                    if (line[i] == '"') {
                        closed = true;
                        ++i;
                        break;
                    }
                    value += line[i++];
                }
                if (!closed) {
                    out.error = "unterminated string";
                    out.error_column = start + 1;
                    return out;
                }
                if (i < n && !space(i) && line[i] != '#') {
                    out.error = "unexpected text after string";
                    out.error_column = i + 1;
                    return out;
                }
                if (raw.empty()) {
                    tok.text = value;
                    tok.quoted = true;
                } else {
                    tok.key = raw.substr(0, raw.size() - 1);
                    tok.value_column = start + 1;
                    tok.text = value;
                    tok.quoted = true;
                }
                break;
            }
            if (ch == '{') ++depth;
            if (ch == '}') --depth;
            raw += ch;
            ++i;
        }
        if (!saw_quote) {
            auto eq = raw.find('=');
            bool identifier_key = eq != std::string::npos && eq > 0;
            for (std::size_t k = 0; identifier_key && k < eq; ++k)
                identifier_key = std::isalnum(static_cast<unsigned char>(raw[k])) || raw[k] == '_';
            if (identifier_key) {
                tok.key = raw.substr(0, eq);
                tok.text = raw.substr(eq + 1);
                tok.value_column = tok.column + eq + 1;
            } else {
                tok.text = raw;
            }
        }
        out.tokens.push_back(std::move(tok));
    }
    return out;
}

std::string quote(std::string_view s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + '"';
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

}  // namespace scheepers::detail
