#ifndef SCHEEPERS_SRC_LINE_LEXER_HPP
#define SCHEEPERS_SRC_LINE_LEXER_HPP

// Shared tokenizer for the line-oriented text formats.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace scheepers::detail {

struct token {
    std::string text;     // unquoted and unescaped when `quoted`
    std::size_t column;   // 1-based
    bool quoted = false;
    // For key=value tokens: the key, and the value column.
    std::optional<std::string> key;
    std::size_t value_column = 0;
};

struct lexed_line {
    std::vector<token> tokens;
    std::optional<std::string> error;
    std::size_t error_column = 0;
};

/// Splits on whitespace outside quotes and braces; '#' outside quotes ends
/// the line. `key="..."` and `key=value` become one token with `key` set.
lexed_line lex_line(std::string_view line);

std::string quote(std::string_view s);

std::vector<std::string_view> split_lines(std::string_view text);

}  // namespace scheepers::detail

#endif
