#ifndef SCHEEPERS_ERROR_HPP
#define SCHEEPERS_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace scheepers {

/// Base of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class malformed_expr : public error {
public:
    using error::error;
};

class unknown_serial : public error {
public:
    explicit unknown_serial(int serial)
        : error("unknown serial " + std::to_string(serial) + " (expected 0..21)"), serial_(serial) {}
    int serial() const noexcept { return serial_; }

private:
    int serial_;
};

class unknown_property : public error {
public:
    using error::error;
};

class unknown_atom : public error {
public:
    using error::error;
};

class invalid_knowledge_base : public error {
public:
    using error::error;
};

class invalid_registry : public error {
public:
    using error::error;
};

class nothing_to_explain : public error {
public:
    using error::error;
};

class shape_mismatch : public error {
public:
    using error::error;
};

class bad_shape : public error {
public:
    using error::error;
};

class search_space_too_large : public error {
public:
    search_space_too_large(double size, double budget)
        : error("search space of " + std::to_string(static_cast<long double>(size)) +
                " candidates exceeds budget " + std::to_string(static_cast<long double>(budget))),
          size_(size) {}
    double size() const noexcept { return size_; }

private:
    double size_;
};

class not_gamma_family : public error {
public:
    using error::error;
};

/// One located problem in a text input; line and column are 1-based.
struct diagnostic {
    std::size_t line = 0;
    std::size_t column = 0;
    std::string message;
};

std::string format_diagnostic(const diagnostic& d, const std::string& origin = {});

/// All syntax errors found in one input, not just the first.
class syntax_errors : public error {
public:
    syntax_errors(std::string origin, std::vector<diagnostic> diagnostics);

    const std::string& origin() const noexcept { return origin_; }
    const std::vector<diagnostic>& diagnostics() const noexcept { return diagnostics_; }

private:
    std::string origin_;
    std::vector<diagnostic> diagnostics_;
};

/// An unexpected character in a verdict table.
class bad_symbol : public syntax_errors {
public:
    using syntax_errors::syntax_errors;
};

/// Shipped data that fails its own consistency checks.
class corrupt_data : public error {
public:
    using error::error;
};

}  // namespace scheepers

#endif  // SCHEEPERS_ERROR_HPP
