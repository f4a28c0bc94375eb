#include "scheepers/error.hpp"

namespace scheepers {

std::string format_diagnostic(const diagnostic& d, const std::string& origin) {
    std::string out = origin.empty() ? std::string("<input>") : origin;
    out += ':' + std::to_string(d.line) + ':' + std::to_string(d.column) + ": " + d.message;
    return out;
}

namespace {

std::string summarize(const std::string& origin, const std::vector<diagnostic>& ds) {
    std::string out = std::to_string(ds.size()) + " syntax error(s)";
    for (const auto& d : ds) out += "\n  " + format_diagnostic(d, origin);
    return out;
}

}  // namespace

syntax_errors::syntax_errors(std::string origin, std::vector<diagnostic> diagnostics)
    : error(summarize(origin, diagnostics)),
      origin_(std::move(origin)),
      diagnostics_(std::move(diagnostics)) {}

}  // namespace scheepers
