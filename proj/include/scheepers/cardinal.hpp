#ifndef SCHEEPERS_CARDINAL_HPP
#define SCHEEPERS_CARDINAL_HPP

#include <array>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "scheepers/error.hpp"

namespace scheepers {

/// Cardinal characteristics of the continuum that appear as critical
/// cardinalities or in model constraints.
enum class cardinal_atom { aleph1, p, t, h, s, g, b, d, u, cov_m, od, c };

inline constexpr std::array<cardinal_atom, 12> all_atoms{
    cardinal_atom::aleph1, cardinal_atom::p, cardinal_atom::t, cardinal_atom::h,
    cardinal_atom::s,      cardinal_atom::g, cardinal_atom::b, cardinal_atom::d,
    cardinal_atom::u,      cardinal_atom::cov_m, cardinal_atom::od, cardinal_atom::c};

/// "cov(M)" for cov_m, the plain letter otherwise.
std::string_view atom_name(cardinal_atom a);

/// Accepts every atom_name spelling plus "covM".
std::optional<cardinal_atom> atom_from_name(std::string_view name);

/// Atoms whose position relative to the classical characteristics is an
/// open problem; models may leave them out.
constexpr bool is_unsettled_atom(cardinal_atom a) { return a == cardinal_atom::od; }

/// Symbolic cardinal: an atom, or the min/max of at least two expressions.
class cardinal_expr {
public:
    enum class op { atom, min, max };

    cardinal_expr() = default;  // aleph1
    static cardinal_expr of(cardinal_atom a);
    /// Unchecked constructor; normalize_expr rejects short lists.
    static cardinal_expr combine(op o, std::vector<cardinal_expr> children);

    op kind() const noexcept { return op_; }
    cardinal_atom atom() const noexcept { return atom_; }
    const std::vector<cardinal_expr>& children() const noexcept { return children_; }

    friend bool operator==(const cardinal_expr&, const cardinal_expr&) = default;

private:
    op op_ = op::atom;
    cardinal_atom atom_ = cardinal_atom::aleph1;
    std::vector<cardinal_expr> children_;
};

inline cardinal_expr atom(cardinal_atom a) { return cardinal_expr::of(a); }
inline cardinal_expr min_of(std::vector<cardinal_expr> xs) {
    return cardinal_expr::combine(cardinal_expr::op::min, std::move(xs));
}
inline cardinal_expr max_of(std::vector<cardinal_expr> xs) {
    return cardinal_expr::combine(cardinal_expr::op::max, std::move(xs));
}

/// Canonical form: nested min-of-min / max-of-max flattened, duplicates
/// dropped, children sorted by rendered text. A list reduced to one child by
/// de-duplication collapses to that child. Throws malformed_expr when a
/// min/max has fewer than two children after flattening.
cardinal_expr normalize_expr(const cardinal_expr& e);

/// Renders as `b`, `cov(M)`, `min{b,s}`; the inverse of parse_expr.
std::string to_string(const cardinal_expr& e);

/// Total order on canonical text, used to sort children.
std::strong_ordering compare_exprs(const cardinal_expr& a, const cardinal_expr& b);

struct expr_less {
    bool operator()(const cardinal_expr& a, const cardinal_expr& b) const {
        return compare_exprs(a, b) < 0;
    }
};

std::set<cardinal_atom> atoms_of(const cardinal_expr& e);

bool mentions_unsettled_atom(const cardinal_expr& e);

/// Parses `atom | min{e,e,...} | max{e,e,...}`. On failure throws
/// expr_syntax_error carrying the 0-based offset of the problem.
cardinal_expr parse_expr(std::string_view text);

class expr_syntax_error : public error {
public:
    expr_syntax_error(std::size_t offset, const std::string& message)
        : error(message), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace scheepers

#endif  // SCHEEPERS_CARDINAL_HPP
