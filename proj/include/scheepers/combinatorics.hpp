#ifndef SCHEEPERS_COMBINATORICS_HPP
#define SCHEEPERS_COMBINATORICS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace scheepers {

/// One row of an N x N bit array: the finite `word`, then `tail` forever.
struct array_row {
    std::vector<std::uint8_t> word;
    std::uint8_t tail = 1;

    std::uint8_t at(std::size_t column) const { return column < word.size() ? word[column] : tail; }
    friend bool operator==(const array_row&, const array_row&) = default;
};

/// Finite representation of an element of {0,1}^(N x N): rows past the
/// last one are not modelled.
struct bit_array {
    std::vector<array_row> rows;

    std::uint8_t at(std::size_t row, std::size_t column) const { return rows.at(row).at(column); }
    std::size_t max_word_length() const;
    friend bool operator==(const bit_array&, const bit_array&) = default;
};

/// Every row has cofinitely many ones, i.e. tail = 1.
bool is_gamma_array(const bit_array& a);

/// Members all have `rows` rows; no condition on the entries.
struct array_family {
    std::size_t rows = 0;
    std::vector<bit_array> members;

    std::size_t max_word_length() const;
    friend bool operator==(const array_family&, const array_family&) = default;
};

/// Throws bad_shape when a member's row count differs from `rows`.
void check_shape(const array_family& f);

/// An array_family whose members are all gamma-arrays.
class gamma_family {
public:
    /// Throws bad_shape or not_gamma_family.
    explicit gamma_family(array_family arrays);

    const array_family& arrays() const noexcept { return arrays_; }
    std::size_t rows() const noexcept { return arrays_.rows; }
    std::size_t size() const noexcept { return arrays_.members.size(); }

private:
    array_family arrays_;
};

/// Finite sets F_n (one per row) together with the truncation parameters
/// used for the infinitary quantifiers: "infinitely many n" is read as at
/// least `hits` rows, "all but finitely many n" as all rows but at most
/// `exceptions`.
struct selector {
    std::vector<std::vector<std::size_t>> sets;
    std::size_t hits = 1;
    std::size_t exceptions = 0;

    friend bool operator==(const selector&, const selector&) = default;
};

struct diagonalizer {
    std::vector<std::size_t> g;
    friend bool operator==(const diagonalizer&, const diagonalizer&) = default;
};

inline constexpr double default_search_budget = 1e7;

/// Hitting condition: every member has a one inside F_n on at least `hits`
/// rows. Comparability: for every pair (A, B), A <= B on F_n holds on all
/// rows but at most `exceptions`, or B <= A does. Throws bad_shape when the
/// selector has the wrong length or a column >= col_bound.
bool verify_selector(const gamma_family& f, const selector& s, std::size_t col_bound);

/// Exhaustive search over F_n subsets of {0..col_bound-1} with at most
/// `size_bound` elements. Subsets are ordered by size, then
/// lexicographically; tuples lexicographically by row, and the least
/// passing tuple is returned. Throws search_space_too_large when
/// (sum_{i<=k} C(M,i))^R exceeds `budget`.
std::optional<selector> finitely_tau_diagonalizable(const gamma_family& f, std::size_t col_bound,
                                                    std::size_t size_bound, std::size_t hits,
                                                    std::size_t exceptions,
                                                    double budget = default_search_budget);

/// Every member has some row n with A(n, g(n)) = 1.
bool verify_diagonalizer(const array_family& f, const diagonalizer& d, std::size_t col_bound);

/// Lexicographically least g in {0..col_bound-1}^R diagonalizing `f`, or
/// nothing. Members need not be gamma-arrays. Throws search_space_too_large
/// when col_bound^R exceeds `budget`.
std::optional<diagonalizer> o_diagonalizable(const array_family& f, std::size_t col_bound,
                                             double budget = default_search_budget);

/// Deterministic in `seed`: `count` gamma-arrays with `rows` rows whose
/// words have length <= `columns`, each position zero with probability
/// `zero_density`; trailing ones are folded into the tail.
gamma_family random_gamma_family(std::uint64_t seed, std::size_t rows, std::size_t columns,
                                 std::size_t count, double zero_density);

}  // namespace scheepers

#endif  // SCHEEPERS_COMBINATORICS_HPP
