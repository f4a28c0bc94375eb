#include "scheepers/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "scheepers/error.hpp"

namespace scheepers {

std::size_t bit_array::max_word_length() const {
    std::size_t n = 0;
    for (const auto& r : rows) n = std::max(n, r.word.size());
    return n;
}

bool is_gamma_array(const bit_array& a) {
    return std::all_of(a.rows.begin(), a.rows.end(), [](const array_row& r) { return r.tail == 1; });
}

std::size_t array_family::max_word_length() const {
    std::size_t n = 0;
    for (const auto& m : members) n = std::max(n, m.max_word_length());
    return n;
}

void check_shape(const array_family& f) {
    for (std::size_t i = 0; i < f.members.size(); ++i)
        if (f.members[i].rows.size() != f.rows)
            throw bad_shape("member " + std::to_string(i) + " has " + std::to_string(f.members[i].rows.size()) +
                            " rows, expected " + std::to_string(f.rows));
}

gamma_family::gamma_family(array_family arrays) : arrays_(std::move(arrays)) {
    check_shape(arrays_);
    for (std::size_t i = 0; i < arrays_.members.size(); ++i)
        if (!is_gamma_array(arrays_.members[i]))
            throw not_gamma_family("member " + std::to_string(i) + " has a row with finitely many ones");
}

namespace {

void check_selector_shape(const gamma_family& f, const selector& s, std::size_t col_bound) {
    if (s.sets.size() != f.rows())
        throw bad_shape("selector has " + std::to_string(s.sets.size()) + " sets, family has " +
                        std::to_string(f.rows()) + " rows");
    for (const auto& set : s.sets)
        for (auto m : set)
            if (m >= col_bound)
                throw bad_shape("selector column " + std::to_string(m) + " is outside the bound " +
                                std::to_string(col_bound));
}

// Rows n where A(n,m) = 1 and B(n,m) = 0 for some m in F_n.
std::size_t rows_exceeding(const bit_array& a, const bit_array& b, const selector& s) {
    std::size_t count = 0;
    for (std::size_t n = 0; n < s.sets.size(); ++n)
        for (auto m : s.sets[n])
            if (a.at(n, m) > b.at(n, m)) {
                ++count;
                break;
            }
    return count;
}

double binomial(std::size_t n, std::size_t k) {
    double r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return r;
}

using mask = std::uint64_t;

// Subsets of {0..m-1} with at most k elements, by size then lexicographically.
std::vector<std::vector<std::size_t>> candidate_sets(std::size_t m, std::size_t k) {
    std::vector<std::vector<std::size_t>> out{{}};
    for (std::size_t size = 1; size <= std::min(k, m); ++size) {
        std::vector<std::size_t> cur(size);
        for (std::size_t i = 0; i < size; ++i) cur[i] = i;
        for (;;) {
            out.push_back(cur);
            std::size_t i = size;
            while (i > 0 && cur[i - 1] == m - size + i - 1) --i;
            if (i == 0) break;
            ++cur[i - 1];
            for (std::size_t j = i; j < size; ++j) cur[j] = cur[j - 1] + 1;
        }
    }
    return out;
}

}  // namespace

bool verify_selector(const gamma_family& f, const selector& s, std::size_t col_bound) {
    check_selector_shape(f, s, col_bound);
    const auto& members = f.arrays().members;
    for (const auto& a : members) {
        std::size_t hit_rows = 0;
        for (std::size_t n = 0; n < s.sets.size(); ++n)
            if (std::any_of(s.sets[n].begin(), s.sets[n].end(), [&](auto m) { return a.at(n, m) == 1; }))
                ++hit_rows;
        if (hit_rows < s.hits) return false;
    }
    for (const auto& a : members)
        for (const auto& b : members) {
            if (&a == &b) continue;
            if (rows_exceeding(a, b, s) > s.exceptions && rows_exceeding(b, a, s) > s.exceptions)
                return false;
        }
    return true;
}

std::optional<selector> finitely_tau_diagonalizable(const gamma_family& f, std::size_t col_bound,
                                                    std::size_t size_bound, std::size_t hits,
                                                    std::size_t exceptions, double budget) {
    const std::size_t rows = f.rows();
    double per_row = 0;
    for (std::size_t i = 0; i <= std::min(size_bound, col_bound); ++i) per_row += binomial(col_bound, i);
    const double space = std::pow(per_row, static_cast<double>(rows));
    if (space > budget) throw search_space_too_large(space, budget);
    if (col_bound > 64) throw bad_shape("column bound above 64 is not supported by the search");

    const auto sets = candidate_sets(col_bound, size_bound);
    std::vector<mask> set_masks;
    for (const auto& s : sets) {
        mask m = 0;
        for (auto c : s) m |= mask{1} << c;
        set_masks.push_back(m);
    }
    // row_bits[a][n]: columns < col_bound where member a has a one in row n.
    const auto& members = f.arrays().members;
    std::vector<std::vector<mask>> row_bits(members.size(), std::vector<mask>(rows, 0));
    for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t n = 0; n < rows; ++n)
            for (std::size_t c = 0; c < col_bound; ++c)
                if (members[a].at(n, c)) row_bits[a][n] |= mask{1} << c;

    auto passes = [&](const std::vector<std::size_t>& idx) {
        for (std::size_t a = 0; a < members.size(); ++a) {
            std::size_t hit_rows = 0;
            for (std::size_t n = 0; n < rows; ++n)
                if (row_bits[a][n] & set_masks[idx[n]]) ++hit_rows;
            if (hit_rows < hits) return false;
        }
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                std::size_t ab = 0, ba = 0;
                for (std::size_t n = 0; n < rows; ++n) {
                    const mask fm = set_masks[idx[n]];
                    if (row_bits[a][n] & ~row_bits[b][n] & fm) ++ab;
                    if (row_bits[b][n] & ~row_bits[a][n] & fm) ++ba;
                }
                if (ab > exceptions && ba > exceptions) return false;
            }
        return true;
    };

    std::vector<std::size_t> idx(rows, 0);
    for (;;) {
        if (passes(idx)) {
            selector s;
            s.hits = hits;
            s.exceptions = exceptions;
            for (auto i : idx) s.sets.push_back(sets[i]);
            return s;
        }
        std::size_t pos = rows;
        while (pos > 0 && idx[pos - 1] + 1 == sets.size()) idx[--pos] = 0;
        if (pos == 0) return std::nullopt;
        ++idx[pos - 1];
    }
}

bool verify_diagonalizer(const array_family& f, const diagonalizer& d, std::size_t col_bound) {
    check_shape(f);
    if (d.g.size() != f.rows)
        throw bad_shape("diagonalizer has " + std::to_string(d.g.size()) + " values, family has " +
                        std::to_string(f.rows) + " rows");
    for (auto v : d.g)
        if (v >= col_bound) throw bad_shape("g value " + std::to_string(v) + " is outside the bound");
    return std::all_of(f.members.begin(), f.members.end(), [&](const bit_array& a) {
        for (std::size_t n = 0; n < f.rows; ++n)
            if (a.at(n, d.g[n]) == 1) return true;
        return false;
    });
}

std::optional<diagonalizer> o_diagonalizable(const array_family& f, std::size_t col_bound, double budget) {
    check_shape(f);
    const double space = std::pow(static_cast<double>(col_bound), static_cast<double>(f.rows));
    if (space > budget) throw search_space_too_large(space, budget);
    if (f.rows > 0 && col_bound == 0) return std::nullopt;

    diagonalizer d{std::vector<std::size_t>(f.rows, 0)};
    for (;;) {
        if (verify_diagonalizer(f, d, col_bound)) return d;
        std::size_t pos = f.rows;
        while (pos > 0 && d.g[pos - 1] + 1 == col_bound) d.g[--pos] = 0;
        if (pos == 0) return std::nullopt;
        ++d.g[pos - 1];
    }
}

gamma_family random_gamma_family(std::uint64_t seed, std::size_t rows, std::size_t columns,
                                 std::size_t count, double zero_density) {
    std::mt19937_64 rng(seed);
    // 53-bit uniform in [0,1); avoids implementation-defined distributions.
    auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    array_family f;
    f.rows = rows;
    for (std::size_t a = 0; a < count; ++a) {
        bit_array arr;
        for (std::size_t n = 0; n < rows; ++n) {
            array_row r;
            for (std::size_t m = 0; m < columns; ++m) r.word.push_back(uniform() < zero_density ? 0 : 1);
            while (!r.word.empty() && r.word.back() == 1) r.word.pop_back();
            arr.rows.push_back(std::move(r));
        }
        f.members.push_back(std::move(arr));
    }
    return gamma_family(std::move(f));
}

}  // namespace scheepers
