#ifndef SCHEEPERS_PROBLEMS_HPP
#define SCHEEPERS_PROBLEMS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace scheepers {

enum class problem_state { open, solved, partially_solved };

std::string_view problem_state_name(problem_state s);  // Open, Solved, PartiallySolved

struct problem_status {
    problem_state state = problem_state::open;
    std::string answer;  // solved: the answer
    std::string credit;  // solved: who solved it
    std::string note;    // partially solved

    static problem_status open() { return {}; }
    static problem_status solved(std::string answer, std::string credit) {
        return {problem_state::solved, std::move(answer), std::move(credit), {}};
    }
    static problem_status partially_solved(std::string note) {
        return {problem_state::partially_solved, {}, {}, std::move(note)};
    }

    friend bool operator==(const problem_status&, const problem_status&) = default;
};

/// `Open`, `Solved("Yes", "Lubomyr Zdomsky")`, `PartiallySolved("consistently yes")`.
std::string to_string(const problem_status& s);

struct problem_entry {
    std::optional<int> issue;  // absent for the current problem of the month
    std::string label;
    std::string statement;
    problem_status status;
};

/// The nine problems from earlier issues in issue order, then the
/// current problem of the month.
const std::vector<problem_entry>& list_problems();

/// Problems announced as solved: four critical cardinalities, 21
/// implications and a half (a consistency answer).
struct solved_tally {
    int cardinalities = 4;
    int implications = 21;
    int halves = 1;
};

inline constexpr solved_tally announced_tally{};

}  // namespace scheepers

#endif  // SCHEEPERS_PROBLEMS_HPP
