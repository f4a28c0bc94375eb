#include "scheepers/problems.hpp"

namespace scheepers {

std::string_view problem_state_name(problem_state s) {
    switch (s) {
        case problem_state::open: return "Open";
        case problem_state::solved: return "Solved";
        case problem_state::partially_solved: return "PartiallySolved";
    }
    return "?";
}

std::string to_string(const problem_status& s) {
    switch (s.state) {
        case problem_state::open: return "Open";
        case problem_state::solved: return "Solved(\"" + s.answer + "\", \"" + s.credit + "\")";
        case problem_state::partially_solved: return "PartiallySolved(\"" + s.note + "\")";
    }
    return "?";
}

const std::vector<problem_entry>& list_problems() {
    static const std::vector<problem_entry> entries{
        {1, "1", "Is (Omega Gamma) = (Omega T)?", problem_status::open()},
        {2, "2", "Is Ufin(Gamma,Omega) = Sfin(Gamma,Omega)? And if not, does Ufin(Gamma,Gamma) imply Sfin(Gamma,Omega)?",
         problem_status::open()},
        {3, "3", "Does there exist (in ZFC) a set satisfying Ufin(O,O) but not Ufin(O,Gamma)?",
         problem_status::solved("Yes", "Lubomyr Zdomsky")},
        {4, "4", "Does S1(Omega,T) imply Ufin(Gamma,Gamma)?", problem_status::open()},
        {5, "5", "Is p = p*?", problem_status::open()},
        {6, "6", "Does there exist (in ZFC) an uncountable set satisfying S1(B_Gamma,B)?", problem_status::open()},
        {7, "7", "Assume that X has strong measure zero and |X| < b. Must all finite powers of X have strong measure zero?",
         problem_status::solved("Yes", "Scheepers; Bartoszyński")},
        {8, "8", "Does X not in NON(M) and Y not in D imply that X u Y is not in COF(M)?", problem_status::open()},
        {9, "9", "Is Split(Lambda,Lambda) preserved under taking finite unions?",
         problem_status::partially_solved("consistently yes")},
        {std::nullopt, "covMo", "Is cov(M) = od?", problem_status::open()},
    };
    return entries;
}

}  // namespace scheepers
