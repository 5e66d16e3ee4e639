#pragma once

#include <map>
#include <string>
#include <vector>

#include "ogs/group.hpp"
#include "ogs/ints.hpp"

namespace ogs::magnus {

// Monomials in the non-commutative power series ring Z<<X_1..X_n>> are byte
// strings of 0-based generator indices, ordered degree first, then
// lexicographically (graded-lex).
struct GradedLex {
    bool operator()(const std::string& a, const std::string& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

using Series = std::map<std::string, Int, GradedLex>;

// Expansion of a reduced word under g_i -> 1 + X_i, truncated to total
// degree <= degree. Inverse letters expand to the geometric series
// 1 - X_i + X_i^2 - ...
Series expand(const Word& w, int degree);

// Sign of the graded-lex lowest non-constant coefficient of expand(w),
// or 0 when the expansion is 1 up to the truncation degree.
int lowest_sign(const Word& w, int degree);

} // namespace ogs::magnus
