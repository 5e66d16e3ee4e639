#include "ogs/magnus.hpp"

#include <cstdlib>

namespace ogs::magnus {

namespace {

// multiply s by (1 + X_i) or by 1 - X_i + X_i^2 - ... (inverse letter),
// truncating at total degree <= degree
Series apply_letter(const Series& s, int letter, int degree) {
    int idx = std::abs(letter) - 1;
    char x = static_cast<char>(idx);
    Series out;
    if (letter > 0) {
        for (const auto& [m, c] : s) {
            out[m] += c;
            if (static_cast<int>(m.size()) < degree) out[m + x] += c;
        }
    } else {
        for (const auto& [m, c] : s) {
            Int coeff = c;
            std::string mono = m;
            for (int j = static_cast<int>(m.size()); j <= degree; ++j) {
                out[mono] += coeff;
                coeff = -coeff;
                mono += x;
            }
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0) it = out.erase(it);
        else ++it;
    }
    return out;
}

} // namespace

Series expand(const Word& w, int degree) {
    Series s;
    s[std::string()] = 1;
    for (int l : w.letters) s = apply_letter(s, l, degree);
    return s;
}

int lowest_sign(const Word& w, int degree) {
    Series s = expand(w, degree);
    for (const auto& [m, c] : s) {
        if (m.empty()) continue; // constant term is always 1
        if (c != 0) return c > 0 ? 1 : -1;
    }
    return 0;
}

} // namespace ogs::magnus
