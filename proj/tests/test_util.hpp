#pragma once

#include "ogs/group.hpp"
#include "ogs/rng.hpp"

namespace ogs::testutil {

// seeded random element, coordinate magnitudes kept small so products stay fast
inline Element rand_element(const GroupSpec& g, SeededRng& rng) {
    switch (g.family) {
        case Family::Lattice: {
            std::vector<Int> c;
            for (int i = 0; i < g.rank; ++i) c.push_back(Int(rng.range(-9, 9)));
            return lattice_point(std::move(c));
        }
        case Family::Free: {
            int len = static_cast<int>(rng.range(0, 6));
            std::vector<int> letters;
            for (int i = 0; i < len; ++i) {
                int idx = static_cast<int>(rng.range(1, g.rank));
                letters.push_back(rng.coin() ? idx : -idx);
            }
            return word_of(std::move(letters));
        }
        case Family::Heisenberg:
            return heis(Int(rng.range(-9, 9)), Int(rng.range(-9, 9)), Int(rng.range(-9, 9)));
        case Family::BS12: {
            Dyadic t(Int(rng.range(-15, 15)), static_cast<unsigned>(rng.range(0, 3)));
            return bs_elem(std::move(t), Int(rng.range(-4, 4)));
        }
        case Family::Golden:
            return golden_elem(Int(rng.range(-9, 9)), Int(rng.range(-9, 9)),
                               Int(rng.range(-4, 4)));
        case Family::Product:
            return pair_elem(rand_element(g.parts[0], rng), rand_element(g.parts[1], rng));
    }
    throw InputError("bad family");
}

inline std::vector<GroupSpec> all_families() {
    return {GroupSpec::lattice(2),
            GroupSpec::free_group(2),
            GroupSpec::heisenberg(),
            GroupSpec::bs12(),
            GroupSpec::golden(),
            GroupSpec::product(GroupSpec::lattice(1), GroupSpec::free_group(2))};
}

} // namespace ogs::testutil
