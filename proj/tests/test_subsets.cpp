#include <doctest.h>

#include <algorithm>
#include <set>

#include "ogs/search.hpp"
#include "ogs/subset.hpp"
#include "test_util.hpp"

using namespace ogs;
using testutil::all_families;
using testutil::rand_element;

namespace {

// independent oracle: all ordered products, deduplicated by key
int brute_square_size(const FiniteSubset& s) {
    std::set<std::string> vals;
    for (const auto& a : s.elems)
        for (const auto& b : s.elems) vals.insert(element_key(multiply(s.spec, a, b)));
    return static_cast<int>(vals.size());
}

} // namespace

TEST_CASE("make_subset sorts and deduplicates") {
    auto z = GroupSpec::lattice(1);
    auto s = make_subset(z, {lattice_point({3}), lattice_point({1}), lattice_point({1}),
                             lattice_point({0})});
    CHECK(s.size() == 3);
    CHECK(s.elems[0] == lattice_point({0}));
    CHECK(s.elems[1] == lattice_point({1}));
    CHECK(s.elems[2] == lattice_point({3}));

    auto h = GroupSpec::heisenberg();
    auto sh = make_subset(h, {heis(1, 0, 0), heis(0, 1, 0)});
    CHECK(sh.elems[0] == heis(0, 1, 0)); // (0,1) < (1,0) lexicographically

    auto f2 = GroupSpec::free_group(2);
    auto sf = make_subset(f2, {word_of({1, 2}), word_of({1})});
    CHECK(sf.elems[0] == word_of({1}));
    CHECK(sf.elems[1] == word_of({1, 2}));
}

TEST_CASE("make_subset propagates undecided comparisons") {
    auto f2 = GroupSpec::free_group(2, 1, 1); // cap too low to separate [g1,g2] from 1
    std::vector<Element> raw{word_of({-1, -2, 1, 2}), identity(f2)};
    CHECK_THROWS_AS((void)make_subset(f2, raw), UndecidedOrderError);
}

TEST_CASE("square of an AP in Z") {
    auto z = GroupSpec::lattice(1);
    auto s = make_subset(z, {lattice_point({0}), lattice_point({1}), lattice_point({2})});
    auto sq = square(s);
    CHECK(sq.size() == 5);
    CHECK(sq.values.front() == lattice_point({0}));
    CHECK(sq.values.back() == lattice_point({4}));
}

TEST_CASE("square of the BS(1,2) triple {x, xc, xc^2} has 7 values") {
    auto g = GroupSpec::bs12();
    auto x = bs_elem(Dyadic(), 1);
    auto c = bs_elem(Dyadic::from_int(1), 0);
    auto xc = multiply(g, x, c);
    auto xc2 = multiply(g, xc, c);
    auto s = make_subset(g, {x, xc, xc2});
    CHECK(square(s).size() == 7);
    CHECK(brute_square_size(s) == 7);
}

TEST_CASE("square of {a, ac, b} in Z x F2 has 7 = 4*3-5 values") {
    auto s = construct_4k5(3);
    CHECK(square(s).size() == 7);
    CHECK(brute_square_size(s) == 7);
}

TEST_CASE("witness completeness: the k^2 ordered pairs appear exactly once") {
    for (const auto& g : all_families()) {
        SeededRng rng(11);
        std::vector<Element> raw;
        for (int i = 0; i < 6; ++i) raw.push_back(rand_element(g, rng));
        auto s = make_subset(g, raw);
        auto sq = square(s);
        const int k = s.size();
        std::set<std::pair<int, int>> seen;
        long long total = 0;
        for (size_t v = 0; v < sq.values.size(); ++v) {
            CHECK(!sq.witnesses[v].empty());
            for (auto [i, j] : sq.witnesses[v]) {
                CHECK(seen.insert({i, j}).second);
                ++total;
                // the witness reproduces its value
                CHECK(multiply(g, s.elems[i], s.elems[j]) == sq.values[v]);
            }
        }
        CHECK(total == static_cast<long long>(k) * k);
    }
}

TEST_CASE("order coherence: extreme values of S^2 are the squares of the extremes") {
    for (const auto& g : all_families()) {
        SeededRng rng(12);
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<Element> raw;
            for (int i = 0; i < 5; ++i) raw.push_back(rand_element(g, rng));
            auto s = make_subset(g, raw);
            auto sq = square(s);
            CHECK(sq.values.front() == multiply(g, s.elems.front(), s.elems.front()));
            CHECK(sq.values.back() == multiply(g, s.elems.back(), s.elems.back()));
        }
    }
}

TEST_CASE("square is invariant under input permutation") {
    auto g = GroupSpec::heisenberg();
    SeededRng rng(13);
    std::vector<Element> raw;
    for (int i = 0; i < 6; ++i) raw.push_back(rand_element(g, rng));
    auto s1 = make_subset(g, raw);
    std::reverse(raw.begin(), raw.end());
    std::swap(raw[0], raw[2]);
    auto s2 = make_subset(g, raw);
    CHECK(s1.elems == s2.elems);
    CHECK(square(s1).values == square(s2).values);
}

TEST_CASE("order bound |S^2| >= 2|S|-1 on sampled sets in every family") {
    for (const auto& g : all_families()) {
        SeededRng rng(14);
        for (int trial = 0; trial < 150; ++trial) {
            std::vector<Element> raw;
            int want = 2 + static_cast<int>(rng.range(0, 4));
            for (int i = 0; i < want; ++i) raw.push_back(rand_element(g, rng));
            auto s = make_subset(g, raw);
            CHECK(square(s).size() >= 2 * s.size() - 1);
        }
    }
}

TEST_CASE("doubling report fields") {
    auto z = GroupSpec::lattice(1);
    auto s = make_subset(z, {lattice_point({0}), lattice_point({1}), lattice_point({2})});
    auto r = doubling_report(s);
    CHECK(r.k == 3);
    CHECK(r.square_size == 5);
    CHECK(r.deficit_3k3 == -1);

    auto s2 = make_subset(z, {lattice_point({0}), lattice_point({1}), lattice_point({3})});
    auto r2 = doubling_report(s2);
    CHECK(r2.square_size == 6);
    CHECK(r2.deficit_3k3 == 0);

    auto r3 = doubling_report(construct_4k5(3));
    CHECK(r3.s_excess == 0); // 7 = 3*3-2

    CHECK_THROWS_AS((void)doubling_report(make_subset(z, {lattice_point({5})})), InputError);
}

TEST_CASE("elementwise_commutes") {
    auto h = GroupSpec::heisenberg();
    auto t = make_subset(h, {heis(1, 0, 0), heis(0, 1, 0)});
    CHECK(elementwise_commutes(h, heis(0, 0, 1), t));

    auto g = GroupSpec::bs12();
    auto tc = make_subset(g, {bs_elem(Dyadic::from_int(1), 0)});
    CHECK(!elementwise_commutes(g, bs_elem(Dyadic(), 1), tc));

    auto zf = GroupSpec::product(GroupSpec::lattice(1), GroupSpec::free_group(2));
    auto a = pair_elem(lattice_point({Int(1)}), identity(zf.parts[1]));
    auto c = pair_elem(lattice_point({Int(0)}), word_of({2}));
    auto ta = make_subset(zf, {a, multiply(zf, a, c)});
    CHECK(elementwise_commutes(zf, a, ta));
}

TEST_CASE("partition_square blocks") {
    auto z = GroupSpec::lattice(1);
    // 1+1 = 0+2, so the blocks collide
    auto s = make_subset(z, {lattice_point({0}), lattice_point({1}), lattice_point({2})});
    auto pb = partition_square(s, true);
    CHECK(!pb.is_disjoint);

    // the 4k-5 construction with y = b (the minimum) is disjoint with
    // |cross| = 2k-3
    auto s4 = construct_4k5(4);
    auto pb4 = partition_square(s4, false);
    CHECK(pb4.is_disjoint);
    CHECK(pb4.cross.size() == 5);
    CHECK(pb4.t_square.size() == 5);
    CHECK(pb4.t_square.size() + pb4.cross.size() + 1 == static_cast<size_t>(square(s4).size()));

    // BS triple split at max: x * xc^2 = xc * x makes the blocks meet
    auto g = GroupSpec::bs12();
    auto x = bs_elem(Dyadic(), 1);
    auto c = bs_elem(Dyadic::from_int(1), 0);
    auto xc = multiply(g, x, c);
    auto xc2 = multiply(g, xc, c);
    auto st = make_subset(g, {x, xc, xc2});
    auto pbt = partition_square(st, true);
    CHECK(!pbt.is_disjoint);
    CHECK(pbt.t_square.size() == 4);
    CHECK(pbt.cross.size() == 3);
}
