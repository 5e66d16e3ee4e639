#include <doctest.h>

#include <set>

#include "ogs/search.hpp"
#include "ogs/verify.hpp"

using namespace ogs;

namespace {

std::vector<std::vector<int32_t>> collect(const UniverseContext& ctx, int k, Rational a,
                                          long long b, Normalize n, int workers) {
    std::vector<std::vector<int32_t>> out;
    enumerate_subsets(ctx, k, a, b, n, workers,
                      [&](const std::vector<int32_t>& idx) { out.push_back(idx); });
    return out;
}

// unpruned oracle
std::vector<std::vector<int32_t>> brute(const UniverseContext& ctx, int k, Rational a,
                                        long long b, Normalize norm) {
    std::vector<std::vector<int32_t>> out;
    std::vector<int32_t> idx;
    std::function<void(int32_t)> rec = [&](int32_t from) {
        if (static_cast<int>(idx.size()) == k) {
            long long bound = a.num * k + b * a.den;
            if (static_cast<long long>(square_size_by_ranks(ctx, idx)) * a.den > bound) return;
            if (norm != Normalize::None && idx[0] != ctx.identity_index) return;
            if (norm == Normalize::TranslatePrimitive) {
                Int g = 0;
                const auto& base = std::get<IntVec>(ctx.elems[idx[0]].v).c[0];
                for (size_t i = 1; i < idx.size(); ++i)
                    g = gcd_int(g, std::get<IntVec>(ctx.elems[idx[i]].v).c[0] - base);
                if (g != 1) return;
            }
            out.push_back(idx);
            return;
        }
        for (int32_t x = from; x < ctx.n; ++x) {
            idx.push_back(x);
            rec(x + 1);
            idx.pop_back();
        }
    };
    rec(0);
    return out;
}

} // namespace

TEST_CASE("ball sizes and contents") {
    BallSpec bz{GroupSpec::lattice(1), {lattice_point({1})}, 3, 100000};
    auto b = ball(bz);
    CHECK(b.size() == 7); // {-3..3}
    CHECK(b.front() == lattice_point({-3}));
    CHECK(b.back() == lattice_point({3}));

    BallSpec bf{GroupSpec::free_group(2), {word_of({1}), word_of({2})}, 2, 100000};
    CHECK(ball(bf).size() == 17); // 1 + 4 + 12 reduced words

    auto h = GroupSpec::heisenberg();
    BallSpec bh{h, {heis(1, 0, 0), heis(0, 1, 0), heis(0, 0, 1)}, 2, 100000};
    auto hb = ball(bh);
    CHECK(std::count(hb.begin(), hb.end(), heis(0, 0, 1)) == 1);
    CHECK(std::count(hb.begin(), hb.end(), heis(0, 0, -1)) == 1);

    // closed under inverses
    for (const auto& e : hb)
        CHECK(std::count(hb.begin(), hb.end(), invert(h, e)) == 1);
}

TEST_CASE("ball cap raises a typed error") {
    BallSpec bz{GroupSpec::lattice(1), {lattice_point({1})}, 50, 20};
    CHECK_THROWS_AS((void)ball(bz), CapError);
}

TEST_CASE("pruned enumeration equals unpruned brute force") {
    // the spec's worked example: Z ball {0..6} via translate normalization
    BallSpec bz{GroupSpec::lattice(1), {lattice_point({1})}, 6, 100000};
    auto ctx = make_universe(bz.spec, ball(bz));
    auto got = collect(ctx, 3, {3, 1}, -3, Normalize::TranslateMin, 1);
    auto want = brute(ctx, 3, {3, 1}, -3, Normalize::TranslateMin);
    CHECK(got == want);

    std::set<std::vector<long long>> sets;
    for (const auto& idx : got) {
        std::vector<long long> v;
        for (auto i : idx)
            v.push_back(std::get<IntVec>(ctx.elems[i].v).c[0].convert_to<long long>());
        sets.insert(v);
    }
    CHECK(sets.count({0, 1, 2}) == 1);
    CHECK(sets.count({0, 1, 3}) == 1);
    CHECK(sets.count({0, 1, 5}) == 1); // |2S| = 6 exactly

    // the tighter 3k-4 bound keeps only the APs
    auto tight = collect(ctx, 3, {3, 1}, -4, Normalize::TranslateMin, 1);
    CHECK(tight == brute(ctx, 3, {3, 1}, -4, Normalize::TranslateMin));
    for (const auto& idx : tight)
        CHECK(square_size_by_ranks(ctx, idx) == 5);

    // a non-abelian family
    auto hb = GroupSpec::heisenberg();
    BallSpec bh{hb, {heis(1, 0, 0), heis(0, 1, 0), heis(0, 0, 1)}, 1, 100000};
    auto hctx = make_universe(hb, ball(bh));
    CHECK(collect(hctx, 3, {3, 1}, -2, Normalize::None, 1) ==
          brute(hctx, 3, {3, 1}, -2, Normalize::None));
    CHECK(collect(hctx, 4, {3, 1}, -2, Normalize::None, 1) ==
          brute(hctx, 4, {3, 1}, -2, Normalize::None));
}

TEST_CASE("radius-2 heisenberg enumeration contains the conjugate triples") {
    auto h = GroupSpec::heisenberg();
    BallSpec bh{h, {heis(1, 0, 0), heis(0, 1, 0), heis(0, 0, 1)}, 2, 100000};
    auto ctx = make_universe(h, ball(bh));
    // {a, a^b, b} with a^b = a*z
    std::vector<Element> want{heis(0, 1, 0), heis(1, 0, 0), heis(1, 0, 1)};
    bool found = false;
    enumerate_subsets(ctx, 3, {3, 1}, -2, Normalize::None, 1,
                      [&](const std::vector<int32_t>& idx) {
                          std::vector<Element> e;
                          for (auto i : idx) e.push_back(ctx.elems[i]);
                          if (e == want) found = true;
                      });
    CHECK(found);
}

TEST_CASE("a bound below 2k-1 yields an empty stream") {
    BallSpec bz{GroupSpec::lattice(1), {lattice_point({1})}, 5, 100000};
    auto ctx = make_universe(bz.spec, ball(bz));
    CHECK(collect(ctx, 4, {2, 1}, -2, Normalize::None, 1).empty());
}

TEST_CASE("enumeration is deterministic across worker counts") {
    BallSpec bz{GroupSpec::lattice(1), {lattice_point({1})}, 6, 100000};
    auto ctx = make_universe(bz.spec, ball(bz));
    auto w1 = collect(ctx, 4, {3, 1}, -2, Normalize::TranslateMin, 1);
    auto w2 = collect(ctx, 4, {3, 1}, -2, Normalize::TranslateMin, 2);
    auto w8 = collect(ctx, 4, {3, 1}, -2, Normalize::TranslateMin, 8);
    CHECK(w1 == w2);
    CHECK(w1 == w8);
    CHECK(!w1.empty());
}

TEST_CASE("construct_4k5 meets the exact count and the proof partition") {
    for (int k : {3, 4, 10}) {
        auto s = construct_4k5(k);
        CHECK(s.size() == k);
        CHECK(square_size(s) == 4 * k - 5);
        auto pb = partition_square(s, false);
        CHECK(pb.is_disjoint);
        CHECK(pb.t_square.size() == 2 * k - 3);
        CHECK(static_cast<int>(pb.cross.size()) == 2 * k - 3);
    }
    CHECK_THROWS_AS((void)construct_4k5(2), InputError);
}

TEST_CASE("random_two_ap instances") {
    auto s = random_two_ap(11, Int(1000), 5, Int(1), 0);
    CHECK(s.size() == 11);
    CHECK(square_size(s) == 30); // 3k-3

    // degenerate merge: the two progressions join into one AP
    auto m = random_two_ap(5, Int(4), 4, Int(1), 0);
    CHECK(m.size() == 5);
    CHECK(square_size(m) == 2 * 5 - 1);

    // ratio scaling does not change |2S|
    auto r3 = random_two_ap(11, Int(3000), 5, Int(3), 0);
    CHECK(square_size(r3) == 30);

    // drawn parameters are deterministic per seed
    auto d1 = random_two_ap(8, 0, 0, 0, 123);
    auto d2 = random_two_ap(8, 0, 0, 0, 123);
    CHECK(d1.elems == d2.elems);
}

TEST_CASE("verify smoke: T1_9 on a small range") {
    Json params{{"theorem", "T1_9"}, {"seed", 0}, {"k_min", 3}, {"k_max", 6}};
    auto rep = verify(TheoremId::T1_9, params);
    CHECK(rep.verified());
    CHECK(rep.corpus_size == 4);
    CHECK(rep.verdicts.at("constructed") == 4);
    CHECK(rep.verdicts.at("ambient_violation_witnessed") == 1);
}

TEST_CASE("verify smoke: P5_forms on a radius-2 BS(1,2) ball") {
    Json params{{"theorem", "P5_forms"},
                {"seed", 0},
                {"balls", Json::array({Json{
                    {"group", Json{{"family", "bs12"}}},
                    {"generators", Json::array({Json::array({Json::array({1, 0}), 0}),
                                                Json::array({Json::array({0, 0}), 1})})},
                    {"radius", 2},
                    {"cap", 100000}}})}};
    auto rep = verify(TheoremId::P5_forms, params);
    CHECK(rep.verified());
    CHECK(rep.corpus_size > 0);
}

TEST_CASE("verify smoke: T1_2, T1_4 and T1_5_iv pipelines on reduced corpora") {
    Json p2{{"theorem", "T1_2"},
            {"seed", 0},
            {"exhaustive", Json{{"diameter", 20}, {"k", 12}}},
            {"random", Json{{"count", 25}, {"k", 12}, {"max_gap", 100000}, {"max_ratio", 5}}}};
    auto r2 = verify(TheoremId::T1_2, p2);
    CHECK(r2.verified());
    CHECK(r2.corpus_size > 25);

    Json p4{{"theorem", "T1_4"},
            {"seed", 0},
            {"cases", Json::array({Json{{"c", 2},
                                        {"box", Json::array({9})},
                                        {"sizes", Json::array({3, 5})}}})}};
    auto r4 = verify(TheoremId::T1_4, p4);
    CHECK(r4.verified());
    CHECK(r4.verdicts.at("rank_only") > 0);

    Json p5{{"theorem", "T1_5_iv"},
            {"seed", 0},
            {"lattice", Json::array({Json{{"box", Json::array({9})},
                                          {"sizes", Json::array({4, 5})},
                                          {"b_range", Json::array({1, 2})}}})}};
    auto r5 = verify(TheoremId::T1_5_iv, p5);
    CHECK(r5.verified());
    CHECK(r5.verdicts.at("rank_ok") > 0);
}

TEST_CASE("counterexample records re-validate, tampered ones do not") {
    // a genuine violation record: the free factor of Z x F2 breaks the
    // metabelian law
    auto g = GroupSpec::product(GroupSpec::lattice(1), GroupSpec::free_group(2));
    auto gens = Json::array({element_to_json(g, pair_elem(lattice_point({Int(0)}), word_of({1}))),
                             element_to_json(g, pair_elem(lattice_point({Int(0)}), word_of({2})))});
    auto rep = law_check(
        g, {pair_elem(lattice_point({Int(0)}), word_of({1})),
            pair_elem(lattice_point({Int(0)}), word_of({2}))},
        GroupLaw::Metabelian, 4, 100, 0);
    REQUIRE(!rep.holds);
    Json viol = Json::array();
    for (const auto& e : *rep.first_violation) viol.push_back(element_to_json(g, e));
    Json set{{"group", spec_to_json(g)}, {"elements", gens}};
    Json cex{{"claim", "law_violation"}, {"law", "metabelian"}, {"set", set}, {"violation", viol}};
    CHECK(revalidate_counterexample(cex));

    // tamper: an abelian tuple cannot violate the law
    Json fake = cex;
    Json idelem = element_to_json(g, identity(g));
    fake["violation"] = Json::array({idelem, idelem, idelem, idelem});
    CHECK(!revalidate_counterexample(fake));

    // fabricated square bound violation does not re-validate
    Json okset{{"group", Json{{"family", "lattice"}, {"rank", 1}}},
               {"elements", Json::array({Json::array({0}), Json::array({1})})}};
    Json fake2{{"claim", "square_lower_bound"}, {"set", okset}, {"square_size", 3}};
    CHECK(!revalidate_counterexample(fake2));
}
