#include <doctest.h>

#include "freiman_oracle.hpp"
#include "ogs/lattice.hpp"
#include "ogs/rng.hpp"

using namespace ogs;

namespace {

LatticePoint P(std::initializer_list<long long> v) {
    LatticePoint p;
    for (auto x : v) p.push_back(Int(x));
    return p;
}

std::vector<LatticePoint> zset(std::initializer_list<long long> v) {
    std::vector<LatticePoint> out;
    for (auto x : v) out.push_back(P({x}));
    return out;
}

} // namespace

TEST_CASE("subgroup_rank") {
    CHECK(subgroup_rank(zset({2, 3})) == 1);
    CHECK(subgroup_rank({P({1, 0}), P({0, 1}), P({1, 1})}) == 2);
    CHECK(subgroup_rank({P({2, 0}), P({0, 2}), P({1, 1})}) == 2);
    CHECK(subgroup_rank({P({0, 0})}) == 0);
}

TEST_CASE("freiman_dimension examples") {
    CHECK(freiman_dimension(zset({0, 1, 2})) == 1); // single relation 0+2 = 1+1
    CHECK(freiman_dimension(zset({0, 1, 3})) == 2); // no collisions
    CHECK(freiman_dimension(zset({0, 1})) == 1);
    CHECK_THROWS_AS((void)freiman_dimension(zset({5})), InputError);
}

TEST_CASE("freiman_dimension agrees with the brute-force witness oracle") {
    // a slice of the acceptance corpus; the full sweep runs there
    for (long long a = 0; a < 8; ++a)
        for (long long b = a + 1; b < 9; ++b)
            for (long long c = b + 1; c < 10; ++c) {
                int lib = freiman_dimension(zset({a, b, c}));
                int oracle = freiman_oracle::freiman_dim({a, b, c});
                CHECK(lib == oracle);
            }
    CHECK(freiman_dimension(zset({0, 1, 2, 4, 8})) ==
          freiman_oracle::freiman_dim({0, 1, 2, 4, 8}));
    CHECK(freiman_dimension(zset({0, 2, 3, 4, 7})) ==
          freiman_oracle::freiman_dim({0, 2, 3, 4, 7}));
}

TEST_CASE("abelian_profile examples and Lemma 3.1 tightness") {
    auto p = abelian_profile(zset({0, 1, 2}));
    CHECK(p.k == 3);
    CHECK(p.rank_m == 1);
    CHECK(p.freiman_d == 1);
    CHECK(p.square_size == 5);

    auto p2 = abelian_profile({P({0, 0}), P({1, 0}), P({0, 1})});
    CHECK(p2.rank_m == 2);
    CHECK(p2.freiman_d == 2);
    CHECK(p2.square_size == 6); // equality in Freiman's bound

    auto p3 = abelian_profile(zset({0, 1}));
    CHECK(p3.rank_m == 1);
    CHECK(p3.freiman_d == 1);
    CHECK(p3.square_size == 3);

    // the tight example: m = 2 = |S|, d = 1
    auto p4 = abelian_profile({P({0, 1}), P({1, 1})});
    CHECK(p4.rank_m == 2);
    CHECK(p4.freiman_d == 1);
}

TEST_CASE("lemma 3.1 chain and freiman inequality on a small box sweep") {
    // asserted inside abelian_profile; a throw here would fail the test
    std::vector<LatticePoint> box;
    for (long long x = 0; x < 4; ++x)
        for (long long y = 0; y < 3; ++y) box.push_back(P({x, y}));
    const int n = static_cast<int>(box.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                (void)abelian_profile({box[i], box[j], box[k]});
}

TEST_CASE("freiman_dimension is invariant under translation and injective affine maps") {
    SeededRng rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<LatticePoint> s;
        while (s.size() < 4) {
            auto p = P({rng.range(0, 5), rng.range(0, 5)});
            if (std::find(s.begin(), s.end(), p) == s.end()) s.push_back(p);
        }
        int d = freiman_dimension(s);

        long long m00 = rng.range(1, 3), m11 = rng.range(1, 3);
        long long m01 = rng.range(0, 2);
        long long tx = rng.range(-20, 20), ty = rng.range(-20, 20);
        std::vector<LatticePoint> img;
        for (const auto& p : s)
            img.push_back(P({m00 * p[0].convert_to<long long>() +
                                 m01 * p[1].convert_to<long long>() + tx,
                             m11 * p[1].convert_to<long long>() + ty}));
        CHECK(freiman_dimension(img) == d);
    }
}

TEST_CASE("ap_cover examples") {
    auto c1 = ap_cover(zset({0, 2, 6}));
    REQUIRE(c1.has_value());
    CHECK(c1->base == P({0}));
    CHECK(c1->ratio == P({2}));
    CHECK(c1->length == 4);
    CHECK(c1->positions == std::vector<long long>{0, 1, 3});

    auto c2 = ap_cover({P({0, 0}), P({1, 1}), P({3, 3})});
    REQUIRE(c2.has_value());
    CHECK(c2->ratio == P({1, 1}));
    CHECK(c2->length == 4);

    CHECK(!ap_cover({P({0, 0}), P({1, 0}), P({0, 1})}).has_value());
}

TEST_CASE("full AP cover forces freiman dimension 1, and covers force rank 1") {
    SeededRng rng(22);
    for (int trial = 0; trial < 40; ++trial) {
        long long base = rng.range(-10, 10), step = rng.range(1, 6);
        int k = 3 + static_cast<int>(rng.range(0, 3));
        std::vector<LatticePoint> s;
        for (int i = 0; i < k; ++i) s.push_back(P({base + step * i}));
        auto cover = ap_cover(s);
        REQUIRE(cover.has_value());
        CHECK(cover->length == k);
        CHECK(freiman_dimension(s) == 1);
    }
    // holes can raise the dimension, but the difference lattice stays rank 1
    auto holed = zset({0, 1, 4});
    auto cover = ap_cover(holed);
    REQUIRE(cover.has_value());
    CHECK(cover->length == 5);
    CHECK(freiman_dimension(holed) == 2);
    std::vector<LatticePoint> diffs;
    for (const auto& p : holed) diffs.push_back(P({p[0].convert_to<long long>() - 0}));
    CHECK(subgroup_rank(diffs) == 1);
}

TEST_CASE("two_ap_cover examples and tie-breaking") {
    auto t1 = two_ap_cover(zset({0, 1, 2, 100, 101}), 5);
    REQUIRE(t1.has_value());
    CHECK(t1->shared_ratio == P({1}));
    CHECK(t1->first.length + t1->second.length == 5);
    CHECK(t1->membership == std::vector<int>{0, 0, 0, 1, 1});

    // a plain AP splits anywhere; the lexicographically smallest membership
    // vector keeps the longest prefix
    auto t2 = two_ap_cover(zset({0, 1, 2, 3}), 4);
    REQUIRE(t2.has_value());
    CHECK(t2->membership == std::vector<int>{0, 0, 0, 1});

    auto t3 = two_ap_cover(zset({0, 1, 3}), 3);
    REQUIRE(t3.has_value());
    CHECK(t3->first.length == 2);
    CHECK(t3->second.length == 1);

    // non-primitive shared ratio is found
    auto t4 = two_ap_cover(zset({0, 3, 6, 1000, 1003}), 5);
    REQUIRE(t4.has_value());
    CHECK(t4->shared_ratio == P({3}));

    CHECK(!two_ap_cover(zset({0, 1, 10, 25, 60}), 5).has_value());
}

TEST_CASE("classify_abelian examples") {
    std::vector<LatticePoint> s1;
    for (long long i = 0; i <= 10; ++i) s1.push_back(P({i}));
    auto v1 = classify_abelian(s1, ClassifyMode::Thm3k3);
    CHECK(v1.branch == "ap");
    REQUIRE(v1.ap.has_value());
    CHECK(v1.ap->length == 11);
    CHECK(v1.ap->length <= 2 * 11 - 1);

    std::vector<LatticePoint> s2;
    for (long long i = 0; i < 5; ++i) s2.push_back(P({i}));
    for (long long i = 0; i < 6; ++i) s2.push_back(P({1000 + i}));
    CHECK(additive_square_size(s2) == 30);
    auto v2 = classify_abelian(s2, ClassifyMode::Thm3k3);
    CHECK(v2.branch == "two_ap");
    REQUIRE(v2.two_ap.has_value());
    CHECK(v2.two_ap->first.length + v2.two_ap->second.length == 11);

    std::vector<LatticePoint> s3 = {P({0, 0}), P({1, 0}), P({2, 0}),
                                    P({0, 1}), P({1, 1}), P({2, 1})};
    CHECK(additive_square_size(s3) == 15);
    auto v3 = classify_abelian(s3, ClassifyMode::Thm3k3);
    CHECK(v3.branch == "small_case");
    CHECK(v3.rank_m == 2);
    CHECK(v3.rank_ok);
    REQUIRE(v3.two_ap.has_value());
    CHECK(v3.two_ap->shared_ratio == P({1, 0}));
    CHECK(v3.two_ap->first.length == 3);
    CHECK(v3.two_ap->second.length == 3);
}

TEST_CASE("classify hypothesis violations raise typed errors") {
    CHECK_THROWS_AS((void)classify_abelian(zset({0, 1, 5, 20}), ClassifyMode::Thm3k3),
                    HypothesisError);
    CHECK_THROWS_AS((void)classify_abelian(zset({0, 1, 2}), ClassifyMode::Thm3k2),
                    HypothesisError);
    CHECK_THROWS_AS((void)classify_abelian(zset({0, 1, 2}), ClassifyMode::ThmCk, 1), InputError);
}

TEST_CASE("thm_ck rank bound") {
    // |S+S| = 5 < 3k-3 = 6 forces a single generator direction
    std::vector<LatticePoint> s = {P({0, 0}), P({2, 2}), P({4, 4})};
    auto v = classify_abelian(s, ClassifyMode::ThmCk, 2);
    CHECK(v.branch == "rank_only");
    CHECK(v.rank_m == 1);
}
