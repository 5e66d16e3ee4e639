#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ogs/subset.hpp"

namespace ogs {

struct BallSpec {
    GroupSpec spec;
    std::vector<Element> generators;
    int radius = 1;
    long long cap = 100000;
};

// All products of at most `radius` generator letters (generators and
// inverses), deduplicated and sorted ascending. Throws CapError past the cap.
std::vector<Element> ball(const BallSpec&);

struct Rational {
    long long num = 3;
    long long den = 1;
};

enum class Normalize { None, TranslateMin, TranslatePrimitive };

struct EnumerationTask {
    BallSpec ball;
    int k = 3;
    Rational alpha;       // |S^2| <= alpha*k + beta
    long long beta = -3;
    Normalize normalize = Normalize::None;
};

// Sorted universe with the rank of every pairwise product precomputed, so
// the subset search compares integers instead of elements. This is the
// performance core of the enumeration.
struct UniverseContext {
    GroupSpec spec;
    std::vector<Element> elems;           // sorted ascending
    int identity_index = -1;              // -1 when absent
    int32_t distinct_products = 0;
    std::vector<int32_t> prod_rank;       // n*n row-major
    int n = 0;

    int32_t rank(int i, int j) const { return prod_rank[static_cast<size_t>(i) * n + j]; }
};

UniverseContext make_universe(const GroupSpec&, std::vector<Element> sorted_elems);

// Depth-first enumeration of k-subsets (as ascending index vectors into the
// universe) whose square stays within alpha*k + beta, pruned by
// |P^2| + 2*(k - |P|) <= bound. The subset stream is deterministic
// (lexicographic by indices) for any worker count: the tree is split at
// depth 2 into independent tasks merged in canonical order.
void enumerate_subsets(const UniverseContext&, int k, Rational alpha, long long beta,
                       Normalize, int workers,
                       const std::function<void(const std::vector<int32_t>&)>& sink);

std::vector<FiniteSubset> enumerate_small_doubling(const EnumerationTask&, int workers = 1);

// The k-element set {a, ac, ..., ac^{k-2}, b} in Z x F2 with
// |S^2| = 4k - 5 exactly.
FiniteSubset construct_4k5(int k);

// {0, r, ..., (split-1)r} u {g, g+r, ...} with k elements in Z. Parameters
// passed as 0 are drawn from the seed (split in [1,k-1], ratio in [1,50],
// gap in [2k*ratio+1, 10^6]).
FiniteSubset random_two_ap(int k, Int gap, int split, Int ratio, uint64_t seed);

// exact |S^2| of a subset given by universe indices, via the rank table
int square_size_by_ranks(const UniverseContext&, const std::vector<int32_t>& idx);

int worker_count_override(int requested);

} // namespace ogs
