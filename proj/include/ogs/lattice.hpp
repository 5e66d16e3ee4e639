#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ogs/ints.hpp"

namespace ogs {

using LatticePoint = std::vector<Int>;

// rank of the subgroup of Z^m generated by the points themselves
int subgroup_rank(const std::vector<LatticePoint>& pts);

// Freiman dimension d(S) = (k-1) - rank_Q(V), where V is spanned by the
// vectors e_i + e_j - e_k - e_l over all coincidences s_i+s_j = s_k+s_l.
// The universal Freiman image of S is the quotient of the affine lattice on
// k points by these relations; its affine dimension is exactly this value.
int freiman_dimension(const std::vector<LatticePoint>& pts);

struct AbelianProfile {
    long long k = 0;
    long long rank_m = 0;
    long long freiman_d = 0;
    long long square_size = 0;
};

// Computes the profile and asserts m <= d+1 <= k and
// |S+S| >= (d+1)k - d(d+1)/2; a violation throws CounterexampleError.
AbelianProfile abelian_profile(const std::vector<LatticePoint>& pts);

struct APCover {
    LatticePoint base;              // u
    LatticePoint ratio;             // t, generator of the difference lattice
    long long length = 0;           // l = 1 + max position
    std::vector<long long> positions; // aligned with the sorted input
};

// Minimal-length progression cover, present iff the differences from the
// minimum span a rank-1 lattice.
std::optional<APCover> ap_cover(const std::vector<LatticePoint>& pts);

struct TwoAPCover {
    APCover first, second;
    LatticePoint shared_ratio;
    std::vector<int> membership; // 0/1 per element of the sorted input
};

// Two progressions with a common ratio covering S with total length exactly
// required_length_sum. Candidate ratios are the pairwise differences ordered
// by (norm, lex); within a ratio the lexicographically smallest membership
// vector wins.
std::optional<TwoAPCover> two_ap_cover(const std::vector<LatticePoint>& pts,
                                       long long required_length_sum);

enum class ClassifyMode { Thm3k3, Thm3k2, ThmCk };

struct ClassificationVerdict {
    std::string branch; // "ap" | "two_ap" | "small_case" | "rank_only" | "counterexample"
    long long k = 0;
    long long square_size = 0;
    int rank_m = 0;
    int rank_bound = 0;
    bool rank_ok = false;
    std::optional<APCover> ap;
    std::optional<TwoAPCover> two_ap;
    std::string note;
};

ClassificationVerdict classify_abelian(const std::vector<LatticePoint>& pts, ClassifyMode mode,
                                       int c = 0);

// |S+S|, exact
long long additive_square_size(const std::vector<LatticePoint>& pts);

// sorted ascending (lexicographic = the lattice group order), deduplicated
std::vector<LatticePoint> canonicalize_points(std::vector<LatticePoint> pts);

} // namespace ogs
