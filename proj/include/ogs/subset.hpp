#pragma once

#include <utility>
#include <vector>

#include "ogs/group.hpp"

namespace ogs {

// Duplicate-free list of elements, strictly increasing in the group order.
struct FiniteSubset {
    GroupSpec spec;
    std::vector<Element> elems;

    int size() const { return static_cast<int>(elems.size()); }
};

FiniteSubset make_subset(const GroupSpec&, std::vector<Element> raw);

// S^2 with full witness provenance: witnesses[v] lists every ordered index
// pair (i,j), 0-based into S, with x_i x_j = values[v]. Every one of the
// k^2 pairs appears in exactly one list.
struct SquareSet {
    std::vector<Element> values;
    std::vector<std::vector<std::pair<int, int>>> witnesses;

    int size() const { return static_cast<int>(values.size()); }
};

SquareSet square(const FiniteSubset&);
int square_size(const FiniteSubset&);

struct DoublingReport {
    long long k = 0;
    long long square_size = 0;
    long long deficit_3k3 = 0; // square_size - (3k-3); the paper's b when >= 1
    long long b_excess = 0;    // same value, kept under the paper's name
    long long s_excess = 0;    // square_size - (3k-2)
};

DoublingReport doubling_report(const FiniteSubset&);

// true iff [y, t] = 1 for every t in T
bool elementwise_commutes(const GroupSpec&, const Element& y, const FiniteSubset& T);

// Blocks of S^2 = T^2 u (yT u Ty) u {y^2}, where y is the maximal element
// of S (or minimal when split_at_max = false) and T = S \ {y}.
struct PartitionBlocks {
    SquareSet t_square;
    std::vector<Element> cross; // values of yT u Ty, ascending
    std::vector<Element> top;   // {y^2}
    bool is_disjoint = false;
};

PartitionBlocks partition_square(const FiniteSubset&, bool split_at_max);

} // namespace ogs
