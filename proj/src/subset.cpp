#include "ogs/subset.hpp"

#include <algorithm>
#include <queue>

namespace ogs {

FiniteSubset make_subset(const GroupSpec& g, std::vector<Element> raw) {
    if (raw.empty()) throw InputError("make_subset: need at least one element");
    std::sort(raw.begin(), raw.end(),
              [&](const Element& a, const Element& b) { return less(g, a, b); });
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    return FiniteSubset{g, std::move(raw)};
}

// k sorted rows x_i * S (sorted because right translation preserves the
// order), k-way merged with a heap. O(k^2 log k) exact comparisons.
SquareSet square(const FiniteSubset& s) {
    const auto& g = s.spec;
    const int k = s.size();
    if (k < 1) throw InputError("square: empty subset");

    std::vector<std::vector<Element>> rows(k);
    for (int i = 0; i < k; ++i) {
        rows[i].reserve(k);
        for (int j = 0; j < k; ++j) rows[i].push_back(multiply(g, s.elems[i], s.elems[j]));
    }

    // heap of (row, col), smallest head first
    auto cmp_heads = [&](const std::pair<int, int>& a, const std::pair<int, int>& b) {
        Ord o = compare(g, rows[a.first][a.second], rows[b.first][b.second]);
        if (o != Ord::EQ) return o == Ord::GT;
        return a > b; // deterministic tie order
    };
    std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>,
                        decltype(cmp_heads)>
        heap(cmp_heads);
    for (int i = 0; i < k; ++i) heap.push({i, 0});

    SquareSet out;
    while (!heap.empty()) {
        auto [i, j] = heap.top();
        heap.pop();
        const Element& v = rows[i][j];
        if (out.values.empty() || !(out.values.back() == v)) {
            out.values.push_back(v);
            out.witnesses.emplace_back();
        }
        out.witnesses.back().push_back({i, j});
        if (j + 1 < k) heap.push({i, j + 1});
    }
    for (auto& w : out.witnesses) std::sort(w.begin(), w.end());
    return out;
}

int square_size(const FiniteSubset& s) { return square(s).size(); }

DoublingReport doubling_report(const FiniteSubset& s) {
    if (s.size() < 2) throw InputError("doubling_report: need |S| >= 2");
    DoublingReport r;
    r.k = s.size();
    r.square_size = square_size(s);
    r.deficit_3k3 = r.square_size - (3 * r.k - 3);
    r.b_excess = r.deficit_3k3;
    r.s_excess = r.square_size - (3 * r.k - 2);
    return r;
}

bool elementwise_commutes(const GroupSpec& g, const Element& y, const FiniteSubset& T) {
    for (const auto& t : T.elems)
        if (!commutes(g, y, t)) return false;
    return true;
}

namespace {

std::vector<Element> sorted_unique(const GroupSpec& g, std::vector<Element> v) {
    std::sort(v.begin(), v.end(),
              [&](const Element& a, const Element& b) { return less(g, a, b); });
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool contains(const std::vector<Element>& v, const Element& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

} // namespace

PartitionBlocks partition_square(const FiniteSubset& s, bool split_at_max) {
    if (s.size() < 2) throw InputError("partition_square: need |S| >= 2");
    const auto& g = s.spec;
    Element y = split_at_max ? s.elems.back() : s.elems.front();

    std::vector<Element> rest;
    for (const auto& e : s.elems)
        if (!(e == y)) rest.push_back(e);
    FiniteSubset t{g, rest};

    PartitionBlocks out;
    out.t_square = square(t);

    std::vector<Element> cross;
    for (const auto& e : t.elems) {
        cross.push_back(multiply(g, y, e));
        cross.push_back(multiply(g, e, y));
    }
    out.cross = sorted_unique(g, std::move(cross));
    out.top.push_back(multiply(g, y, y));

    bool dis = true;
    for (const auto& v : out.cross)
        if (contains(out.t_square.values, v)) { dis = false; break; }
    if (dis) {
        if (contains(out.t_square.values, out.top[0]) || contains(out.cross, out.top[0]))
            dis = false;
    }
    out.is_disjoint = dis;
    return out;
}

} // namespace ogs
