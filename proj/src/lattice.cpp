#include "ogs/lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ogs/errors.hpp"

namespace ogs {

namespace {

int rank_of_rows(std::vector<std::vector<Rat>> rows) {
    if (rows.empty()) return 0;
    size_t cols = rows[0].size();
    int rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows.size(); ++col) {
        size_t piv = row;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[row], rows[piv]);
        for (size_t r = row + 1; r < rows.size(); ++r) {
            if (rows[r][col] == 0) continue;
            Rat f = rows[r][col] / rows[row][col];
            for (size_t c = col; c < cols; ++c) rows[r][c] -= f * rows[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Rat>> to_rat(const std::vector<std::vector<Int>>& rows) {
    std::vector<std::vector<Rat>> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<Rat> rr;
        rr.reserve(r.size());
        for (const auto& x : r) rr.emplace_back(x);
        out.push_back(std::move(rr));
    }
    return out;
}

void require_uniform(const std::vector<LatticePoint>& pts) {
    if (pts.empty()) throw InputError("empty point set");
    for (const auto& p : pts)
        if (p.size() != pts[0].size()) throw InputError("lattice points of mixed dimension");
}

bool lex_less(const LatticePoint& a, const LatticePoint& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

// unordered pairs (i<=j) grouped by their sum
std::map<LatticePoint, std::vector<std::pair<int, int>>> sum_groups(
    const std::vector<LatticePoint>& pts) {
    std::map<LatticePoint, std::vector<std::pair<int, int>>> groups;
    const int k = static_cast<int>(pts.size());
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            LatticePoint s(pts[i].size());
            for (size_t d = 0; d < s.size(); ++d) s[d] = pts[i][d] + pts[j][d];
            groups[s].push_back({i, j});
        }
    return groups;
}

} // namespace

std::vector<LatticePoint> canonicalize_points(std::vector<LatticePoint> pts) {
    require_uniform(pts);
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

int subgroup_rank(const std::vector<LatticePoint>& pts) {
    require_uniform(pts);
    return rank_of_rows(to_rat(pts));
}

int freiman_dimension(const std::vector<LatticePoint>& pts_in) {
    auto pts = canonicalize_points(pts_in);
    const int k = static_cast<int>(pts.size());
    if (k < 2) throw InputError("freiman_dimension: need |S| >= 2");

    std::vector<std::vector<Int>> relations;
    for (const auto& [sum, pairs] : sum_groups(pts)) {
        for (size_t p = 1; p < pairs.size(); ++p) {
            std::vector<Int> v(k, Int(0));
            v[pairs[0].first] += 1;
            v[pairs[0].second] += 1;
            v[pairs[p].first] -= 1;
            v[pairs[p].second] -= 1;
            relations.push_back(std::move(v));
        }
    }
    int r = relations.empty() ? 0 : rank_of_rows(to_rat(relations));
    return (k - 1) - r;
}

long long additive_square_size(const std::vector<LatticePoint>& pts) {
    require_uniform(pts);
    std::vector<LatticePoint> sums;
    sums.reserve(pts.size() * pts.size());
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i; j < pts.size(); ++j) {
            LatticePoint s(pts[i].size());
            for (size_t d = 0; d < s.size(); ++d) s[d] = pts[i][d] + pts[j][d];
            sums.push_back(std::move(s));
        }
    std::sort(sums.begin(), sums.end(), lex_less);
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    return static_cast<long long>(sums.size());
}

AbelianProfile abelian_profile(const std::vector<LatticePoint>& pts_in) {
    auto pts = canonicalize_points(pts_in);
    if (pts.size() < 2) throw InputError("abelian_profile: need |S| >= 2");
    AbelianProfile p;
    p.k = static_cast<long long>(pts.size());
    p.rank_m = subgroup_rank(pts);
    p.freiman_d = freiman_dimension(pts);
    p.square_size = additive_square_size(pts);

    long long d = p.freiman_d;
    bool lemma_chain = p.rank_m <= d + 1 && d + 1 <= p.k;
    bool freiman_bound = p.square_size >= (d + 1) * p.k - d * (d + 1) / 2;
    if (!lemma_chain || !freiman_bound) {
        std::ostringstream os;
        os << "{\"claim\":\"" << (lemma_chain ? "freiman_inequality" : "rank_chain")
           << "\",\"k\":" << p.k << ",\"m\":" << p.rank_m << ",\"d\":" << p.freiman_d
           << ",\"square\":" << p.square_size << "}";
        throw CounterexampleError("abelian_profile invariant violated", os.str());
    }
    return p;
}

namespace {

Int content(const LatticePoint& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd_int(g, x);
    return g;
}

bool is_zero(const LatticePoint& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

LatticePoint sub(const LatticePoint& a, const LatticePoint& b) {
    LatticePoint d(a.size());
    for (size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return d;
}

// q = t * p for integer t, p != 0
std::optional<Int> multiple_of(const LatticePoint& q, const LatticePoint& p) {
    size_t pivot = 0;
    while (pivot < p.size() && p[pivot] == 0) ++pivot;
    if (pivot == p.size()) return std::nullopt;
    if (q[pivot] % p[pivot] != 0) return std::nullopt;
    Int t = q[pivot] / p[pivot];
    for (size_t i = 0; i < p.size(); ++i)
        if (q[i] != p[i] * t) return std::nullopt;
    return t;
}

} // namespace

std::optional<APCover> ap_cover(const std::vector<LatticePoint>& pts_in) {
    auto pts = canonicalize_points(pts_in);
    const int k = static_cast<int>(pts.size());
    if (k < 2) throw InputError("ap_cover: need |S| >= 2");

    // primitive direction from the first nonzero difference
    LatticePoint dir;
    for (int i = 1; i < k; ++i) {
        auto d = sub(pts[i], pts[0]);
        if (!is_zero(d)) { dir = d; break; }
    }
    Int c = content(dir);
    for (auto& x : dir) x /= c;

    std::vector<Int> coefs(k);
    Int g = 0;
    for (int i = 0; i < k; ++i) {
        auto d = sub(pts[i], pts[0]);
        if (is_zero(d)) { coefs[i] = 0; continue; }
        auto t = multiple_of(d, dir);
        if (!t) return std::nullopt; // differences not collinear: rank >= 2
        coefs[i] = *t;
        g = gcd_int(g, *t);
    }

    APCover cover;
    cover.base = pts[0];
    cover.ratio = dir;
    for (auto& x : cover.ratio) x *= g;
    Int maxpos = 0;
    for (int i = 0; i < k; ++i) {
        Int pos = coefs[i] / g;
        if (pos < 0) return std::nullopt; // cannot happen: pts[0] is minimal
        if (!fits_int64(pos)) throw InputError("ap_cover: position overflow");
        cover.positions.push_back(pos.convert_to<long long>());
        maxpos = std::max(maxpos, pos);
    }
    cover.length = maxpos.convert_to<long long>() + 1;
    return cover;
}

namespace {

struct RatioCandidate {
    LatticePoint v;
    Int norm2;
};

std::vector<LatticePoint> ratio_candidates(const std::vector<LatticePoint>& pts) {
    std::vector<RatioCandidate> cands;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            auto d = sub(pts[j], pts[i]); // lex-positive since pts sorted
            Int n2 = 0;
            for (const auto& x : d) n2 += x * x;
            cands.push_back({std::move(d), std::move(n2)});
        }
    std::sort(cands.begin(), cands.end(), [](const RatioCandidate& a, const RatioCandidate& b) {
        if (a.norm2 != b.norm2) return a.norm2 < b.norm2;
        return lex_less(a.v, b.v);
    });
    std::vector<LatticePoint> out;
    for (auto& c : cands)
        if (out.empty() || !(out.back() == c.v)) out.push_back(std::move(c.v));
    return out;
}

APCover interval_cover(const std::vector<LatticePoint>& pts, const std::vector<int>& members,
                       int side, const LatticePoint& ratio, const std::vector<Int>& coefs) {
    APCover c;
    Int lo, hi;
    bool first = true;
    for (size_t i = 0; i < pts.size(); ++i) {
        if (members[i] != side) continue;
        if (first) { lo = hi = coefs[i]; first = false; }
        else { lo = std::min(lo, coefs[i]); hi = std::max(hi, coefs[i]); }
    }
    c.ratio = ratio;
    c.length = (hi - lo).convert_to<long long>() + 1;
    for (size_t i = 0; i < pts.size(); ++i) {
        if (members[i] == side && coefs[i] == lo) { c.base = pts[i]; break; }
    }
    for (size_t i = 0; i < pts.size(); ++i)
        if (members[i] == side) c.positions.push_back((coefs[i] - lo).convert_to<long long>());
    return c;
}

} // namespace

std::optional<TwoAPCover> two_ap_cover(const std::vector<LatticePoint>& pts_in,
                                       long long required_length_sum) {
    auto pts = canonicalize_points(pts_in);
    const int k = static_cast<int>(pts.size());
    if (k < 2) throw InputError("two_ap_cover: need |S| >= 2");

    for (const auto& t : ratio_candidates(pts)) {
        // group points into t-lines: i ~ j iff pts[j]-pts[i] is an integer
        // multiple of t
        std::vector<int> cls(k, -1);
        std::vector<Int> coef(k);
        int nclasses = 0;
        bool feasible = true;
        for (int i = 0; i < k && feasible; ++i) {
            if (cls[i] != -1) continue;
            if (nclasses == 2) { feasible = false; break; }
            cls[i] = nclasses;
            coef[i] = 0;
            for (int j = i + 1; j < k; ++j) {
                if (cls[j] != -1) continue;
                auto d = sub(pts[j], pts[i]);
                auto m = is_zero(d) ? std::optional<Int>(Int(0)) : multiple_of(d, t);
                if (m) { cls[j] = nclasses; coef[j] = *m; }
            }
            ++nclasses;
        }
        if (!feasible) continue;

        if (nclasses == 2) {
            Int lo[2], hi[2];
            bool first[2] = {true, true};
            for (int i = 0; i < k; ++i) {
                int c = cls[i];
                if (first[c]) { lo[c] = hi[c] = coef[i]; first[c] = false; }
                else { lo[c] = std::min(lo[c], coef[i]); hi[c] = std::max(hi[c], coef[i]); }
            }
            Int total = (hi[0] - lo[0] + 1) + (hi[1] - lo[1] + 1);
            if (total > required_length_sum) continue;
            TwoAPCover out;
            out.shared_ratio = t;
            out.membership.assign(cls.begin(), cls.end());
            out.first = interval_cover(pts, out.membership, 0, t, coef);
            out.second = interval_cover(pts, out.membership, 1, t, coef);
            out.second.length += required_length_sum - total.convert_to<long long>();
            return out;
        }

        // one t-line: split into prefix/suffix; the lexicographically
        // smallest membership vector is the one with the longest prefix
        std::vector<Int> cs(coef.begin(), coef.end());
        // pts sorted ascending => coefficients ascending
        long long best_j = -1;
        for (int j = k - 1; j >= 1; --j) {
            Int total = (cs[j - 1] - cs[0] + 1) + (cs[k - 1] - cs[j] + 1);
            if (total <= required_length_sum) { best_j = j; break; }
        }
        if (best_j < 0) continue;
        TwoAPCover out;
        out.shared_ratio = t;
        out.membership.assign(k, 1);
        for (long long i = 0; i < best_j; ++i) out.membership[i] = 0;
        out.first = interval_cover(pts, out.membership, 0, t, coef);
        out.second = interval_cover(pts, out.membership, 1, t, coef);
        Int total = Int(out.first.length) + Int(out.second.length);
        out.second.length += required_length_sum - total.convert_to<long long>();
        return out;
    }
    return std::nullopt;
}

ClassificationVerdict classify_abelian(const std::vector<LatticePoint>& pts_in, ClassifyMode mode,
                                       int c) {
    auto pts = canonicalize_points(pts_in);
    const long long k = static_cast<long long>(pts.size());
    if (k < 2) throw InputError("classify_abelian: need |S| >= 2");
    long long sq = additive_square_size(pts);

    ClassificationVerdict v;
    v.k = k;
    v.square_size = sq;
    v.rank_m = subgroup_rank(pts);

    switch (mode) {
        case ClassifyMode::Thm3k3:
            if (sq > 3 * k - 3)
                throw HypothesisError("thm_3k3 needs |S^2| <= 3|S|-3");
            v.rank_bound = 3;
            v.rank_ok = v.rank_m <= 3;
            break;
        case ClassifyMode::Thm3k2:
            if (sq != 3 * k - 2)
                throw HypothesisError("thm_3k2 needs |S^2| = 3|S|-2");
            v.rank_bound = 3;
            v.rank_ok = (k == 4) || v.rank_m <= 3;
            break;
        case ClassifyMode::ThmCk: {
            if (c < 2) throw InputError("thm_ck needs c >= 2");
            long long bound = (c + 1) * k - c * (c + 1) / 2;
            if (!(sq < bound))
                throw HypothesisError("thm_ck needs |S^2| < (c+1)|S| - c(c+1)/2");
            v.rank_bound = c;
            v.rank_ok = v.rank_m <= c;
            v.branch = v.rank_ok ? "rank_only" : "counterexample";
            if (!v.rank_ok) v.note = "rank bound violated";
            return v;
        }
    }

    bool is_3k3 = mode == ClassifyMode::Thm3k3;
    long long qualifying_size = is_3k3 ? 11 : 12;
    long long ap_len_bound = is_3k3 ? 2 * k - 1 : 2 * k + 1;
    long long two_ap_sum = is_3k3 ? k : k + 1;

    auto ap = ap_cover(pts);
    bool ap_ok = ap && ap->length <= ap_len_bound;
    std::optional<TwoAPCover> two;
    if (!ap_ok) two = two_ap_cover(pts, two_ap_sum);

    if (!v.rank_ok) {
        v.branch = "counterexample";
        v.note = "rank bound violated";
        return v;
    }
    if (k < qualifying_size) {
        v.branch = "small_case";
        v.note = "below structural threshold: no structural claim";
        if (ap_ok) v.ap = ap;
        else if (two) v.two_ap = two;
        return v;
    }
    if (ap_ok) {
        v.branch = "ap";
        v.ap = ap;
    } else if (two) {
        v.branch = "two_ap";
        v.two_ap = two;
    } else {
        v.branch = "counterexample";
        v.note = "no structural branch matched at qualifying size";
    }
    return v;
}

} // namespace ogs
