#include "ogs/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "ogs/rng.hpp"

namespace ogs {

std::string theorem_name(TheoremId t) {
    switch (t) {
        case TheoremId::T1_5_i: return "T1_5_i";
        case TheoremId::T1_1: return "T1_1";
        case TheoremId::T1_2: return "T1_2";
        case TheoremId::T1_4: return "T1_4";
        case TheoremId::T1_5_iv: return "T1_5_iv";
        case TheoremId::P5_forms: return "P5_forms";
        case TheoremId::P6_forms: return "P6_forms";
        case TheoremId::T1_6_k4: return "T1_6_k4";
        case TheoremId::T1_8_s1: return "T1_8_s1";
        case TheoremId::T1_9: return "T1_9";
    }
    return "?";
}

TheoremId theorem_from_name(const std::string& s) {
    static const std::pair<const char*, TheoremId> table[] = {
        {"T1_5_i", TheoremId::T1_5_i},   {"T1_1", TheoremId::T1_1},
        {"T1_2", TheoremId::T1_2},       {"T1_4", TheoremId::T1_4},
        {"T1_5_iv", TheoremId::T1_5_iv}, {"P5_forms", TheoremId::P5_forms},
        {"P6_forms", TheoremId::P6_forms}, {"T1_6_k4", TheoremId::T1_6_k4},
        {"T1_8_s1", TheoremId::T1_8_s1}, {"T1_9", TheoremId::T1_9},
    };
    for (const auto& [n, t] : table)
        if (s == n) return t;
    throw InputError("unknown theorem id \"" + s + "\"");
}

Json report_body_to_json(const VerificationReport& r) {
    Json verdicts;
    for (const auto& [k, v] : r.verdicts) verdicts[k] = v;
    if (verdicts.is_null()) verdicts = Json::object();
    return Json{{"version", "1"},
                {"theorem", theorem_name(r.theorem)},
                {"seed", r.seed},
                {"corpus_size", r.corpus_size},
                {"verdicts", verdicts},
                {"counterexamples", r.counterexamples},
                {"notes", r.notes},
                {"status", r.verified() ? "verified" : "counterexamples"}};
}

void for_each_box_subset(const std::vector<int>& shape, int size_lo, int size_hi,
                         const std::function<void(const std::vector<LatticePoint>&)>& fn) {
    std::vector<LatticePoint> pts;
    std::vector<Int> cur(shape.size(), Int(0));
    // lex-ordered grid walk
    std::function<void(size_t)> gen = [&](size_t d) {
        if (d == shape.size()) { pts.push_back(cur); return; }
        for (int i = 0; i < shape[d]; ++i) { cur[d] = i; gen(d + 1); }
    };
    gen(0);
    std::sort(pts.begin(), pts.end(), [](const LatticePoint& a, const LatticePoint& b) {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });

    std::vector<LatticePoint> chosen;
    std::function<void(size_t)> rec = [&](size_t from) {
        int sz = static_cast<int>(chosen.size());
        if (sz >= size_lo && sz <= size_hi) fn(chosen);
        if (sz == size_hi) return;
        for (size_t i = from; i < pts.size(); ++i) {
            chosen.push_back(pts[i]);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);
}

namespace {

struct PipelineCtx {
    VerificationReport rep;
    int workers = 1;

    void count(const std::string& branch, long long n = 1) { rep.verdicts[branch] += n; }
    void note(const std::string& s) { rep.notes.push_back(s); }
    void cex(Json j) { rep.counterexamples.push_back(std::move(j)); }
};

FiniteSubset subset_of_indices(const UniverseContext& ctx, const std::vector<int32_t>& idx) {
    std::vector<Element> e;
    e.reserve(idx.size());
    for (int32_t i : idx) e.push_back(ctx.elems[i]);
    return FiniteSubset{ctx.spec, std::move(e)};
}

Json set_record(const FiniteSubset& s) { return subset_to_json(s); }

std::vector<LatticePoint> box_points(long long lo, long long hi) {
    std::vector<LatticePoint> pts;
    for (long long i = lo; i <= hi; ++i) pts.push_back({Int(i)});
    return pts;
}

UniverseContext universe_of_points(int dim, std::vector<LatticePoint> pts) {
    GroupSpec g = GroupSpec::lattice(dim);
    std::vector<Element> elems;
    elems.reserve(pts.size());
    for (auto& p : pts) elems.push_back(lattice_point(std::move(p)));
    std::sort(elems.begin(), elems.end(),
              [&](const Element& a, const Element& b) { return less(g, a, b); });
    return make_universe(g, std::move(elems));
}

UniverseContext grid_universe(const std::vector<int>& shape) {
    std::vector<LatticePoint> pts;
    std::vector<Int> cur(shape.size(), Int(0));
    std::function<void(size_t)> gen = [&](size_t d) {
        if (d == shape.size()) { pts.push_back(cur); return; }
        for (int i = 0; i < shape[d]; ++i) { cur[d] = i; gen(d + 1); }
    };
    gen(0);
    return universe_of_points(static_cast<int>(shape.size()), std::move(pts));
}

bool has_noncommuting_pair(const FiniteSubset& s) {
    for (int i = 0; i < s.size(); ++i)
        for (int j = i + 1; j < s.size(); ++j)
            if (!commutes(s.spec, s.elems[i], s.elems[j])) return true;
    return false;
}

// exact membership of y in <T> witnessed by one product equation against T^2
bool product_membership(const GroupSpec& g, const Element& y, const FiniteSubset& t,
                        const SquareSet& t2) {
    for (const auto& v : t2.values) {
        if (multiply(g, y, y) == v) return true;
        for (const auto& e : t.elems)
            if (multiply(g, y, e) == v || multiply(g, e, y) == v) return true;
    }
    return false;
}

// per-item verdict counts and counterexamples, applied in input order so
// reports stay byte-identical for any worker count
struct ItemOutcome {
    std::vector<std::string> counts;
    std::vector<Json> cexs;
};

template <typename Item, typename Fn>
void ordered_parallel(PipelineCtx& px, const std::vector<Item>& items, Fn&& fn) {
    const int workers = std::max(1, px.workers);
    std::vector<ItemOutcome> outs(items.size());
    if (workers == 1 || items.size() <= 1) {
        for (size_t i = 0; i < items.size(); ++i) fn(items[i], outs[i]);
    } else {
        std::atomic<size_t> next{0};
        auto work = [&]() {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= items.size()) break;
                fn(items[i], outs[i]);
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    for (const auto& o : outs) {
        for (const auto& c : o.counts) px.count(c);
        for (const auto& j : o.cexs) px.cex(j);
    }
}

// ---------------------------------------------------------------- T1_5_i

void run_t1_5_i(PipelineCtx& px, const Json& params) {
    auto krange = params.at("k_range");
    int klo = krange[0].get<int>(), khi = krange[1].get<int>();
    for (const auto& bj : params.at("balls")) {
        BallSpec bs = ball_from_json(bj);
        auto ctx = make_universe(bs.spec, ball(bs));
        bool is_z = bs.spec.family == Family::Lattice && bs.spec.rank == 1;
        for (int k = klo; k <= std::min(khi, ctx.n); ++k) {
            enumerate_subsets(
                ctx, k, Rational{k, 1}, 0, Normalize::None, px.workers,
                [&](const std::vector<int32_t>& idx) {
                    ++px.rep.corpus_size;
                    int sq = square_size_by_ranks(ctx, idx);
                    if (sq < 2 * k - 1) {
                        auto s = subset_of_indices(ctx, idx);
                        px.cex(Json{{"claim", "square_lower_bound"},
                                    {"set", set_record(s)},
                                    {"square_size", sq}});
                        return;
                    }
                    bool equality = sq == 2 * k - 1;
                    if (equality) px.count("equality");
                    else px.count("strict");
                    if (is_z) {
                        auto s = subset_of_indices(ctx, idx);
                        auto cover = ap_cover(lattice_points_of(s));
                        bool full_ap = cover && cover->length == k;
                        if (equality != full_ap)
                            px.cex(Json{{"claim", "ap_equality_mismatch"},
                                        {"set", set_record(s)},
                                        {"square_size", sq},
                                        {"full_ap", full_ap}});
                    }
                });
        }
    }
}

// ------------------------------------------------------------ T1_1 / T1_2

void classify_and_count(PipelineCtx& px, const std::vector<LatticePoint>& pts, ClassifyMode mode,
                        const char* claim) {
    auto v = classify_abelian(pts, mode);
    px.count(v.branch);
    if (v.branch == "counterexample") {
        Json pj = Json::array();
        for (const auto& p : pts) pj.push_back(point_to_json(p));
        px.cex(Json{{"claim", claim},
                    {"mode", mode == ClassifyMode::Thm3k3 ? "3k3" : "3k2"},
                    {"points", pj},
                    {"note", v.note}});
    }
}

void run_t1_1(PipelineCtx& px, const Json& params) {
    if (params.contains("exhaustive")) {
        const auto& ex = params.at("exhaustive");
        int k = ex.at("k").get<int>();
        long long diameter = ex.at("diameter").get<long long>();
        auto ctx = universe_of_points(1, box_points(0, diameter));
        enumerate_subsets(ctx, k, Rational{3, 1}, -3, Normalize::TranslatePrimitive, px.workers,
                          [&](const std::vector<int32_t>& idx) {
                              ++px.rep.corpus_size;
                              auto s = subset_of_indices(ctx, idx);
                              classify_and_count(px, lattice_points_of(s), ClassifyMode::Thm3k3,
                                                 "classify_counterexample");
                          });
    }
    if (params.contains("random")) {
        const auto& rnd = params.at("random");
        int count = rnd.at("count").get<int>();
        int k = rnd.at("k").get<int>();
        long long max_gap = rnd.value("max_gap", 1000000LL);
        long long max_ratio = rnd.value("max_ratio", 50LL);
        SeededRng rng(px.rep.seed);
        for (int i = 0; i < count; ++i) {
            int split = static_cast<int>(rng.range(1, k - 1));
            long long ratio = rng.range(1, max_ratio);
            long long lo = 2LL * k * ratio + 1;
            long long gap = rng.range(lo, std::max(lo, max_gap));
            auto s = random_two_ap(k, Int(gap), split, Int(ratio), 0);
            ++px.rep.corpus_size;
            auto pts = lattice_points_of(s);
            auto v = classify_abelian(pts, ClassifyMode::Thm3k3);
            if (v.branch != "two_ap") {
                px.cex(Json{{"claim", "two_ap_expected"},
                            {"set", set_record(s)},
                            {"branch", v.branch}});
            } else {
                px.count("random_two_ap");
            }
        }
    }
}

void run_t1_2(PipelineCtx& px, const Json& params) {
    if (params.contains("exhaustive")) {
        const auto& ex = params.at("exhaustive");
        int k = ex.at("k").get<int>();
        long long diameter = ex.at("diameter").get<long long>();
        auto ctx = universe_of_points(1, box_points(0, diameter));
        enumerate_subsets(ctx, k, Rational{3, 1}, -2, Normalize::TranslatePrimitive, px.workers,
                          [&](const std::vector<int32_t>& idx) {
                              if (square_size_by_ranks(ctx, idx) != 3 * k - 2) return;
                              ++px.rep.corpus_size;
                              auto s = subset_of_indices(ctx, idx);
                              classify_and_count(px, lattice_points_of(s), ClassifyMode::Thm3k2,
                                                 "classify_counterexample");
                          });
    }
    if (params.contains("random")) {
        const auto& rnd = params.at("random");
        int count = rnd.at("count").get<int>();
        int k = rnd.at("k").get<int>();
        long long max_gap = rnd.value("max_gap", 1000000LL);
        long long max_ratio = rnd.value("max_ratio", 20LL);
        SeededRng rng(px.rep.seed);
        GroupSpec zg = GroupSpec::lattice(1);
        for (int i = 0; i < count; ++i) {
            long long r = rng.range(1, max_ratio);
            long long lo = 4LL * k * r + 1;
            long long gap = rng.range(lo, std::max(lo, max_gap));
            std::vector<Element> elems;
            if (rng.coin()) {
                // progression minus its second element, plus an isolated point
                for (long long j = 0; j < k; ++j)
                    if (j != 1) elems.push_back(lattice_point({Int(j * r)}));
                elems.push_back(lattice_point({Int(gap)}));
            } else {
                // progression plus a 3-term progression missing its middle
                for (long long j = 0; j <= k - 3; ++j)
                    elems.push_back(lattice_point({Int(j * r)}));
                elems.push_back(lattice_point({Int(gap)}));
                elems.push_back(lattice_point({Int(gap + 2 * r)}));
            }
            auto s = make_subset(zg, std::move(elems));
            ++px.rep.corpus_size;
            auto pts = lattice_points_of(s);
            if (additive_square_size(pts) != 3LL * k - 2) {
                px.cex(Json{{"claim", "instance_square_size"},
                            {"set", set_record(s)},
                            {"expected", 3 * k - 2}});
                continue;
            }
            auto v = classify_abelian(pts, ClassifyMode::Thm3k2);
            if (v.branch == "counterexample")
                px.cex(Json{{"claim", "classify_counterexample"},
                            {"mode", "3k2"},
                            {"points", subset_to_json(s)["elements"]},
                            {"note", v.note}});
            else px.count(v.branch);
        }
    }
}

// ----------------------------------------------------------------- T1_4

void run_t1_4(PipelineCtx& px, const Json& params) {
    for (const auto& cj : params.at("cases")) {
        int c = cj.at("c").get<int>();
        auto shape = cj.at("box").get<std::vector<int>>();
        int lo = cj.at("sizes")[0].get<int>(), hi = cj.at("sizes")[1].get<int>();
        auto ctx = grid_universe(shape);
        for (int k = lo; k <= hi; ++k) {
            // strict bound |S^2| < (c+1)k - c(c+1)/2
            long long beta = -(static_cast<long long>(c) * (c + 1)) / 2 - 1;
            enumerate_subsets(ctx, k, Rational{c + 1, 1}, beta, Normalize::None, px.workers,
                              [&](const std::vector<int32_t>& idx) {
                                  ++px.rep.corpus_size;
                                  auto s = subset_of_indices(ctx, idx);
                                  auto pts = lattice_points_of(s);
                                  auto v = classify_abelian(pts, ClassifyMode::ThmCk, c);
                                  px.count(v.branch);
                                  if (v.branch == "counterexample")
                                      px.cex(Json{{"claim", "rank_bound"},
                                                  {"set", set_record(s)},
                                                  {"rank_m", v.rank_m},
                                                  {"bound", c}});
                              });
        }
    }
}

// --------------------------------------------------------------- T1_5_iv

void run_t1_5_iv(PipelineCtx& px, const Json& params) {
    for (const auto& cj : params.value("lattice", Json::array())) {
        auto shape = cj.at("box").get<std::vector<int>>();
        int lo = cj.at("sizes")[0].get<int>(), hi = cj.at("sizes")[1].get<int>();
        int blo = cj.at("b_range")[0].get<int>(), bhi = cj.at("b_range")[1].get<int>();
        auto ctx = grid_universe(shape);
        for (int k = lo; k <= hi; ++k) {
            enumerate_subsets(
                ctx, k, Rational{3, 1}, -3 + bhi, Normalize::None, px.workers,
                [&](const std::vector<int32_t>& idx) {
                    long long sq = square_size_by_ranks(ctx, idx);
                    long long b = sq - (3LL * k - 3);
                    if (b < blo || b > bhi) return;
                    ++px.rep.corpus_size;
                    auto s = subset_of_indices(ctx, idx);
                    auto pts = lattice_points_of(s);
                    int m = subgroup_rank(pts);
                    bool ok = m <= b + 2 || (k == 4 && b == 1 && m <= b + 3);
                    if (ok) px.count(k == 4 && b == 1 && m == b + 3 ? "k4_exception" : "rank_ok");
                    else
                        px.cex(Json{{"claim", "rank_bound"},
                                    {"set", set_record(s)},
                                    {"rank_m", m},
                                    {"bound", b + 2},
                                    {"b", b}});
                });
        }
    }
    for (const auto& cj : params.value("nonabelian", Json::array())) {
        BallSpec bs = ball_from_json(cj.at("ball"));
        int k = cj.at("k").get<int>();
        int blo = cj.at("b_range")[0].get<int>(), bhi = cj.at("b_range")[1].get<int>();
        auto ctx = make_universe(bs.spec, ball(bs));
        enumerate_subsets(ctx, k, Rational{3, 1}, -3 + bhi, Normalize::None, px.workers,
                          [&](const std::vector<int32_t>& idx) {
                              long long sq = square_size_by_ranks(ctx, idx);
                              long long b = sq - (3LL * k - 3);
                              if (b < blo || b > bhi) return;
                              ++px.rep.corpus_size;
                              // no exact generator-count decision procedure in
                              // non-abelian ambient: recorded as evidence only
                              px.count("evidence_only");
                          });
    }
}

// -------------------------------------------------------------- P5_forms

void run_p5_forms(PipelineCtx& px, const Json& params) {
    for (const auto& bj : params.at("balls")) {
        BallSpec bs = ball_from_json(bj);
        auto ctx = make_universe(bs.spec, ball(bs));
        enumerate_subsets(ctx, 3, Rational{3, 1}, -2, Normalize::None, px.workers,
                          [&](const std::vector<int32_t>& idx) {
                              if (square_size_by_ranks(ctx, idx) != 7) return;
                              auto s = subset_of_indices(ctx, idx);
                              if (!has_noncommuting_pair(s)) return;
                              ++px.rep.corpus_size;
                              auto m = match_triple_form(ctx.spec, s);
                              if (!m) {
                                  px.cex(Json{{"claim", "triple_form_miss"},
                                              {"set", set_record(s)}});
                                  return;
                              }
                              if (!revalidate_form(ctx.spec, s, *m)) {
                                  px.cex(Json{{"claim", "form_revalidation_failed"},
                                              {"set", set_record(s)},
                                              {"form", young_form_to_json(ctx.spec, *m)}});
                                  return;
                              }
                              px.count(form_name(m->kind));
                          });
    }
}

// ------------------------------------------------------ P6_forms / T1_6_k4

void run_t1_6_k4(PipelineCtx& px, const Json& params) {
    int law_radius = params.value("law_radius", 5);
    long long law_samples = params.value("law_samples", 10000LL);
    for (const auto& bj : params.at("balls")) {
        BallSpec bs = ball_from_json(bj);
        auto ctx = make_universe(bs.spec, ball(bs));
        std::vector<FiniteSubset> sets;
        enumerate_subsets(ctx, 4, Rational{3, 1}, -2, Normalize::None, px.workers,
                          [&](const std::vector<int32_t>& idx) {
                              if (square_size_by_ranks(ctx, idx) != 10) return;
                              sets.push_back(subset_of_indices(ctx, idx));
                          });
        px.rep.corpus_size += static_cast<long long>(sets.size());

        const auto& g = ctx.spec;
        uint64_t seed = px.rep.seed;
        ordered_parallel(px, sets, [&](const FiniteSubset& s, ItemOutcome& out) {
            if (!has_noncommuting_pair(s)) {
                out.counts.push_back("abelian");
            } else {
                std::optional<YoungForm> match = match_extension_form(g, s);
                bool via_triple = false;
                if (match && !revalidate_form(g, s, *match)) {
                    out.cexs.push_back(Json{{"claim", "form_revalidation_failed"},
                                            {"set", set_record(s)},
                                            {"form", young_form_to_json(g, *match)}});
                    return;
                }
                if (!match) {
                    // some triple generates <S>: |T^2| = 7, T young, and the
                    // fourth element lies in <T> by a product equation
                    for (int drop = 0; drop < 4 && !match; ++drop) {
                        std::vector<Element> te;
                        for (int i = 0; i < 4; ++i)
                            if (i != drop) te.push_back(s.elems[i]);
                        FiniteSubset t{g, te};
                        if (square_size(t) != 7 || !has_noncommuting_pair(t)) continue;
                        auto tm = match_triple_form(g, t);
                        if (!tm || !revalidate_form(g, t, *tm)) continue;
                        auto t2 = square(t);
                        const Element& y = s.elems[drop];
                        if (product_membership(g, y, t, t2) ||
                            bounded_membership(g, y, te, 6)) {
                            match = tm;
                            via_triple = true;
                        }
                    }
                }
                if (!match) {
                    out.cexs.push_back(Json{{"claim", "young_miss"}, {"set", set_record(s)}});
                    return;
                }
                out.counts.push_back(via_triple ? "young_via_triple" : form_name(match->kind));
            }
            auto law =
                law_check(g, s.elems, GroupLaw::Metabelian, law_radius, law_samples, seed);
            if (!law.holds) {
                Json viol = Json::array();
                for (const auto& e : *law.first_violation)
                    viol.push_back(element_to_json(g, e));
                out.cexs.push_back(Json{{"claim", "law_violation"},
                                        {"law", "metabelian"},
                                        {"set", set_record(s)},
                                        {"violation", viol}});
            }
        });
    }
}

// --------------------------------------------------------------- T1_8_s1

void run_t1_8_s1(PipelineCtx& px, const Json& params) {
    const int k = params.value("k", 8);
    const long long want = 3LL * k - 1;
    int law_radius = params.value("law_radius", 5);
    long long law_samples = params.value("law_samples", 10000LL);

    auto check_set = [&](const FiniteSubset& s, bool nilpotent_family) {
        auto law = law_check(s.spec, s.elems, GroupLaw::Metabelian, law_radius, law_samples,
                             px.rep.seed);
        if (!law.holds) {
            Json viol = Json::array();
            for (const auto& e : *law.first_violation)
                viol.push_back(element_to_json(s.spec, e));
            px.cex(Json{{"claim", "law_violation"},
                        {"law", "metabelian"},
                        {"set", set_record(s)},
                        {"violation", viol}});
            return;
        }
        px.count("metabelian_ok");
        if (nilpotent_family) {
            auto c2 = law_check(s.spec, s.elems, GroupLaw::Class2, law_radius, 0, px.rep.seed);
            if (!c2.holds || !c2.exhaustive_len2) {
                Json j{{"claim", "law_violation"}, {"law", "class2"}, {"set", set_record(s)}};
                if (c2.first_violation) {
                    Json viol = Json::array();
                    for (const auto& e : *c2.first_violation)
                        viol.push_back(element_to_json(s.spec, e));
                    j["violation"] = viol;
                }
                px.cex(j);
                return;
            }
            px.count("class2_ok");
        }
    };

    auto sample_corpus = [&](const UniverseContext& ctx, int count, const std::string& label,
                             bool nilpotent) {
        SeededRng rng(px.rep.seed);
        long long hits = 0;
        for (int i = 0; i < count; ++i) {
            // k distinct indices
            std::vector<int32_t> idx;
            while (static_cast<int>(idx.size()) < k) {
                int32_t c = static_cast<int32_t>(rng.below(ctx.n));
                if (std::find(idx.begin(), idx.end(), c) == idx.end()) idx.push_back(c);
            }
            std::sort(idx.begin(), idx.end());
            ++px.rep.corpus_size;
            if (square_size_by_ranks(ctx, idx) != want) continue;
            ++hits;
            check_set(subset_of_indices(ctx, idx), nilpotent);
        }
        if (hits == 0)
            px.note(label + ": filter |S^2| = " + std::to_string(want) +
                    " yielded zero sets in " + std::to_string(count) + " samples");
        else px.count(label + "_hits", hits);
    };

    if (params.contains("z_ball")) {
        long long r = params.at("z_ball").value("radius", 8LL);
        auto ctx = universe_of_points(1, box_points(-r, r));
        sample_corpus(ctx, params.value("z_samples", 1000), "z_sampled", false);
    }
    if (params.contains("heis_sample_ball")) {
        BallSpec bs = ball_from_json(params.at("heis_sample_ball"));
        auto ctx = make_universe(bs.spec, ball(bs));
        sample_corpus(ctx, params.value("heis_samples", 1000), "heis_sampled", true);
    }
    if (params.contains("heis_exhaustive_ball")) {
        BallSpec bs = ball_from_json(params.at("heis_exhaustive_ball"));
        auto ctx = make_universe(bs.spec, ball(bs));
        long long hits = 0;
        enumerate_subsets(ctx, k, Rational{3, 1}, -1, Normalize::None, px.workers,
                          [&](const std::vector<int32_t>& idx) {
                              ++px.rep.corpus_size;
                              if (square_size_by_ranks(ctx, idx) != want) return;
                              ++hits;
                              check_set(subset_of_indices(ctx, idx), true);
                          });
        if (hits == 0)
            px.note("heis_exhaustive: filter |S^2| = " + std::to_string(want) +
                    " yielded zero sets");
        else px.count("heis_exhaustive_hits", hits);
    }
}

// ------------------------------------------------------------------ T1_9

void run_t1_9(PipelineCtx& px, const Json& params) {
    int klo = params.value("k_min", 3), khi = params.value("k_max", 20);
    for (int k = klo; k <= khi; ++k) {
        auto s = construct_4k5(k);
        ++px.rep.corpus_size;
        int sq = square_size(s);
        if (sq != 4 * k - 5) {
            px.cex(Json{{"claim", "construct_square_count"},
                        {"k", k},
                        {"square_size", sq},
                        {"expected", 4 * k - 5}});
            continue;
        }
        auto pb = partition_square(s, false); // y = b is the minimum
        bool ok = pb.is_disjoint && pb.t_square.size() == 2 * k - 3 &&
                  static_cast<int>(pb.cross.size()) == 2 * k - 3;
        if (!ok) {
            px.cex(Json{{"claim", "construct_partition"},
                        {"k", k},
                        {"t_square", pb.t_square.size()},
                        {"cross", static_cast<long long>(pb.cross.size())},
                        {"disjoint", pb.is_disjoint}});
            continue;
        }
        px.count("constructed");
    }
    // the ambient Z x F2 is not metabelian: exhibit a violation in the free
    // factor as a witness
    GroupSpec g = GroupSpec::product(GroupSpec::lattice(1), GroupSpec::free_group(2));
    std::vector<Element> gens{pair_elem(lattice_point({Int(0)}), word_of({1})),
                              pair_elem(lattice_point({Int(0)}), word_of({2}))};
    auto law = law_check(g, gens, GroupLaw::Metabelian, 4, 100, px.rep.seed);
    if (law.holds) {
        px.cex(Json{{"claim", "missing_violation"},
                    {"law", "metabelian"},
                    {"group", spec_to_json(g)},
                    {"note", "free factor must violate the metabelian law"}});
    } else {
        px.count("ambient_violation_witnessed");
    }
}

} // namespace

VerificationReport verify(TheoremId id, const Json& params, int workers) {
    auto start = std::chrono::steady_clock::now();
    PipelineCtx px;
    px.rep.theorem = id;
    px.rep.seed = params.value("seed", 0ULL);
    px.workers = worker_count_override(workers);

    switch (id) {
        case TheoremId::T1_5_i: run_t1_5_i(px, params); break;
        case TheoremId::T1_1: run_t1_1(px, params); break;
        case TheoremId::T1_2: run_t1_2(px, params); break;
        case TheoremId::T1_4: run_t1_4(px, params); break;
        case TheoremId::T1_5_iv: run_t1_5_iv(px, params); break;
        case TheoremId::P5_forms: run_p5_forms(px, params); break;
        case TheoremId::P6_forms:
        case TheoremId::T1_6_k4: run_t1_6_k4(px, params); break;
        case TheoremId::T1_8_s1: run_t1_8_s1(px, params); break;
        case TheoremId::T1_9: run_t1_9(px, params); break;
    }

    px.rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return px.rep;
}

bool revalidate_counterexample(const Json& j) {
    if (!j.is_object() || !j.contains("claim")) return false;
    std::string claim = j.at("claim").get<std::string>();
    try {
        if (claim == "square_lower_bound") {
            auto s = subset_from_json(j.at("set"));
            int sq = square_size(s);
            return sq == j.at("square_size").get<int>() && sq < 2 * s.size() - 1;
        }
        if (claim == "ap_equality_mismatch") {
            auto s = subset_from_json(j.at("set"));
            int sq = square_size(s);
            auto cover = ap_cover(lattice_points_of(s));
            bool full_ap = cover && cover->length == s.size();
            return (sq == 2 * s.size() - 1) != full_ap;
        }
        if (claim == "classify_counterexample") {
            ClassifyMode mode = j.at("mode").get<std::string>() == "3k3" ? ClassifyMode::Thm3k3
                                                                         : ClassifyMode::Thm3k2;
            auto pts = points_from_json(j.at("points"));
            return classify_abelian(pts, mode).branch == "counterexample";
        }
        if (claim == "two_ap_expected") {
            auto s = subset_from_json(j.at("set"));
            return classify_abelian(lattice_points_of(s), ClassifyMode::Thm3k3).branch !=
                   "two_ap";
        }
        if (claim == "instance_square_size") {
            auto s = subset_from_json(j.at("set"));
            return additive_square_size(lattice_points_of(s)) !=
                   j.at("expected").get<long long>();
        }
        if (claim == "rank_bound") {
            auto s = subset_from_json(j.at("set"));
            int m = subgroup_rank(lattice_points_of(s));
            return m == j.at("rank_m").get<int>() && m > j.at("bound").get<int>();
        }
        if (claim == "triple_form_miss") {
            auto s = subset_from_json(j.at("set"));
            return !match_triple_form(s.spec, s).has_value();
        }
        if (claim == "young_miss") {
            auto s = subset_from_json(j.at("set"));
            if (match_extension_form(s.spec, s)) return false;
            for (int drop = 0; drop < s.size(); ++drop) {
                std::vector<Element> te;
                for (int i = 0; i < s.size(); ++i)
                    if (i != drop) te.push_back(s.elems[i]);
                FiniteSubset t{s.spec, te};
                if (square_size(t) != 7 || !has_noncommuting_pair(t)) continue;
                if (match_triple_form(s.spec, t)) return false;
            }
            return true;
        }
        if (claim == "form_revalidation_failed") {
            auto s = subset_from_json(j.at("set"));
            auto f = young_form_from_json(s.spec, j.at("form"));
            return !revalidate_form(s.spec, s, f);
        }
        if (claim == "law_violation") {
            auto s = subset_from_json(j.at("set"));
            auto law = law_from_name(j.at("law").get<std::string>());
            if (!law || !j.contains("violation")) return false;
            std::vector<Element> t;
            for (const auto& e : j.at("violation"))
                t.push_back(element_from_json(s.spec, e));
            Element id = identity(s.spec);
            Element val = *law == GroupLaw::Metabelian
                              ? commutator(s.spec, commutator(s.spec, t[0], t[1]),
                                           commutator(s.spec, t[2], t[3]))
                              : (*law == GroupLaw::Class2
                                     ? commutator(s.spec, commutator(s.spec, t[0], t[1]), t[2])
                                     : commutator(s.spec, t[0], t[1]));
            return !(val == id);
        }
        if (claim == "construct_square_count") {
            int k = j.at("k").get<int>();
            int sq = square_size(construct_4k5(k));
            return sq == j.at("square_size").get<int>() && sq != 4 * k - 5;
        }
        if (claim == "construct_partition") {
            int k = j.at("k").get<int>();
            auto pb = partition_square(construct_4k5(k), false);
            return !(pb.is_disjoint && pb.t_square.size() == 2 * k - 3 &&
                     static_cast<int>(pb.cross.size()) == 2 * k - 3);
        }
        if (claim == "missing_violation") {
            GroupSpec g = spec_from_json(j.at("group"));
            auto law = law_check(g, standard_generators(g), GroupLaw::Metabelian, 4, 100, 0);
            return law.holds;
        }
    } catch (const std::exception&) {
        return false;
    }
    return false;
}

} // namespace ogs
