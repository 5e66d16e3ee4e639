#include "ogs/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "ogs/rng.hpp"

namespace ogs {

std::vector<Element> ball(const BallSpec& b) {
    validate_spec(b.spec);
    if (b.radius < 1) throw InputError("ball: radius >= 1");
    const auto& g = b.spec;

    std::vector<Element> moves;
    for (const auto& e : b.generators) {
        moves.push_back(e);
        moves.push_back(invert(g, e));
    }

    std::unordered_set<std::string> seen;
    std::vector<Element> out;
    std::deque<std::pair<Element, int>> frontier;
    Element id = identity(g);
    seen.insert(element_key(id));
    out.push_back(id);
    frontier.push_back({id, 0});

    while (!frontier.empty()) {
        auto [cur, dist] = std::move(frontier.front());
        frontier.pop_front();
        if (dist >= b.radius) continue;
        for (const auto& m : moves) {
            Element nxt = multiply(g, cur, m);
            if (!seen.insert(element_key(nxt)).second) continue;
            if (static_cast<long long>(out.size()) + 1 > b.cap)
                throw CapError("ball exceeds cap " + std::to_string(b.cap) +
                               "; shrink the radius or raise the cap");
            out.push_back(nxt);
            frontier.push_back({std::move(nxt), dist + 1});
        }
    }
    std::sort(out.begin(), out.end(),
              [&](const Element& x, const Element& y) { return less(g, x, y); });
    return out;
}

UniverseContext make_universe(const GroupSpec& g, std::vector<Element> sorted_elems) {
    UniverseContext ctx;
    ctx.spec = g;
    ctx.elems = std::move(sorted_elems);
    ctx.n = static_cast<int>(ctx.elems.size());

    Element id = identity(g);
    for (int i = 0; i < ctx.n; ++i)
        if (ctx.elems[i] == id) { ctx.identity_index = i; break; }

    // sort all n^2 products once; all subset work then uses integer ranks
    struct Prod { Element v; int32_t i, j; };
    std::vector<Prod> prods;
    prods.reserve(static_cast<size_t>(ctx.n) * ctx.n);
    for (int32_t i = 0; i < ctx.n; ++i)
        for (int32_t j = 0; j < ctx.n; ++j)
            prods.push_back({multiply(g, ctx.elems[i], ctx.elems[j]), i, j});
    std::stable_sort(prods.begin(), prods.end(),
                     [&](const Prod& a, const Prod& b) { return less(g, a.v, b.v); });

    ctx.prod_rank.assign(static_cast<size_t>(ctx.n) * ctx.n, 0);
    int32_t rank = -1;
    const Element* prev = nullptr;
    for (const auto& p : prods) {
        if (!prev || !(*prev == p.v)) { ++rank; prev = &p.v; }
        ctx.prod_rank[static_cast<size_t>(p.i) * ctx.n + p.j] = rank;
    }
    ctx.distinct_products = rank + 1;
    return ctx;
}

int square_size_by_ranks(const UniverseContext& ctx, const std::vector<int32_t>& idx) {
    std::vector<int32_t> rs;
    rs.reserve(idx.size() * idx.size());
    for (int32_t i : idx)
        for (int32_t j : idx) rs.push_back(ctx.rank(i, j));
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    return static_cast<int>(rs.size());
}

namespace {

// bitset over product ranks with an undo trail
struct SquareBits {
    std::vector<uint64_t> bits;
    std::vector<int32_t> trail;
    int count = 0;

    explicit SquareBits(int32_t universe) : bits((universe + 63) / 64, 0) {}

    bool test(int32_t r) const { return (bits[r >> 6] >> (r & 63)) & 1; }

    void set_traced(int32_t r) {
        if (test(r)) return;
        bits[r >> 6] |= uint64_t{1} << (r & 63);
        trail.push_back(r);
        ++count;
    }

    size_t mark() const { return trail.size(); }

    void rollback(size_t m) {
        while (trail.size() > m) {
            int32_t r = trail.back();
            trail.pop_back();
            bits[r >> 6] &= ~(uint64_t{1} << (r & 63));
            --count;
        }
    }
};

} // namespace

namespace detail {

struct Engine {
    const UniverseContext& ctx;
    int k;
    long long bound_num; // compare |P^2|*den against bound_num
    long long den;
    Normalize normalize;
    std::function<void(const std::vector<int32_t>&)> sink;

    std::vector<int32_t> chosen;
    SquareBits sq;

    Engine(const UniverseContext& c, int kk, Rational alpha, long long beta, Normalize nm,
           std::function<void(const std::vector<int32_t>&)> s)
        : ctx(c), k(kk), den(alpha.den), normalize(nm), sink(std::move(s)),
          sq(c.distinct_products) {
        if (alpha.den < 1) throw InputError("alpha denominator must be >= 1");
        bound_num = alpha.num * k + beta * alpha.den;
    }

    bool extend(int32_t x) {
        size_t m = sq.mark();
        for (int32_t i : chosen) {
            sq.set_traced(ctx.rank(i, x));
            sq.set_traced(ctx.rank(x, i));
        }
        sq.set_traced(ctx.rank(x, x));
        chosen.push_back(x);
        // every further element adds at least two new products
        long long lower = sq.count + 2LL * (k - static_cast<int>(chosen.size()));
        if (lower * den > bound_num) {
            chosen.pop_back();
            sq.rollback(m);
            return false;
        }
        return true;
    }

    void retract(size_t m) {
        chosen.pop_back();
        sq.rollback(m);
    }

    bool leaf_accepts() const {
        if (normalize == Normalize::TranslatePrimitive) {
            // rank-1 lattice only: gcd of differences from the minimum is 1
            Int g = 0;
            const auto& base = std::get<IntVec>(ctx.elems[chosen[0]].v).c[0];
            for (size_t i = 1; i < chosen.size(); ++i)
                g = gcd_int(g, std::get<IntVec>(ctx.elems[chosen[i]].v).c[0] - base);
            if (g != 1) return false;
        }
        return true;
    }

    void dfs(int32_t next_min) {
        if (static_cast<int>(chosen.size()) == k) {
            if (leaf_accepts()) sink(chosen);
            return;
        }
        int remaining = k - static_cast<int>(chosen.size());
        for (int32_t x = next_min; x <= ctx.n - remaining; ++x) {
            size_t m = sq.mark();
            if (extend(x)) {
                dfs(x + 1);
                retract(m);
            }
        }
    }
};

} // namespace detail

namespace {

int env_workers() {
    const char* w = std::getenv("OGS_WORKERS");
    if (!w) return 0;
    int v = std::atoi(w);
    return v >= 1 ? v : 0;
}

} // namespace

int worker_count_override(int requested) {
    int env = env_workers();
    if (env > 0) return env;
    return requested >= 1 ? requested : 1;
}

void enumerate_subsets(const UniverseContext& ctx, int k, Rational alpha, long long beta,
                       Normalize normalize, int workers,
                       const std::function<void(const std::vector<int32_t>&)>& sink) {
    if (k < 1) throw InputError("enumerate: k >= 1");
    if (k > ctx.n) return;
    if (normalize != Normalize::None && ctx.identity_index < 0)
        throw InputError("normalization needs the identity in the universe");
    if (normalize == Normalize::TranslatePrimitive &&
        !(ctx.spec.family == Family::Lattice && ctx.spec.rank == 1))
        throw InputError("translate_and_primitive_ratio applies to rank-1 lattices only");

    workers = std::max(1, workers);

    // depth-2 prefixes in lexicographic order; each becomes one task
    std::vector<std::pair<int32_t, int32_t>> tasks;
    {
        detail::Engine probe(ctx, k, alpha, beta, normalize, [](const std::vector<int32_t>&) {});
        std::vector<int32_t> firsts;
        if (normalize == Normalize::None) {
            for (int32_t i = 0; i + k <= ctx.n; ++i) firsts.push_back(i);
        } else {
            firsts.push_back(ctx.identity_index);
        }
        for (int32_t i : firsts) {
            if (k == 1) { tasks.push_back({i, -1}); continue; }
            size_t m0 = probe.sq.mark();
            if (probe.extend(i)) {
                for (int32_t j = i + 1; j <= ctx.n - (k - 1); ++j) {
                    size_t m1 = probe.sq.mark();
                    if (probe.extend(j)) {
                        tasks.push_back({i, j});
                        probe.retract(m1);
                    }
                }
                probe.retract(m0);
            }
        }
    }

    auto run_task = [&](const std::pair<int32_t, int32_t>& t,
                        const std::function<void(const std::vector<int32_t>&)>& out) {
        detail::Engine eng(ctx, k, alpha, beta, normalize, out);
        if (t.second < 0) {
            if (eng.extend(t.first)) eng.dfs(t.first + 1);
            return;
        }
        if (!eng.extend(t.first)) return;
        if (!eng.extend(t.second)) return;
        eng.dfs(t.second + 1);
    };

    if (workers == 1 || tasks.size() <= 1) {
        for (const auto& t : tasks) run_task(t, sink);
        return;
    }

    // independent subtree tasks, results merged in canonical task order
    std::vector<std::vector<std::vector<int32_t>>> results(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t idx = next.fetch_add(1);
            if (idx >= tasks.size()) break;
            auto& bucket = results[idx];
            run_task(tasks[idx],
                     [&bucket](const std::vector<int32_t>& s) { bucket.push_back(s); });
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (const auto& bucket : results)
        for (const auto& s : bucket) sink(s);
}

std::vector<FiniteSubset> enumerate_small_doubling(const EnumerationTask& task, int workers) {
    auto elems = ball(task.ball);
    auto ctx = make_universe(task.ball.spec, std::move(elems));
    std::vector<FiniteSubset> out;
    enumerate_subsets(ctx, task.k, task.alpha, task.beta, task.normalize, workers,
                      [&](const std::vector<int32_t>& idx) {
                          std::vector<Element> e;
                          e.reserve(idx.size());
                          for (int32_t i : idx) e.push_back(ctx.elems[i]);
                          out.push_back(FiniteSubset{ctx.spec, std::move(e)});
                      });
    return out;
}

FiniteSubset construct_4k5(int k) {
    if (k < 3) throw InputError("construct_4k5: k >= 3");
    GroupSpec g = GroupSpec::product(GroupSpec::lattice(1), GroupSpec::free_group(2));
    Element a = pair_elem(lattice_point({Int(1)}), identity(g.parts[1]));
    Element c = pair_elem(lattice_point({Int(0)}), word_of({2}));
    Element b = pair_elem(lattice_point({Int(0)}), word_of({1}));
    std::vector<Element> elems{b};
    Element cur = a;
    for (int i = 0; i <= k - 2; ++i) {
        elems.push_back(cur);
        cur = multiply(g, cur, c);
    }
    return make_subset(g, std::move(elems));
}

FiniteSubset random_two_ap(int k, Int gap, int split, Int ratio, uint64_t seed) {
    if (k < 2) throw InputError("random_two_ap: k >= 2");
    SeededRng rng(seed);
    if (split == 0) split = static_cast<int>(rng.range(1, k - 1));
    if (split < 1 || split > k - 1) throw InputError("random_two_ap: 1 <= split <= k-1");
    if (ratio == 0) ratio = Int(rng.range(1, 50));
    if (ratio < 1) throw InputError("random_two_ap: ratio >= 1");
    if (gap == 0) {
        Int lo = 2 * k * ratio + 1;
        Int span = Int(1000000) - lo;
        gap = span > 0 ? lo + Int(rng.below(span.convert_to<uint64_t>() + 1)) : lo;
    }
    GroupSpec g = GroupSpec::lattice(1);
    std::vector<Element> elems;
    for (int i = 0; i < split; ++i) elems.push_back(lattice_point({ratio * i}));
    for (int i = 0; i < k - split; ++i) elems.push_back(lattice_point({gap + ratio * i}));
    return make_subset(g, std::move(elems));
}

} // namespace ogs
