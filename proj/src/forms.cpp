#include "ogs/forms.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "ogs/rng.hpp"

namespace ogs {

std::string form_name(FormKind k) {
    switch (k) {
        case FormKind::TypeI: return "type_i";
        case FormKind::TypeII: return "type_ii";
        case FormKind::TypeIII: return "type_iii";
        case FormKind::TypeIV: return "type_iv";
        case FormKind::Central3: return "central3";
        case FormKind::Conjugate3: return "conjugate3";
        case FormKind::P5a: return "p5a";
        case FormKind::P5b: return "p5b";
        case FormKind::P5c: return "p5c";
        case FormKind::P6a: return "p6a";
        case FormKind::P6b: return "p6b";
        case FormKind::P6c: return "p6c";
    }
    return "?";
}

std::optional<FormKind> form_from_name(const std::string& s) {
    static const std::pair<const char*, FormKind> table[] = {
        {"type_i", FormKind::TypeI},   {"type_ii", FormKind::TypeII},
        {"type_iii", FormKind::TypeIII}, {"type_iv", FormKind::TypeIV},
        {"central3", FormKind::Central3}, {"conjugate3", FormKind::Conjugate3},
        {"p5a", FormKind::P5a},        {"p5b", FormKind::P5b},
        {"p5c", FormKind::P5c},        {"p6a", FormKind::P6a},
        {"p6b", FormKind::P6b},        {"p6c", FormKind::P6c},
    };
    for (const auto& [n, k] : table)
        if (s == n) return k;
    return std::nullopt;
}

std::string law_name(GroupLaw l) {
    switch (l) {
        case GroupLaw::Metabelian: return "metabelian";
        case GroupLaw::Class2: return "class2";
        case GroupLaw::Abelian: return "abelian";
    }
    return "?";
}

std::optional<GroupLaw> law_from_name(const std::string& s) {
    if (s == "metabelian") return GroupLaw::Metabelian;
    if (s == "class2") return GroupLaw::Class2;
    if (s == "abelian") return GroupLaw::Abelian;
    return std::nullopt;
}

namespace {

bool positive(const GroupSpec& g, const Element& e) {
    return compare(g, e, identity(g)) == Ord::GT;
}

bool same_set3(const GroupSpec& g, const FiniteSubset& s, const Element& a, const Element& b,
               const Element& c) {
    std::vector<Element> v{a, b, c};
    std::sort(v.begin(), v.end(),
              [&](const Element& x, const Element& y) { return less(g, x, y); });
    return v == s.elems;
}

// relations shared by P5a and P5b: c > 1, c^{x^2} = c c^x, c c^x = c^x c
bool p5ab_relations(const GroupSpec& g, const Element& x, const Element& c) {
    if (!positive(g, c)) return false;
    Element cx = conjugate(g, c, x);
    if (!(multiply(g, c, cx) == multiply(g, cx, c))) return false;
    Element cxx = conjugate(g, c, multiply(g, x, x));
    return cxx == multiply(g, c, cx);
}

bool p5c_relations(const GroupSpec& g, const Element& x, const Element& c) {
    if (!positive(g, c)) return false;
    Element c2 = multiply(g, c, c);
    return conjugate(g, c, x) == c2 || conjugate(g, c2, x) == c;
}

} // namespace

std::optional<YoungForm> match_triple_form(const GroupSpec& g, const FiniteSubset& s) {
    if (s.size() != 3) throw HypothesisError("match_triple_form: need |S| = 3");
    if (square_size(s) != 7) throw HypothesisError("match_triple_form: need |S^2| = 7");
    bool noncomm = false;
    for (int i = 0; i < 3 && !noncomm; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!commutes(g, s.elems[i], s.elems[j])) { noncomm = true; break; }
    if (!noncomm) throw HypothesisError("match_triple_form: need a non-commuting pair");

    const auto& e = s.elems;

    // Central3: an element commuting with both others
    for (int i = 0; i < 3; ++i) {
        int o1 = (i + 1) % 3, o2 = (i + 2) % 3;
        if (commutes(g, e[i], e[o1]) && commutes(g, e[i], e[o2])) {
            YoungForm f{FormKind::Central3, {}, false};
            f.witnesses["center"] = e[i];
            f.witnesses["other1"] = e[std::min(o1, o2)];
            f.witnesses["other2"] = e[std::max(o1, o2)];
            return f;
        }
    }

    // Conjugate3: S = {a, a^b, b} with a a^b = a^b a
    for (int bi = 0; bi < 3; ++bi)
        for (int ai = 0; ai < 3; ++ai) {
            if (ai == bi) continue;
            int ci = 3 - ai - bi;
            Element ab = conjugate(g, e[ai], e[bi]);
            if (ab == e[ci] && commutes(g, e[ai], ab)) {
                YoungForm f{FormKind::Conjugate3, {}, false};
                f.witnesses["a"] = e[ai];
                f.witnesses["b"] = e[bi];
                return f;
            }
        }

    // P5a / P5b / P5c; for each form the direct variant is tried before the
    // inverted one, role pairs (i, j) in ascending order, c solved from the
    // set equation
    for (int form = 0; form < 3; ++form) {
        for (int variant = 0; variant < 2; ++variant) {
            if (form == 2 && variant == 1) break; // P5c has no inverse variant
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    if (j == i) continue;
                    int k = 3 - i - j;
                    Element x = variant == 0 ? e[i] : invert(g, e[i]);
                    Element c = multiply(g, invert(g, e[i]), e[j]); // from s_j = e_i * c
                    Element third;
                    if (form == 0) {
                        // {x, xc, x c^x}
                        third = variant == 0
                                    ? multiply(g, c, x)
                                    : multiply(g, e[i], conjugate(g, c, x));
                    } else if (form == 1) {
                        // {x, xc, x c c^x}
                        third = variant == 0
                                    ? multiply(g, e[j], conjugate(g, c, x))
                                    : multiply(g, multiply(g, e[i], c), conjugate(g, c, x));
                    } else {
                        // {x, xc, xc^2}
                        third = multiply(g, e[j], c);
                    }
                    if (!(third == e[k])) continue;
                    bool rel_ok = form == 2 ? p5c_relations(g, x, c) : p5ab_relations(g, x, c);
                    if (!rel_ok) continue;
                    YoungForm f{form == 0   ? FormKind::P5a
                                : form == 1 ? FormKind::P5b
                                            : FormKind::P5c,
                                {}, variant == 1};
                    f.witnesses["x"] = x;
                    f.witnesses["c"] = c;
                    return f;
                }
        }
    }
    return std::nullopt;
}

std::optional<YoungForm> match_extension_form(const GroupSpec& g, const FiniteSubset& s) {
    const int k = s.size();
    if (k < 4) throw HypothesisError("match_extension_form: need |S| >= 4");
    if (square_size(s) != 3 * k - 2)
        throw HypothesisError("match_extension_form: need |S^2| = 3|S|-2");

    Element id = identity(g);
    for (int yi = 0; yi < k; ++yi) {
        const Element& y = s.elems[yi];
        std::vector<Element> t;
        for (int i = 0; i < k; ++i)
            if (i != yi) t.push_back(s.elems[i]);

        // T must be a geometric progression {a, ac, ..., ac^{k-2}} with
        // commuting a, c; T is ascending so c > 1 automatically
        Element a = t[0];
        Element c = multiply(g, invert(g, t[0]), t[1]);
        if (c == id) continue;
        bool prog = commutes(g, a, c);
        for (size_t i = 0; prog && i + 1 < t.size(); ++i)
            if (!(multiply(g, t[i], c) == t[i + 1])) prog = false;
        if (!prog) continue;

        Element cay = commutator(g, a, y);
        Element cya = commutator(g, y, a);
        Element c2 = multiply(g, c, c);

        // (a): [a,y] = c or [y,a] = c, with c central in <a,c,y>
        if ((cay == c || cya == c) && commutes(g, c, y) && commutes(g, c, a)) {
            YoungForm f{FormKind::P6a, {}, false};
            f.witnesses["a"] = a;
            f.witnesses["c"] = c;
            f.witnesses["y"] = y;
            return f;
        }
        if (k == 4) {
            // (b): [a,y] = c or [a,y] = 1, (c^2)^y = c
            if ((cay == c || cay == id) && commutes(g, c, a) && conjugate(g, c2, y) == c) {
                YoungForm f{FormKind::P6b, {}, false};
                f.witnesses["a"] = a;
                f.witnesses["c"] = c;
                f.witnesses["y"] = y;
                return f;
            }
            // (c): [a,y] = 1 or [y,a] = c^2, c^y = c^2
            if ((cay == id || cya == c2) && commutes(g, c, a) && conjugate(g, c, y) == c2) {
                YoungForm f{FormKind::P6c, {}, false};
                f.witnesses["a"] = a;
                f.witnesses["c"] = c;
                f.witnesses["y"] = y;
                return f;
            }
        }
    }
    return std::nullopt;
}

namespace {

const Element& wit(const std::map<std::string, Element>& w, const std::string& k) {
    auto it = w.find(k);
    if (it == w.end()) throw InputError("young form witness missing symbol " + k);
    return it->second;
}

} // namespace

bool check_young_relations(const GroupSpec& g, FormKind kind,
                           const std::map<std::string, Element>& w) {
    Element id = identity(g);
    switch (kind) {
        case FormKind::TypeI: {
            const Element &a = wit(w, "a"), &b = wit(w, "b");
            Element c = commutator(g, a, b);
            return commutator(g, c, a) == id && commutator(g, c, b) == id;
        }
        case FormKind::TypeII: {
            const Element &a = wit(w, "a"), &b = wit(w, "b"), &c = wit(w, "c");
            if (c == id) return false;
            if (!commutes(g, a, b) || !commutes(g, a, c)) return false;
            Element c2 = multiply(g, c, c);
            return conjugate(g, c, b) == c2 || conjugate(g, c2, b) == c;
        }
        case FormKind::TypeIII: {
            const Element &a = wit(w, "a"), &b = wit(w, "b");
            if (a == id) return false;
            return conjugate(g, a, b) == multiply(g, a, a);
        }
        case FormKind::TypeIV: {
            const Element &a = wit(w, "a"), &b = wit(w, "b");
            if (a == id) return false;
            Element ab = conjugate(g, a, b);
            if (!commutes(g, a, ab)) return false;
            return conjugate(g, a, multiply(g, b, b)) == multiply(g, a, ab);
        }
        case FormKind::Central3:
            return commutes(g, wit(w, "center"), wit(w, "other1")) &&
                   commutes(g, wit(w, "center"), wit(w, "other2"));
        case FormKind::Conjugate3: {
            const Element &a = wit(w, "a"), &b = wit(w, "b");
            return commutes(g, a, conjugate(g, a, b));
        }
        case FormKind::P5a:
        case FormKind::P5b:
            return p5ab_relations(g, wit(w, "x"), wit(w, "c"));
        case FormKind::P5c:
            return p5c_relations(g, wit(w, "x"), wit(w, "c"));
        case FormKind::P6a: {
            const Element &a = wit(w, "a"), &c = wit(w, "c"), &y = wit(w, "y");
            if (!commutes(g, c, y) || !commutes(g, c, a)) return false;
            return commutator(g, a, y) == c || commutator(g, y, a) == c;
        }
        case FormKind::P6b: {
            const Element &a = wit(w, "a"), &c = wit(w, "c"), &y = wit(w, "y");
            if (!commutes(g, c, a)) return false;
            Element cay = commutator(g, a, y);
            if (!(cay == c || cay == id)) return false;
            return conjugate(g, multiply(g, c, c), y) == c;
        }
        case FormKind::P6c: {
            const Element &a = wit(w, "a"), &c = wit(w, "c"), &y = wit(w, "y");
            if (!commutes(g, c, a)) return false;
            Element c2 = multiply(g, c, c);
            Element cay = commutator(g, a, y);
            if (!(cay == id || commutator(g, y, a) == c2)) return false;
            return conjugate(g, c, y) == c2;
        }
    }
    return false;
}

bool revalidate_form(const GroupSpec& g, const FiniteSubset& s, const YoungForm& f) {
    if (!check_young_relations(g, f.kind, f.witnesses)) return false;
    const auto& w = f.witnesses;
    switch (f.kind) {
        case FormKind::Central3:
            return same_set3(g, s, wit(w, "center"), wit(w, "other1"), wit(w, "other2"));
        case FormKind::Conjugate3: {
            const Element &a = wit(w, "a"), &b = wit(w, "b");
            return same_set3(g, s, a, conjugate(g, a, b), b);
        }
        case FormKind::P5a:
        case FormKind::P5b:
        case FormKind::P5c: {
            const Element &x = wit(w, "x"), &c = wit(w, "c");
            Element base = f.inverted ? invert(g, x) : x;
            Element second = multiply(g, base, c);
            Element third;
            if (f.kind == FormKind::P5a) third = multiply(g, base, conjugate(g, c, x));
            else if (f.kind == FormKind::P5b)
                third = multiply(g, multiply(g, base, c), conjugate(g, c, x));
            else third = multiply(g, second, c);
            return same_set3(g, s, base, second, third);
        }
        case FormKind::P6a:
        case FormKind::P6b:
        case FormKind::P6c: {
            const Element &a = wit(w, "a"), &c = wit(w, "c"), &y = wit(w, "y");
            if (!positive(g, c)) return false;
            std::vector<Element> expect{y};
            Element cur = a;
            for (int i = 0; i + 1 < s.size(); ++i) {
                expect.push_back(cur);
                cur = multiply(g, cur, c);
            }
            std::sort(expect.begin(), expect.end(),
                      [&](const Element& p, const Element& q) { return less(g, p, q); });
            return expect == s.elems;
        }
        default:
            // model kinds carry no set equation
            return true;
    }
}

namespace {

Element eval_letters(const GroupSpec& g, const std::vector<Element>& gens,
                     const std::vector<Element>& invs, const std::vector<int>& letters) {
    Element acc = identity(g);
    for (int l : letters) acc = multiply(g, acc, l > 0 ? gens[l - 1] : invs[-l - 1]);
    return acc;
}

Element law_value(const GroupSpec& g, GroupLaw law, const std::vector<Element>& t) {
    switch (law) {
        case GroupLaw::Metabelian:
            return commutator(g, commutator(g, t[0], t[1]), commutator(g, t[2], t[3]));
        case GroupLaw::Class2:
            return commutator(g, commutator(g, t[0], t[1]), t[2]);
        case GroupLaw::Abelian:
            return commutator(g, t[0], t[1]);
    }
    throw InputError("bad law");
}

int law_arity(GroupLaw law) {
    switch (law) {
        case GroupLaw::Metabelian: return 4;
        case GroupLaw::Class2: return 3;
        case GroupLaw::Abelian: return 2;
    }
    return 0;
}

} // namespace

LawReport law_check(const GroupSpec& g, const std::vector<Element>& generators, GroupLaw law,
                    int radius, long long sample_count, uint64_t seed) {
    if (radius < 1) throw InputError("law_check: radius >= 1");
    if (generators.empty()) throw InputError("law_check: need generators");
    LawReport rep;
    rep.law = law;
    rep.radius = radius;

    std::vector<Element> invs;
    invs.reserve(generators.size());
    for (const auto& e : generators) invs.push_back(invert(g, e));

    const int arity = law_arity(law);
    Element id = identity(g);

    // All words of length <= 2, deduplicated by value. The laws factor
    // through commutators, so the sweep stages them: inner commutators are
    // computed once per distinct pair value and deduplicated before the
    // outer level. This keeps the exhaustive sweep quadratic in the word
    // count instead of tuple-exponential.
    std::vector<Element> shorts;
    shorts.push_back(id);
    const int ng = static_cast<int>(generators.size());
    for (int a = -ng; a <= ng; ++a) {
        if (a == 0) continue;
        shorts.push_back(eval_letters(g, generators, invs, {a}));
        for (int b = -ng; b <= ng; ++b) {
            if (b == 0) continue;
            shorts.push_back(eval_letters(g, generators, invs, {a, b}));
        }
    }
    {
        std::vector<Element> dedup;
        std::unordered_set<std::string> seen;
        for (auto& e : shorts)
            if (seen.insert(element_key(e)).second) dedup.push_back(std::move(e));
        shorts = std::move(dedup);
    }
    const double nshort = static_cast<double>(shorts.size());
    if (nshort * nshort <= 300000.0) {
        rep.exhaustive_len2 = true;
        // distinct inner commutators with an originating pair
        std::vector<std::pair<Element, std::pair<int, int>>> comms;
        if (law != GroupLaw::Abelian) {
            std::unordered_set<std::string> seen;
            for (size_t i = 0; i < shorts.size(); ++i)
                for (size_t j = 0; j < shorts.size(); ++j) {
                    Element c = commutator(g, shorts[i], shorts[j]);
                    if (seen.insert(element_key(c)).second)
                        comms.push_back({std::move(c), {static_cast<int>(i), static_cast<int>(j)}});
                }
        }
        if (law == GroupLaw::Metabelian &&
            static_cast<double>(comms.size()) * static_cast<double>(comms.size()) > 2e6) {
            rep.exhaustive_len2 = false;
            comms.clear();
        }
        switch (law) {
            case GroupLaw::Abelian:
                for (size_t i = 0; i < shorts.size(); ++i)
                    for (size_t j = 0; j < shorts.size(); ++j) {
                        ++rep.samples_checked;
                        if (!(commutator(g, shorts[i], shorts[j]) == id)) {
                            rep.holds = false;
                            rep.first_violation = {shorts[i], shorts[j]};
                            return rep;
                        }
                    }
                break;
            case GroupLaw::Class2:
                for (const auto& [c, src] : comms)
                    for (const auto& z : shorts) {
                        ++rep.samples_checked;
                        if (!(commutator(g, c, z) == id)) {
                            rep.holds = false;
                            rep.first_violation = {shorts[src.first], shorts[src.second], z};
                            return rep;
                        }
                    }
                break;
            case GroupLaw::Metabelian:
                for (const auto& [c1, s1] : comms)
                    for (const auto& [c2, s2] : comms) {
                        ++rep.samples_checked;
                        if (!(commutator(g, c1, c2) == id)) {
                            rep.holds = false;
                            rep.first_violation = {shorts[s1.first], shorts[s1.second],
                                                   shorts[s2.first], shorts[s2.second]};
                            return rep;
                        }
                    }
                break;
        }
    }

    SeededRng rng(seed);
    for (long long n = 0; n < sample_count; ++n) {
        std::vector<Element> t;
        t.reserve(arity);
        for (int i = 0; i < arity; ++i) {
            int len = static_cast<int>(rng.range(1, radius));
            std::vector<int> letters(len);
            for (int& l : letters) {
                int gidx = static_cast<int>(rng.range(1, ng));
                l = rng.coin() ? gidx : -gidx;
            }
            t.push_back(eval_letters(g, generators, invs, letters));
        }
        ++rep.samples_checked;
        if (!(law_value(g, law, t) == id)) {
            rep.holds = false;
            rep.first_violation = t;
            return rep;
        }
    }
    return rep;
}

std::optional<std::vector<int>> bounded_membership(const GroupSpec& g, const Element& x,
                                                   const std::vector<Element>& generators,
                                                   int radius) {
    if (radius < 1) throw InputError("bounded_membership: radius >= 1");
    Element id = identity(g);
    if (x == id) return std::vector<int>{};

    std::vector<Element> invs;
    for (const auto& e : generators) invs.push_back(invert(g, e));
    const int ng = static_cast<int>(generators.size());

    struct Node { Element e; std::vector<int> word; };
    std::deque<Node> frontier;
    std::unordered_set<std::string> seen;
    frontier.push_back({id, {}});
    seen.insert(element_key(id));

    while (!frontier.empty()) {
        Node cur = std::move(frontier.front());
        frontier.pop_front();
        if (static_cast<int>(cur.word.size()) >= radius) continue;
        for (int l = -ng; l <= ng; ++l) {
            if (l == 0) continue;
            Element nxt = multiply(g, cur.e, l > 0 ? generators[l - 1] : invs[-l - 1]);
            std::string key = element_key(nxt);
            if (!seen.insert(key).second) continue;
            std::vector<int> word = cur.word;
            word.push_back(l);
            if (nxt == x) return word;
            frontier.push_back({std::move(nxt), std::move(word)});
        }
    }
    return std::nullopt;
}

} // namespace ogs
