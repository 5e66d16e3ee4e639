#include "ogs/group.hpp"

#include <algorithm>
#include <sstream>

#include "ogs/magnus.hpp"

namespace ogs {

bool PairElem::operator==(const PairElem& o) const { return parts == o.parts; }

namespace {

int depth_of(const GroupSpec& s) {
    if (s.family != Family::Product) return 1;
    int d = 0;
    for (const auto& p : s.parts) d = std::max(d, depth_of(p));
    return d + 1;
}

Family family_of(const Element& e) {
    switch (e.v.index()) {
        case 0: return Family::Lattice;
        case 1: return Family::Free;
        case 2: return Family::Heisenberg;
        case 3: return Family::BS12;
        case 4: return Family::Golden;
        default: return Family::Product;
    }
}

void require_family(const GroupSpec& g, const Element& e, const char* op) {
    if (family_of(e) != g.family)
        throw FamilyError(std::string(op) + ": element family " +
                          family_name(family_of(e)) + " does not match group " +
                          family_name(g.family));
}

void reduce_append(std::vector<int>& out, int letter) {
    if (!out.empty() && out.back() == -letter) out.pop_back();
    else out.push_back(letter);
}

} // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::Lattice: return "lattice";
        case Family::Free: return "free";
        case Family::Heisenberg: return "heisenberg";
        case Family::BS12: return "bs12";
        case Family::Golden: return "golden";
        case Family::Product: return "product";
    }
    return "?";
}

void validate_spec(const GroupSpec& s) {
    switch (s.family) {
        case Family::Lattice:
        case Family::Free:
            if (s.rank < 1) throw InputError("group rank must be >= 1");
            break;
        case Family::Product:
            if (s.parts.size() != 2) throw InputError("product group needs exactly two factors");
            if (depth_of(s) > 4) throw InputError("product nesting depth exceeds 4");
            for (const auto& p : s.parts) validate_spec(p);
            break;
        default:
            break;
    }
    if (s.family == Family::Free) {
        if (s.magnus_initial_degree < 1 || s.magnus_initial_degree > s.magnus_max_degree)
            throw InputError("require 1 <= magnus_initial_degree <= magnus_max_degree");
    }
}

Element lattice_point(std::vector<Int> coords) { return Element{IntVec{std::move(coords)}}; }

Element word_of(std::vector<int> letters) {
    std::vector<int> red;
    red.reserve(letters.size());
    for (int l : letters) {
        if (l == 0) throw InputError("word letters are signed 1-based indices, 0 is invalid");
        reduce_append(red, l);
    }
    return Element{Word{std::move(red)}};
}

Element heis(Int a, Int b, Int c) { return Element{HeisTriple{std::move(a), std::move(b), std::move(c)}}; }
Element bs_elem(Dyadic t, Int n) { return Element{BsElem{std::move(t), std::move(n)}}; }
Element golden_elem(Int u, Int v, Int n) {
    return Element{GoldenElem{std::move(u), std::move(v), std::move(n)}};
}
Element pair_elem(Element left, Element right) {
    PairElem p;
    p.parts.push_back(std::move(left));
    p.parts.push_back(std::move(right));
    return Element{std::move(p)};
}

Element identity(const GroupSpec& g) {
    switch (g.family) {
        case Family::Lattice: return lattice_point(std::vector<Int>(g.rank, Int(0)));
        case Family::Free: return Element{Word{}};
        case Family::Heisenberg: return heis(0, 0, 0);
        case Family::BS12: return bs_elem(Dyadic(), 0);
        case Family::Golden: return golden_elem(0, 0, 0);
        case Family::Product: return pair_elem(identity(g.parts[0]), identity(g.parts[1]));
    }
    throw InputError("bad family");
}

bool is_identity(const GroupSpec& g, const Element& e) { return e == identity(g); }

Element multiply(const GroupSpec& g, const Element& x, const Element& y) {
    require_family(g, x, "multiply");
    require_family(g, y, "multiply");
    switch (g.family) {
        case Family::Lattice: {
            const auto& a = std::get<IntVec>(x.v).c;
            const auto& b = std::get<IntVec>(y.v).c;
            if (a.size() != b.size() || static_cast<int>(a.size()) != g.rank)
                throw FamilyError("multiply: lattice dimension mismatch");
            std::vector<Int> c(a.size());
            for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
            return lattice_point(std::move(c));
        }
        case Family::Free: {
            const auto& a = std::get<Word>(x.v).letters;
            const auto& b = std::get<Word>(y.v).letters;
            std::vector<int> r = a;
            for (int l : b) reduce_append(r, l);
            return Element{Word{std::move(r)}};
        }
        case Family::Heisenberg: {
            const auto& a = std::get<HeisTriple>(x.v);
            const auto& b = std::get<HeisTriple>(y.v);
            return heis(a.a + b.a, a.b + b.b, a.c + b.c + a.a * b.b);
        }
        case Family::BS12: {
            const auto& a = std::get<BsElem>(x.v);
            const auto& b = std::get<BsElem>(y.v);
            if (!fits_int64(a.n)) throw InputError("bs12 height too large");
            return bs_elem(a.t + b.t.mul_pow2(-a.n.convert_to<long long>()), a.n + b.n);
        }
        case Family::Golden: {
            // (h,n)(h',n') = (h + phi^{-n} h', n+n'); phi^{-1} = phi - 1
            const auto& a = std::get<GoldenElem>(x.v);
            const auto& b = std::get<GoldenElem>(y.v);
            if (!fits_int64(a.n)) throw InputError("golden height too large");
            long long e = -a.n.convert_to<long long>();
            // scale (u, v) by phi^e: phi*(u+v*phi) = v + (u+v)*phi
            //                    phi^{-1}*(u+v*phi) = (u... ) via phi^{-1} = phi-1:
            // (u+v*phi)(phi-1) = -u + (u - v)*phi + v*phi^2 = (v-u) + u*phi
            Int u = b.u, v = b.v;
            for (long long i = 0; i < e; ++i) { Int nu = v; v = u + v; u = std::move(nu); }
            for (long long i = 0; i > e; --i) { Int nu = v - u; v = std::move(u); u = std::move(nu); }
            return golden_elem(a.u + u, a.v + v, a.n + b.n);
        }
        case Family::Product: {
            const auto& a = std::get<PairElem>(x.v).parts;
            const auto& b = std::get<PairElem>(y.v).parts;
            return pair_elem(multiply(g.parts[0], a[0], b[0]), multiply(g.parts[1], a[1], b[1]));
        }
    }
    throw InputError("bad family");
}

Element invert(const GroupSpec& g, const Element& x) {
    require_family(g, x, "invert");
    switch (g.family) {
        case Family::Lattice: {
            auto c = std::get<IntVec>(x.v).c;
            for (auto& v : c) v = -v;
            return lattice_point(std::move(c));
        }
        case Family::Free: {
            const auto& a = std::get<Word>(x.v).letters;
            std::vector<int> r(a.rbegin(), a.rend());
            for (int& l : r) l = -l;
            return Element{Word{std::move(r)}};
        }
        case Family::Heisenberg: {
            const auto& a = std::get<HeisTriple>(x.v);
            return heis(-a.a, -a.b, a.a * a.b - a.c);
        }
        case Family::BS12: {
            const auto& a = std::get<BsElem>(x.v);
            if (!fits_int64(a.n)) throw InputError("bs12 height too large");
            return bs_elem(-a.t.mul_pow2(a.n.convert_to<long long>()), -a.n);
        }
        case Family::Golden: {
            const auto& a = std::get<GoldenElem>(x.v);
            if (!fits_int64(a.n)) throw InputError("golden height too large");
            long long e = a.n.convert_to<long long>();
            Int u = -a.u, v = -a.v;
            for (long long i = 0; i < e; ++i) { Int nu = v; v = u + v; u = std::move(nu); }
            for (long long i = 0; i > e; --i) { Int nu = v - u; v = std::move(u); u = std::move(nu); }
            return golden_elem(std::move(u), std::move(v), -a.n);
        }
        case Family::Product: {
            const auto& a = std::get<PairElem>(x.v).parts;
            return pair_elem(invert(g.parts[0], a[0]), invert(g.parts[1], a[1]));
        }
    }
    throw InputError("bad family");
}

Element power(const GroupSpec& g, const Element& x, long long e) {
    if (e == 0) return identity(g);
    if (e < 0) return invert(g, power(g, x, -e));
    Element acc = identity(g);
    Element base = x;
    unsigned long long n = static_cast<unsigned long long>(e);
    while (n > 0) {
        if (n & 1) acc = multiply(g, acc, base);
        n >>= 1;
        if (n) base = multiply(g, base, base);
    }
    return acc;
}

namespace {

int cmp_int(const Int& a, const Int& b) { return a < b ? -1 : (a > b ? 1 : 0); }

int cmp_lex(const std::vector<Int>& a, const std::vector<Int>& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        int c = cmp_int(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

// Magnus order: x < y iff the lowest non-constant coefficient of the
// expansion of x^{-1}y is positive. Escalate the truncation degree by
// doubling until the words separate; distinct reduced words always do at
// finite degree, so the cap only bounds runtime.
Ord compare_free(const GroupSpec& g, const Word& a, const Word& b) {
    if (a == b) return Ord::EQ;
    std::vector<int> w(a.letters.rbegin(), a.letters.rend());
    for (int& l : w) l = -l;
    std::vector<int> red;
    red.reserve(w.size() + b.letters.size());
    for (int l : w) reduce_append(red, l);
    for (int l : b.letters) reduce_append(red, l);
    Word diff{std::move(red)};
    int deg = g.magnus_initial_degree;
    for (;;) {
        int s = magnus::lowest_sign(diff, deg);
        if (s > 0) return Ord::LT;
        if (s < 0) return Ord::GT;
        if (deg >= g.magnus_max_degree) break;
        deg = std::min(deg * 2, g.magnus_max_degree);
    }
    throw UndecidedOrderError(
        "Magnus comparison undecided at degree cap " + std::to_string(g.magnus_max_degree));
}

} // namespace

Ord compare(const GroupSpec& g, const Element& x, const Element& y) {
    require_family(g, x, "compare");
    require_family(g, y, "compare");
    switch (g.family) {
        case Family::Lattice: {
            const auto& a = std::get<IntVec>(x.v).c;
            const auto& b = std::get<IntVec>(y.v).c;
            if (a.size() != b.size()) throw FamilyError("compare: lattice dimension mismatch");
            int c = cmp_lex(a, b);
            return c < 0 ? Ord::LT : (c > 0 ? Ord::GT : Ord::EQ);
        }
        case Family::Free:
            return compare_free(g, std::get<Word>(x.v), std::get<Word>(y.v));
        case Family::Heisenberg: {
            // lexicographic on the abelianization (a, b), ties by the
            // central coordinate
            const auto& a = std::get<HeisTriple>(x.v);
            const auto& b = std::get<HeisTriple>(y.v);
            int c = cmp_int(a.a, b.a);
            if (c == 0) c = cmp_int(a.b, b.b);
            if (c == 0) c = cmp_int(a.c, b.c);
            return c < 0 ? Ord::LT : (c > 0 ? Ord::GT : Ord::EQ);
        }
        case Family::BS12: {
            // x^{-1}y = (2^n (t'-t), n'-n) is positive iff n'>n, or n'=n and t'>t
            const auto& a = std::get<BsElem>(x.v);
            const auto& b = std::get<BsElem>(y.v);
            int c = cmp_int(a.n, b.n);
            if (c == 0) c = cmp(a.t, b.t);
            return c < 0 ? Ord::LT : (c > 0 ? Ord::GT : Ord::EQ);
        }
        case Family::Golden: {
            // x^{-1}y = (phi^n (h'-h), n'-n): positive iff n'>n, or n'=n and
            // h'-h > 0 under the real embedding
            const auto& a = std::get<GoldenElem>(x.v);
            const auto& b = std::get<GoldenElem>(y.v);
            int c = cmp_int(a.n, b.n);
            if (c == 0) c = -golden_sign(b.u - a.u, b.v - a.v);
            return c < 0 ? Ord::LT : (c > 0 ? Ord::GT : Ord::EQ);
        }
        case Family::Product: {
            const auto& a = std::get<PairElem>(x.v).parts;
            const auto& b = std::get<PairElem>(y.v).parts;
            Ord c = compare(g.parts[0], a[0], b[0]);
            if (c != Ord::EQ) return c;
            return compare(g.parts[1], a[1], b[1]);
        }
    }
    throw InputError("bad family");
}

Element conjugate(const GroupSpec& g, const Element& a, const Element& b) {
    return multiply(g, multiply(g, invert(g, b), a), b);
}

Element commutator(const GroupSpec& g, const Element& a, const Element& b) {
    return multiply(g, multiply(g, invert(g, a), invert(g, b)), multiply(g, a, b));
}

bool commutes(const GroupSpec& g, const Element& a, const Element& b) {
    return multiply(g, a, b) == multiply(g, b, a);
}

void check_element(const GroupSpec& g, const Element& e) {
    require_family(g, e, "check_element");
    switch (g.family) {
        case Family::Lattice: {
            const auto& c = std::get<IntVec>(e.v).c;
            if (static_cast<int>(c.size()) != g.rank)
                throw InputError("lattice element length != rank");
            break;
        }
        case Family::Free: {
            const auto& w = std::get<Word>(e.v).letters;
            for (size_t i = 0; i < w.size(); ++i) {
                if (w[i] == 0 || std::abs(w[i]) > g.rank)
                    throw InputError("word letter out of range");
                if (i + 1 < w.size() && w[i + 1] == -w[i])
                    throw InputError("word not freely reduced");
            }
            break;
        }
        case Family::BS12: {
            const auto& b = std::get<BsElem>(e.v);
            Dyadic canon = b.t;
            canon.normalize();
            if (!(canon == b.t)) throw InputError("dyadic not in lowest terms");
            break;
        }
        case Family::Product: {
            const auto& p = std::get<PairElem>(e.v).parts;
            if (p.size() != 2) throw InputError("pair element needs exactly 2 parts");
            check_element(g.parts[0], p[0]);
            check_element(g.parts[1], p[1]);
            break;
        }
        default:
            break;
    }
}

std::vector<Element> standard_generators(const GroupSpec& g) {
    std::vector<Element> out;
    switch (g.family) {
        case Family::Lattice:
            for (int i = 0; i < g.rank; ++i) {
                std::vector<Int> c(g.rank, Int(0));
                c[i] = 1;
                out.push_back(lattice_point(std::move(c)));
            }
            break;
        case Family::Free:
            for (int i = 1; i <= g.rank; ++i) out.push_back(word_of({i}));
            break;
        case Family::Heisenberg:
            out.push_back(heis(1, 0, 0));
            out.push_back(heis(0, 1, 0));
            break;
        case Family::BS12:
            out.push_back(bs_elem(Dyadic::from_int(1), 0)); // c
            out.push_back(bs_elem(Dyadic(), 1));            // b, with c^b = c^2
            break;
        case Family::Golden:
            out.push_back(golden_elem(1, 0, 0)); // a
            out.push_back(golden_elem(0, 0, 1)); // b, with a^{b^2} = a a^b
            break;
        case Family::Product: {
            for (const auto& l : standard_generators(g.parts[0]))
                out.push_back(pair_elem(l, identity(g.parts[1])));
            for (const auto& r : standard_generators(g.parts[1]))
                out.push_back(pair_elem(identity(g.parts[0]), r));
            break;
        }
    }
    return out;
}

std::string to_string(const GroupSpec& g, const Element& e) {
    std::ostringstream os;
    switch (g.family) {
        case Family::Lattice: {
            const auto& c = std::get<IntVec>(e.v).c;
            os << "(";
            for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
            os << ")";
            break;
        }
        case Family::Free: {
            const auto& w = std::get<Word>(e.v).letters;
            if (w.empty()) os << "1";
            for (int l : w) os << (l > 0 ? "g" : "G") << std::abs(l);
            break;
        }
        case Family::Heisenberg: {
            const auto& h = std::get<HeisTriple>(e.v);
            os << "(" << h.a << "," << h.b << "," << h.c << ")";
            break;
        }
        case Family::BS12: {
            const auto& b = std::get<BsElem>(e.v);
            os << "(" << b.t.num;
            if (b.t.k) os << "/2^" << b.t.k;
            os << "," << b.n << ")";
            break;
        }
        case Family::Golden: {
            const auto& x = std::get<GoldenElem>(e.v);
            os << "(" << x.u << "+" << x.v << "phi," << x.n << ")";
            break;
        }
        case Family::Product: {
            const auto& p = std::get<PairElem>(e.v).parts;
            os << "[" << to_string(g.parts[0], p[0]) << ";" << to_string(g.parts[1], p[1]) << "]";
            break;
        }
    }
    return os.str();
}

namespace {
void key_int(std::string& s, const Int& x) {
    std::ostringstream os;
    os << x;
    s += os.str();
    s += '|';
}
} // namespace

std::string element_key(const Element& e) {
    std::string s;
    s += static_cast<char>('0' + e.v.index());
    switch (e.v.index()) {
        case 0:
            for (const auto& x : std::get<IntVec>(e.v).c) key_int(s, x);
            break;
        case 1:
            for (int l : std::get<Word>(e.v).letters) { s += std::to_string(l); s += '|'; }
            break;
        case 2: {
            const auto& h = std::get<HeisTriple>(e.v);
            key_int(s, h.a); key_int(s, h.b); key_int(s, h.c);
            break;
        }
        case 3: {
            const auto& b = std::get<BsElem>(e.v);
            key_int(s, b.t.num); s += std::to_string(b.t.k); s += '|'; key_int(s, b.n);
            break;
        }
        case 4: {
            const auto& x = std::get<GoldenElem>(e.v);
            key_int(s, x.u); key_int(s, x.v); key_int(s, x.n);
            break;
        }
        default: {
            const auto& p = std::get<PairElem>(e.v).parts;
            s += '(';
            s += element_key(p[0]);
            s += ';';
            s += element_key(p[1]);
            s += ')';
            break;
        }
    }
    return s;
}

} // namespace ogs
