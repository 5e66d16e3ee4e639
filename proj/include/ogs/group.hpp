#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ogs/errors.hpp"
#include "ogs/ints.hpp"

namespace ogs {

enum class Family { Lattice, Free, Heisenberg, BS12, Golden, Product };

// Descriptor of one concrete ordered group family plus its parameters.
// Each family carries exactly one bi-invariant order (see compare below),
// so a GroupSpec identifies both the group and the order used.
struct GroupSpec {
    Family family = Family::Lattice;
    int rank = 1;                 // lattice dimension m / free rank n
    int magnus_initial_degree = 4;
    int magnus_max_degree = 64;
    std::vector<GroupSpec> parts; // Product: exactly {left, right}

    static GroupSpec lattice(int m) {
        GroupSpec s; s.family = Family::Lattice; s.rank = m; return s;
    }
    static GroupSpec free_group(int n, int init_deg = 4, int max_deg = 64) {
        GroupSpec s; s.family = Family::Free; s.rank = n;
        s.magnus_initial_degree = init_deg; s.magnus_max_degree = max_deg; return s;
    }
    static GroupSpec heisenberg() { GroupSpec s; s.family = Family::Heisenberg; return s; }
    static GroupSpec bs12() { GroupSpec s; s.family = Family::BS12; return s; }
    static GroupSpec golden() { GroupSpec s; s.family = Family::Golden; return s; }
    static GroupSpec product(GroupSpec left, GroupSpec right) {
        GroupSpec s; s.family = Family::Product;
        s.parts.push_back(std::move(left)); s.parts.push_back(std::move(right));
        return s;
    }

    bool operator==(const GroupSpec&) const = default;
};

// rank >= 1, degree bounds ordered, product arity 2 and nesting depth <= 4
void validate_spec(const GroupSpec&);

struct Element;

struct IntVec {
    std::vector<Int> c;
    bool operator==(const IntVec&) const = default;
};
// Freely reduced word; letters are signed 1-based generator indices.
struct Word {
    std::vector<int> letters;
    bool operator==(const Word&) const = default;
};
struct HeisTriple {
    Int a, b, c;
    bool operator==(const HeisTriple&) const = default;
};
struct BsElem {
    Dyadic t; Int n;
    bool operator==(const BsElem&) const = default;
};
// u + v*phi in Z[phi], phi^2 = phi + 1, at height n.
struct GoldenElem {
    Int u, v, n;
    bool operator==(const GoldenElem&) const = default;
};
struct PairElem {
    std::vector<Element> parts; // exactly 2
    bool operator==(const PairElem&) const;
};

// Tagged exact-arithmetic representative. Values are immutable in use:
// every operation is a pure function, safe under concurrency.
struct Element {
    std::variant<IntVec, Word, HeisTriple, BsElem, GoldenElem, PairElem> v;
    bool operator==(const Element&) const = default;
};

enum class Ord { LT, EQ, GT };

Element identity(const GroupSpec&);
bool is_identity(const GroupSpec&, const Element&);
Element multiply(const GroupSpec&, const Element&, const Element&);
Element invert(const GroupSpec&, const Element&);
Element power(const GroupSpec&, const Element&, long long e);
Ord compare(const GroupSpec&, const Element&, const Element&);

// [a, b] = a^{-1} b^{-1} a b
Element commutator(const GroupSpec&, const Element& a, const Element& b);
// a^b = b^{-1} a b
Element conjugate(const GroupSpec&, const Element& a, const Element& b);
bool commutes(const GroupSpec&, const Element&, const Element&);

inline bool less(const GroupSpec& g, const Element& a, const Element& b) {
    return compare(g, a, b) == Ord::LT;
}

// Deep structural validation (family tag, lattice length, reducedness,
// dyadic normal form). Used at parse/IO boundaries; the arithmetic ops
// only check the variant tag.
void check_element(const GroupSpec&, const Element&);

Element lattice_point(std::vector<Int> coords);
Element word_of(std::vector<int> letters); // freely reduces
Element heis(Int a, Int b, Int c);
Element bs_elem(Dyadic t, Int n);
Element golden_elem(Int u, Int v, Int n);
Element pair_elem(Element left, Element right);

// Group generators in a fixed conventional order:
// lattice: unit vectors; free: g_1..g_n; Heisenberg: a, b;
// BS(1,2): c=(1,0), b=(0,1); Golden: a=(1,0,0), b=(0,0,1);
// product: left generators paired with id, then id paired with right generators.
std::vector<Element> standard_generators(const GroupSpec&);

std::string to_string(const GroupSpec&, const Element&);
std::string family_name(Family);

// stable byte encoding, usable as a hash/set key
std::string element_key(const Element&);

} // namespace ogs
