#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ogs/subset.hpp"

namespace ogs {

enum class FormKind {
    TypeI, TypeII, TypeIII, TypeIV,
    Central3, Conjugate3,
    P5a, P5b, P5c,
    P6a, P6b, P6c,
};

std::string form_name(FormKind);
std::optional<FormKind> form_from_name(const std::string&);

// Matched normal form with named witnesses. `inverted` distinguishes the
// x^{-1} variants of P5a/P5b; the relations are identical, only the set
// equation changes.
struct YoungForm {
    FormKind kind;
    std::map<std::string, Element> witnesses;
    bool inverted = false;
};

// Triples with |S^2| = 7 and a non-commuting pair. Tries, in fixed order:
// Central3, Conjugate3, P5a, P5b, P5c (direct before inverted variants),
// elements in ascending group order. Returns the first full match (set
// equation plus all side relations).
std::optional<YoungForm> match_triple_form(const GroupSpec&, const FiniteSubset&);

// Sets of size >= 4 with |S^2| = 3|S|-2 of the shape {a, ac, ..., ac^{k-2}, y}
// with commuting a, c; matches cases P6a / P6b / P6c (the latter two only at
// |S| = 4).
std::optional<YoungForm> match_extension_form(const GroupSpec&, const FiniteSubset&);

// Defining relations of the claimed kind, evaluated exactly.
bool check_young_relations(const GroupSpec&, FormKind, const std::map<std::string, Element>& witnesses);

// Set equation plus relations; what certificates re-run.
bool revalidate_form(const GroupSpec&, const FiniteSubset&, const YoungForm&);

enum class GroupLaw { Metabelian, Class2, Abelian };

std::string law_name(GroupLaw);
std::optional<GroupLaw> law_from_name(const std::string&);

struct LawReport {
    GroupLaw law;
    long long samples_checked = 0;
    int radius = 0;
    bool holds = true;
    std::optional<std::vector<Element>> first_violation;
    bool exhaustive_len2 = false; // short-word sweep ran (it is skipped when infeasible)
};

// holds = true is sampling evidence (seeded, reported as such in
// certificates); holds = false is a proof with a violation witness.
// Words of length <= 2 are swept exhaustively when the tuple count is
// feasible; then sample_count seeded tuples of words of length <= radius.
LawReport law_check(const GroupSpec&, const std::vector<Element>& generators, GroupLaw,
                    int radius, long long sample_count, uint64_t seed);

// Breadth-first search over products of generators and inverses up to the
// given length. A witness word is a sequence of signed 1-based indices into
// `generators`. absent != non-membership.
std::optional<std::vector<int>> bounded_membership(const GroupSpec&, const Element& x,
                                                   const std::vector<Element>& generators,
                                                   int radius);

} // namespace ogs
