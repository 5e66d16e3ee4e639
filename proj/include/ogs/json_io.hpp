#pragma once

#include <json.hpp>

#include "ogs/forms.hpp"
#include "ogs/lattice.hpp"
#include "ogs/search.hpp"

namespace ogs {

using Json = nlohmann::json;

// Big integers serialize as JSON numbers when they fit in int64 and as
// decimal strings beyond that; parsing accepts both.
Json int_to_json(const Int&);
Int int_from_json(const Json&);

Json spec_to_json(const GroupSpec&);
GroupSpec spec_from_json(const Json&);

// Elements are arrays matching their coordinates; parsing is directed by the
// group spec. lattice [c...]; free [signed letters]; heisenberg [a,b,c];
// bs12 [[num,k],n]; golden [u,v,n]; product [left,right].
Json element_to_json(const GroupSpec&, const Element&);
Element element_from_json(const GroupSpec&, const Json&);

Json subset_to_json(const FiniteSubset&);
FiniteSubset subset_from_json(const Json&); // {"group":..., "elements":[...]}

Json square_to_json(const GroupSpec&, const SquareSet&);
Json doubling_to_json(const DoublingReport&);

Json point_to_json(const LatticePoint&);
LatticePoint point_from_json(const Json&);
std::vector<LatticePoint> points_from_json(const Json&);

Json ap_cover_to_json(const APCover&);
Json two_ap_cover_to_json(const TwoAPCover&);
Json profile_to_json(const AbelianProfile&);
Json verdict_to_json(const ClassificationVerdict&);

Json young_form_to_json(const GroupSpec&, const YoungForm&);
YoungForm young_form_from_json(const GroupSpec&, const Json&);

Json law_report_to_json(const GroupSpec&, const LawReport&);

Json ball_to_json(const BallSpec&);
BallSpec ball_from_json(const Json&);

Json task_to_json(const EnumerationTask&);
EnumerationTask task_from_json(const Json&);

// lattice subsets become plain point vectors for the abelian module
std::vector<LatticePoint> lattice_points_of(const FiniteSubset&);

} // namespace ogs
