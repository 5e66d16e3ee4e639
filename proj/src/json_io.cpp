#include "ogs/json_io.hpp"

#include <sstream>

namespace ogs {

Json int_to_json(const Int& x) {
    if (fits_int64(x)) return x.convert_to<long long>();
    std::ostringstream os;
    os << x;
    return os.str();
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw InputError("expected integer (number or decimal string)");
}

Json spec_to_json(const GroupSpec& g) {
    Json j;
    j["family"] = family_name(g.family);
    switch (g.family) {
        case Family::Lattice:
            j["rank"] = g.rank;
            break;
        case Family::Free:
            j["rank"] = g.rank;
            j["magnus_initial_degree"] = g.magnus_initial_degree;
            j["magnus_max_degree"] = g.magnus_max_degree;
            break;
        case Family::Product:
            j["left"] = spec_to_json(g.parts[0]);
            j["right"] = spec_to_json(g.parts[1]);
            break;
        default:
            break;
    }
    return j;
}

GroupSpec spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("family"))
        throw InputError("group spec needs a \"family\" field");
    std::string fam = j.at("family").get<std::string>();
    GroupSpec g;
    if (fam == "lattice") {
        g = GroupSpec::lattice(j.value("rank", 1));
    } else if (fam == "free") {
        g = GroupSpec::free_group(j.value("rank", 2), j.value("magnus_initial_degree", 4),
                                  j.value("magnus_max_degree", 64));
    } else if (fam == "heisenberg") {
        g = GroupSpec::heisenberg();
    } else if (fam == "bs12") {
        g = GroupSpec::bs12();
    } else if (fam == "golden") {
        g = GroupSpec::golden();
    } else if (fam == "product") {
        g = GroupSpec::product(spec_from_json(j.at("left")), spec_from_json(j.at("right")));
    } else {
        throw InputError("unknown group family \"" + fam + "\"");
    }
    validate_spec(g);
    return g;
}

Json element_to_json(const GroupSpec& g, const Element& e) {
    Json j = Json::array();
    switch (g.family) {
        case Family::Lattice:
            for (const auto& x : std::get<IntVec>(e.v).c) j.push_back(int_to_json(x));
            break;
        case Family::Free:
            for (int l : std::get<Word>(e.v).letters) j.push_back(l);
            break;
        case Family::Heisenberg: {
            const auto& h = std::get<HeisTriple>(e.v);
            j.push_back(int_to_json(h.a));
            j.push_back(int_to_json(h.b));
            j.push_back(int_to_json(h.c));
            break;
        }
        case Family::BS12: {
            const auto& b = std::get<BsElem>(e.v);
            j.push_back(Json::array({int_to_json(b.t.num), b.t.k}));
            j.push_back(int_to_json(b.n));
            break;
        }
        case Family::Golden: {
            const auto& x = std::get<GoldenElem>(e.v);
            j.push_back(int_to_json(x.u));
            j.push_back(int_to_json(x.v));
            j.push_back(int_to_json(x.n));
            break;
        }
        case Family::Product: {
            const auto& p = std::get<PairElem>(e.v).parts;
            j.push_back(element_to_json(g.parts[0], p[0]));
            j.push_back(element_to_json(g.parts[1], p[1]));
            break;
        }
    }
    return j;
}

Element element_from_json(const GroupSpec& g, const Json& j) {
    if (!j.is_array()) throw InputError("element must be a JSON array");
    Element e;
    switch (g.family) {
        case Family::Lattice: {
            std::vector<Int> c;
            for (const auto& x : j) c.push_back(int_from_json(x));
            e = lattice_point(std::move(c));
            break;
        }
        case Family::Free: {
            std::vector<int> letters;
            for (const auto& x : j) letters.push_back(x.get<int>());
            e = word_of(std::move(letters));
            break;
        }
        case Family::Heisenberg:
            if (j.size() != 3) throw InputError("heisenberg element is [a,b,c]");
            e = heis(int_from_json(j[0]), int_from_json(j[1]), int_from_json(j[2]));
            break;
        case Family::BS12: {
            if (j.size() != 2 || !j[0].is_array() || j[0].size() != 2)
                throw InputError("bs12 element is [[num,k],n]");
            Dyadic t(int_from_json(j[0][0]), j[0][1].get<unsigned>());
            e = bs_elem(std::move(t), int_from_json(j[1]));
            break;
        }
        case Family::Golden:
            if (j.size() != 3) throw InputError("golden element is [u,v,n]");
            e = golden_elem(int_from_json(j[0]), int_from_json(j[1]), int_from_json(j[2]));
            break;
        case Family::Product: {
            if (j.size() != 2) throw InputError("product element is [left,right]");
            e = pair_elem(element_from_json(g.parts[0], j[0]),
                          element_from_json(g.parts[1], j[1]));
            break;
        }
    }
    check_element(g, e);
    return e;
}

Json subset_to_json(const FiniteSubset& s) {
    Json j;
    j["group"] = spec_to_json(s.spec);
    Json arr = Json::array();
    for (const auto& e : s.elems) arr.push_back(element_to_json(s.spec, e));
    j["elements"] = arr;
    return j;
}

FiniteSubset subset_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("group") || !j.contains("elements"))
        throw InputError("set input needs {\"group\":..., \"elements\":[...]}");
    GroupSpec g = spec_from_json(j.at("group"));
    std::vector<Element> elems;
    for (const auto& e : j.at("elements")) elems.push_back(element_from_json(g, e));
    return make_subset(g, std::move(elems));
}

Json square_to_json(const GroupSpec& g, const SquareSet& s) {
    Json values = Json::array();
    for (const auto& v : s.values) values.push_back(element_to_json(g, v));
    Json wits = Json::array();
    for (const auto& lst : s.witnesses) {
        Json w = Json::array();
        for (const auto& [i, j] : lst) w.push_back(Json::array({i, j}));
        wits.push_back(w);
    }
    return Json{{"values", values}, {"witnesses", wits}};
}

Json doubling_to_json(const DoublingReport& r) {
    return Json{{"k", r.k},
                {"square_size", r.square_size},
                {"deficit_3k3", r.deficit_3k3},
                {"b_excess", r.b_excess},
                {"s_excess", r.s_excess}};
}

Json point_to_json(const LatticePoint& p) {
    Json j = Json::array();
    for (const auto& x : p) j.push_back(int_to_json(x));
    return j;
}

LatticePoint point_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("lattice point must be an array");
    LatticePoint p;
    for (const auto& x : j) p.push_back(int_from_json(x));
    return p;
}

std::vector<LatticePoint> points_from_json(const Json& j) {
    std::vector<LatticePoint> pts;
    for (const auto& x : j) pts.push_back(point_from_json(x));
    return pts;
}

Json ap_cover_to_json(const APCover& c) {
    return Json{{"base", point_to_json(c.base)},
                {"ratio", point_to_json(c.ratio)},
                {"length", c.length},
                {"positions", c.positions}};
}

Json two_ap_cover_to_json(const TwoAPCover& c) {
    return Json{{"first", ap_cover_to_json(c.first)},
                {"second", ap_cover_to_json(c.second)},
                {"shared_ratio", point_to_json(c.shared_ratio)},
                {"membership", c.membership}};
}

Json profile_to_json(const AbelianProfile& p) {
    return Json{{"k", p.k},
                {"rank_m", p.rank_m},
                {"freiman_d", p.freiman_d},
                {"square_size", p.square_size}};
}

Json verdict_to_json(const ClassificationVerdict& v) {
    Json j{{"branch", v.branch},
           {"k", v.k},
           {"square_size", v.square_size},
           {"rank_m", v.rank_m},
           {"rank_bound", v.rank_bound},
           {"rank_ok", v.rank_ok}};
    if (!v.note.empty()) j["note"] = v.note;
    if (v.ap) j["ap"] = ap_cover_to_json(*v.ap);
    if (v.two_ap) j["two_ap"] = two_ap_cover_to_json(*v.two_ap);
    return j;
}

Json young_form_to_json(const GroupSpec& g, const YoungForm& f) {
    Json w;
    for (const auto& [sym, e] : f.witnesses) w[sym] = element_to_json(g, e);
    Json j{{"kind", form_name(f.kind)}, {"witnesses", w}};
    if (f.inverted) j["inverted"] = true;
    return j;
}

YoungForm young_form_from_json(const GroupSpec& g, const Json& j) {
    auto kind = form_from_name(j.at("kind").get<std::string>());
    if (!kind) throw InputError("unknown young form kind");
    YoungForm f{*kind, {}, j.value("inverted", false)};
    for (const auto& [sym, e] : j.at("witnesses").items())
        f.witnesses[sym] = element_from_json(g, e);
    return f;
}

Json law_report_to_json(const GroupSpec& g, const LawReport& r) {
    Json j{{"law", law_name(r.law)},
           {"samples_checked", r.samples_checked},
           {"radius", r.radius},
           {"holds", r.holds},
           {"exhaustive_len2", r.exhaustive_len2}};
    if (r.first_violation) {
        Json v = Json::array();
        for (const auto& e : *r.first_violation) v.push_back(element_to_json(g, e));
        j["first_violation"] = v;
    } else {
        j["first_violation"] = nullptr;
    }
    return j;
}

Json ball_to_json(const BallSpec& b) {
    Json gens = Json::array();
    for (const auto& e : b.generators) gens.push_back(element_to_json(b.spec, e));
    return Json{{"group", spec_to_json(b.spec)},
                {"generators", gens},
                {"radius", b.radius},
                {"cap", b.cap}};
}

BallSpec ball_from_json(const Json& j) {
    BallSpec b;
    b.spec = spec_from_json(j.at("group"));
    for (const auto& e : j.at("generators"))
        b.generators.push_back(element_from_json(b.spec, e));
    b.radius = j.value("radius", 1);
    b.cap = j.value("cap", 100000LL);
    return b;
}

namespace {

std::string normalize_name(Normalize n) {
    switch (n) {
        case Normalize::None: return "none";
        case Normalize::TranslateMin: return "translate_min";
        case Normalize::TranslatePrimitive: return "translate_primitive";
    }
    return "?";
}

Normalize normalize_from_name(const std::string& s) {
    if (s == "none") return Normalize::None;
    if (s == "translate_min") return Normalize::TranslateMin;
    if (s == "translate_primitive") return Normalize::TranslatePrimitive;
    throw InputError("unknown normalization \"" + s + "\"");
}

} // namespace

Json task_to_json(const EnumerationTask& t) {
    return Json{{"ball", ball_to_json(t.ball)},
                {"k", t.k},
                {"alpha", Json::array({t.alpha.num, t.alpha.den})},
                {"beta", t.beta},
                {"normalize", normalize_name(t.normalize)}};
}

EnumerationTask task_from_json(const Json& j) {
    EnumerationTask t;
    t.ball = ball_from_json(j.at("ball"));
    t.k = j.at("k").get<int>();
    const auto& a = j.at("alpha");
    if (a.is_number_integer()) t.alpha = {a.get<long long>(), 1};
    else t.alpha = {a[0].get<long long>(), a[1].get<long long>()};
    t.beta = j.at("beta").get<long long>();
    t.normalize = normalize_from_name(j.value("normalize", "none"));
    return t;
}

std::vector<LatticePoint> lattice_points_of(const FiniteSubset& s) {
    if (s.spec.family != Family::Lattice)
        throw InputError("expected a lattice-family set");
    std::vector<LatticePoint> pts;
    for (const auto& e : s.elems) pts.push_back(std::get<IntVec>(e.v).c);
    return pts;
}

} // namespace ogs
