#include "ogs/certificate.hpp"

#include <chrono>

namespace ogs {

namespace {

FiniteSubset subset_of(const Json& group, const Json& input) {
    Json j{{"group", group}, {"elements", input.at("elements")}};
    return subset_from_json(j);
}

CommandResult cmd_square(const Json& group, const Json& input) {
    CommandResult r;
    auto s = subset_of(group, input);
    auto rep = doubling_report(s);
    auto sq = square(s);
    r.verdict = doubling_to_json(rep);
    r.witness = Json{{"set", subset_to_json(s)["elements"]},
                     {"square", square_to_json(s.spec, sq)}};
    return r;
}

CommandResult cmd_classify(const Json& group, const Json& input) {
    CommandResult r;
    auto s = subset_of(group, input);
    std::string mode = input.value("mode", "3k3");
    int c = input.value("c", 0);
    ClassifyMode m;
    if (mode == "3k3") m = ClassifyMode::Thm3k3;
    else if (mode == "3k2") m = ClassifyMode::Thm3k2;
    else if (mode == "ck") m = ClassifyMode::ThmCk;
    else throw InputError("classify mode must be 3k3 | 3k2 | ck");
    auto v = classify_abelian(lattice_points_of(s), m, c);
    r.verdict = verdict_to_json(v);
    r.exit_code = v.branch == "counterexample" ? 1 : 0;
    return r;
}

CommandResult cmd_dim(const Json& group, const Json& input) {
    CommandResult r;
    auto s = subset_of(group, input);
    r.verdict = profile_to_json(abelian_profile(lattice_points_of(s)));
    return r;
}

CommandResult cmd_match(const Json& group, const Json& input) {
    CommandResult r;
    auto s = subset_of(group, input);
    std::optional<YoungForm> f =
        s.size() == 3 ? match_triple_form(s.spec, s) : match_extension_form(s.spec, s);
    if (f) {
        r.verdict = Json{{"matched", true},
                         {"kind", form_name(f->kind)},
                         {"mode", s.size() == 3 ? "triple" : "extension"},
                         {"revalidates", revalidate_form(s.spec, s, *f)}};
        r.witness = young_form_to_json(s.spec, *f);
    } else {
        r.verdict = Json{{"matched", false},
                         {"kind", nullptr},
                         {"mode", s.size() == 3 ? "triple" : "extension"}};
        r.exit_code = 1;
    }
    return r;
}

CommandResult cmd_construct(const Json& input) {
    CommandResult r;
    int k = input.at("k").get<int>();
    auto s = construct_4k5(k);
    int sq = square_size(s);
    auto pb = partition_square(s, false);
    bool partition_ok = pb.is_disjoint && pb.t_square.size() == 2 * k - 3 &&
                        static_cast<int>(pb.cross.size()) == 2 * k - 3;
    r.verdict = Json{{"k", k},
                     {"square_size", sq},
                     {"expected", 4 * k - 5},
                     {"partition_ok", partition_ok}};
    r.witness = subset_to_json(s);
    r.exit_code = (sq == 4 * k - 5 && partition_ok) ? 0 : 1;
    return r;
}

CommandResult cmd_laws(const Json& group, const Json& input, uint64_t seed) {
    CommandResult r;
    GroupSpec g = spec_from_json(group);
    std::vector<Element> gens;
    for (const auto& e : input.at("generators")) gens.push_back(element_from_json(g, e));
    auto law = law_from_name(input.at("law").get<std::string>());
    if (!law) throw InputError("law must be metabelian | class2 | abelian");
    int radius = input.value("radius", 6);
    long long samples = input.value("samples", 10000LL);
    auto rep = law_check(g, gens, *law, radius, samples, seed);
    r.verdict = law_report_to_json(g, rep);
    r.evidence_level = rep.holds ? "sampled" : "exact";
    if (rep.first_violation) {
        Json v = Json::array();
        for (const auto& e : *rep.first_violation) v.push_back(element_to_json(g, e));
        r.witness = v;
    }
    r.exit_code = rep.holds ? 0 : 1;
    return r;
}

CommandResult cmd_verify(const Json& input, uint64_t seed, int workers) {
    CommandResult r;
    Json params = input;
    if (!params.contains("seed")) params["seed"] = seed;
    TheoremId id = theorem_from_name(params.at("theorem").get<std::string>());
    auto rep = verify(id, params, workers);
    r.verdict = report_body_to_json(rep);
    r.counterexamples = rep.counterexamples;
    r.evidence_level = "sampled"; // pipelines mix exact sweeps and seeded sampling
    r.runtime_ms = rep.runtime_ms;
    r.exit_code = rep.verified() ? 0 : 1;
    return r;
}

} // namespace

CommandResult execute_command(const std::string& command, const Json& group, const Json& input,
                              uint64_t seed, int workers) {
    auto start = std::chrono::steady_clock::now();
    CommandResult r;
    if (command == "square") r = cmd_square(group, input);
    else if (command == "classify") r = cmd_classify(group, input);
    else if (command == "dim") r = cmd_dim(group, input);
    else if (command == "match") r = cmd_match(group, input);
    else if (command == "construct") r = cmd_construct(input);
    else if (command == "laws") r = cmd_laws(group, input, seed);
    else if (command == "verify") r = cmd_verify(input, seed, workers);
    else throw InputError("unknown command \"" + command + "\"");
    if (r.runtime_ms == 0)
        r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    return r;
}

Json certificate_to_json(const Certificate& c) {
    return Json{{"version", c.version},
                {"command", c.command},
                {"group", c.group},
                {"input", c.input},
                {"verdict", c.verdict},
                {"witness", c.witness},
                {"evidence_level", c.evidence_level},
                {"seed", c.seed},
                {"counterexamples", c.counterexamples}};
}

Certificate certificate_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("certificate must be a JSON object");
    Certificate c;
    c.version = j.value("version", "");
    if (c.version != "1") throw InputError("unsupported certificate version \"" + c.version + "\"");
    c.command = j.at("command").get<std::string>();
    c.group = j.value("group", Json());
    c.input = j.value("input", Json());
    c.verdict = j.value("verdict", Json());
    c.witness = j.value("witness", Json());
    c.evidence_level = j.value("evidence_level", "exact");
    c.seed = j.value("seed", 0ULL);
    c.counterexamples = j.value("counterexamples", Json::array());
    return c;
}

Certificate make_certificate(const std::string& command, const Json& group, const Json& input,
                             uint64_t seed, const CommandResult& r) {
    Certificate c;
    c.command = command;
    c.group = group;
    c.input = input;
    c.verdict = r.verdict;
    c.witness = r.witness;
    c.evidence_level = r.evidence_level;
    c.seed = seed;
    c.counterexamples = r.counterexamples;
    return c;
}

bool validate_certificate(const Certificate& c) {
    CommandResult r;
    try {
        r = execute_command(c.command, c.group, c.input, c.seed);
    } catch (const std::exception&) {
        return false;
    }
    return r.verdict == c.verdict && r.witness == c.witness &&
           r.counterexamples == c.counterexamples && r.evidence_level == c.evidence_level;
}

} // namespace ogs
