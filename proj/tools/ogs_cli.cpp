// Command-line surface: every subcommand reads JSON (stdin or --input),
// writes a certificate envelope to stdout, and exits 0 on success, 1 when a
// counterexample was found, 2 on usage or input errors, 3 when a comparison
// or ball cap was hit.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ogs/certificate.hpp"

namespace {

using ogs::Json;

Json read_input(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw ogs::InputError("cannot open input file " + path);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const std::exception& e) {
        throw ogs::InputError(std::string("malformed JSON: ") + e.what());
    }
}

int emit_certificate(const std::string& command, const Json& group, const Json& input,
                     uint64_t seed, int workers) {
    auto result = ogs::execute_command(command, group, input, seed, workers);
    auto cert = ogs::make_certificate(command, group, input, seed, result);
    Json envelope{{"certificate", ogs::certificate_to_json(cert)},
                  {"runtime_ms", result.runtime_ms}};
    std::cout << envelope.dump(2) << "\n";
    return result.exit_code;
}

int run_enumerate(const Json& corpus, int workers) {
    std::vector<Json> tasks;
    if (corpus.contains("tasks"))
        for (const auto& t : corpus.at("tasks")) tasks.push_back(t);
    else if (corpus.contains("task")) tasks.push_back(corpus.at("task"));
    else throw ogs::InputError("enumerate corpus needs \"task\" or \"tasks\"");

    for (const auto& tj : tasks) {
        ogs::EnumerationTask task = ogs::task_from_json(tj);
        auto elems = ogs::ball(task.ball);
        auto ctx = ogs::make_universe(task.ball.spec, std::move(elems));
        Json header{{"task", ogs::task_to_json(task)},
                    {"ball_size", ctx.n}};
        std::cout << header.dump() << "\n";
        ogs::enumerate_subsets(ctx, task.k, task.alpha, task.beta, task.normalize, workers,
                               [&](const std::vector<int32_t>& idx) {
                                   Json arr = Json::array();
                                   for (int32_t i : idx)
                                       arr.push_back(
                                           ogs::element_to_json(ctx.spec, ctx.elems[i]));
                                   std::cout << Json{{"elements", arr}}.dump() << "\n";
                               });
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact small-doubling structure in ordered groups"};
    app.require_subcommand(1);

    std::string input_path;
    uint64_t seed = 0;
    int workers = 1;

    auto add_common = [&](CLI::App* cmd, bool with_seed = false) {
        cmd->add_option("--input,-i", input_path, "input file (default: stdin)");
        if (with_seed) cmd->add_option("--seed", seed, "RNG seed (default 0)");
    };

    auto* sq = app.add_subcommand("square", "square set and doubling report of a set");
    add_common(sq);

    auto* cl = app.add_subcommand("classify", "abelian small-doubling classification");
    std::string mode = "3k3";
    int ck_c = 0;
    cl->add_option("--mode", mode, "3k3 | 3k2 | ck")->required();
    cl->add_option("--c", ck_c, "generator bound for mode ck");
    add_common(cl);

    auto* dm = app.add_subcommand("dim", "rank, Freiman dimension and bounds");
    add_common(dm);

    auto* mt = app.add_subcommand("match", "young normal-form matching (triple or extension)");
    add_common(mt);

    auto* cn = app.add_subcommand("construct", "k-element set with |S^2| = 4k-5 in Z x F2");
    int construct_k = 3;
    cn->add_option("--k", construct_k, "set size")->required();

    auto* en = app.add_subcommand("enumerate", "stream small-doubling subsets of a ball");
    std::string corpus_path;
    en->add_option("corpus", corpus_path, "corpus JSON file")->required();
    en->add_option("--parallel", workers, "worker count");

    auto* vf = app.add_subcommand("verify", "run a theorem verification corpus");
    std::string theorem;
    std::string verify_corpus;
    vf->add_option("--theorem", theorem, "theorem id")->required();
    vf->add_option("corpus", verify_corpus, "corpus JSON file");
    vf->add_option("--parallel", workers, "worker count");
    vf->add_option("--seed", seed, "RNG seed override");

    auto* lw = app.add_subcommand("laws", "group-law checking over sampled words");
    std::string law = "metabelian";
    int radius = 6;
    long long samples = 10000;
    lw->add_option("--law", law, "metabelian | class2 | abelian");
    lw->add_option("--radius", radius, "max word length");
    lw->add_option("--samples", samples, "sampled tuples");
    add_common(lw, true);

    auto* vd = app.add_subcommand("validate", "recheck a certificate offline");
    add_common(vd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sq->parsed()) {
            Json in = read_input(input_path);
            return emit_certificate("square", in.at("group"),
                                    Json{{"elements", in.at("elements")}}, seed, workers);
        }
        if (cl->parsed()) {
            Json in = read_input(input_path);
            Json input{{"elements", in.at("elements")}, {"mode", mode}};
            if (ck_c) input["c"] = ck_c;
            return emit_certificate("classify", in.at("group"), input, seed, workers);
        }
        if (dm->parsed()) {
            Json in = read_input(input_path);
            return emit_certificate("dim", in.at("group"), Json{{"elements", in.at("elements")}},
                                    seed, workers);
        }
        if (mt->parsed()) {
            Json in = read_input(input_path);
            return emit_certificate("match", in.at("group"),
                                    Json{{"elements", in.at("elements")}}, seed, workers);
        }
        if (cn->parsed()) {
            return emit_certificate("construct", Json(), Json{{"k", construct_k}}, seed, workers);
        }
        if (en->parsed()) {
            return run_enumerate(read_input(corpus_path), ogs::worker_count_override(workers));
        }
        if (vf->parsed()) {
            Json corpus =
                verify_corpus.empty() ? Json{{"theorem", theorem}} : read_input(verify_corpus);
            corpus["theorem"] = theorem;
            if (vf->count("--seed")) corpus["seed"] = seed;
            return emit_certificate("verify", Json(), corpus, corpus.value("seed", 0ULL),
                                    workers);
        }
        if (lw->parsed()) {
            Json in = read_input(input_path);
            Json input{{"generators", in.at("generators")},
                       {"law", law},
                       {"radius", radius},
                       {"samples", samples}};
            return emit_certificate("laws", in.at("group"), input, seed, workers);
        }
        if (vd->parsed()) {
            Json in = read_input(input_path);
            if (in.contains("certificate")) in = in.at("certificate");
            auto cert = ogs::certificate_from_json(in);
            bool ok = ogs::validate_certificate(cert);
            std::cout << Json{{"valid", ok}}.dump(2) << "\n";
            return ok ? 0 : 1;
        }
    } catch (const ogs::UndecidedOrderError& e) {
        std::cerr << "undecided: " << e.what() << "\n";
        return 3;
    } catch (const ogs::CapError& e) {
        std::cerr << "cap: " << e.what() << "\n";
        return 3;
    } catch (const ogs::CounterexampleError& e) {
        std::cerr << "counterexample: " << e.what() << " " << e.payload << "\n";
        return 1;
    } catch (const ogs::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
