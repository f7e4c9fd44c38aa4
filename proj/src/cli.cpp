#include "dwidth/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dwidth/certificates.hpp"
#include "dwidth/chordal.hpp"
#include "dwidth/cycle_search.hpp"
#include "dwidth/decomposition.hpp"
#include "dwidth/edge_list.hpp"
#include "dwidth/embedding.hpp"
#include "dwidth/generators.hpp"
#include "dwidth/layering.hpp"
#include "dwidth/metric_params.hpp"
#include "dwidth/report.hpp"

namespace dwidth::cli {

using nlohmann::json;

namespace {

struct Settings {
    std::string graph_file;
    std::string family;
    int n = 0;
    int k = 0;
    int h = 0;
    double p = 0.3;
    std::uint64_t seed = 1;
    int root = 0;
    bool sweep = false;
    std::uint64_t max_cycles = 1'000'000;
    std::uint64_t max_trees = 10'000'000;
    int exact_limit = kDefaultExactLimit;
    std::string out;
    std::vector<std::string> checks;
    std::string L;
    std::string C;
    std::string decomposition_file;
    std::string loaded_cycle_file;
    std::string embedding_file;

    static constexpr int kDefaultExactLimit = 8;
};

// Thrown for a failed certificate check in `verify`.
struct Rejected {
    json body;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw PreconditionError("cannot read " + path);
    }
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

json read_json(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw PreconditionError(path + ": malformed JSON: " + e.what());
    }
}

// A certificate may be given bare or inside the output of another command.
json find_certificate(const json& doc, const char* marker, std::initializer_list<const char*> keys) {
    if (doc.is_object() && doc.contains(marker)) {
        return doc;
    }
    for (const json* scope : {&doc, doc.contains("witnesses") ? &doc.at("witnesses") : nullptr}) {
        if (scope == nullptr || !scope->is_object()) {
            continue;
        }
        for (const char* key : keys) {
            if (scope->contains(key) && scope->at(key).is_object() && scope->at(key).contains(marker)) {
                return scope->at(key);
            }
        }
    }
    throw PreconditionError(std::string("no certificate with a \"") + marker + "\" field");
}

Graph load_graph(const Settings& s) {
    const bool from_file = !s.graph_file.empty();
    const bool from_family = !s.family.empty();
    if (from_file == from_family) {
        throw PreconditionError("give exactly one of --graph or --family");
    }
    if (from_file) {
        std::ifstream in(s.graph_file);
        if (!in) {
            throw PreconditionError("cannot read " + s.graph_file);
        }
        return parse_graph(in);
    }
    const int size = s.k > 0 ? s.k : s.n;
    if (s.family == "lattice" || s.family == "triangular") {
        return make_triangular_lattice(size).graph;
    }
    if (s.family == "farey") {
        return make_farey(size).graph;
    }
    if (s.family == "random") {
        return make_random_connected(size, s.p, s.seed);
    }
    return make_family(s.family, size, s.h);
}

Rational rational_option(const std::string& text, const char* name) {
    if (text.empty()) {
        throw PreconditionError(std::string("--") + name + " is required");
    }
    return Rational::parse(text);
}

json checks_json(const std::vector<Check>& checks) {
    json out = json::array();
    for (const auto& c : checks) {
        out.push_back(to_json(c));
    }
    return out;
}

bool all_hold(const std::vector<Check>& checks) {
    return std::ranges::all_of(checks, [](const Check& c) { return c.holds; });
}

Check make_check(const char* name, const Rational& lhs, const Rational& rhs, bool extra = true) {
    return {"", name, extra && lhs <= rhs, lhs, rhs};
}

struct Outcome {
    json body;
    std::string text;  // used instead of body when non-empty
    int code = kExitOk;
};

LayeringRun chosen_layering(const Graph& g, const DistanceMatrix& dist, const Settings& s,
                            std::optional<LayeringWitness>& witness) {
    if (s.sweep) {
        RootSweep sweep = sweep_roots(g, dist);
        witness = sweep.runs[sweep.best_witness].witness;
        return sweep.runs[sweep.best_decomposition];
    }
    if (s.root < 0 || s.root >= g.vertex_count()) {
        throw PreconditionError("root " + std::to_string(s.root) + " is not a vertex");
    }
    LayeringRun run = run_layering(g, dist, s.root);
    witness = run.witness;
    return run;
}

Outcome cmd_gen(const Settings& s) {
    return {{}, serialize_graph(load_graph(s))};
}

Outcome cmd_report(const Settings& s) {
    const Graph g = load_graph(s);
    ReportOptions options;
    options.sweep_roots = s.sweep;
    options.root = s.root;
    options.exact_odw_limit = s.exact_limit;
    options.glc_limits.max_cycles = s.max_cycles;
    WidthReport report = width_report(g, options);
    if (!s.checks.empty()) {
        select_checks(report, s.checks);
    }
    return {to_json(report), {}, report.all_checks_hold() ? kExitOk : kExitCheckFailed};
}

Outcome cmd_layering(const Settings& s) {
    const Graph g = load_graph(s);
    require_connected(g, "layering");
    const DistanceMatrix dist = all_pairs_distances(g);
    std::optional<LayeringWitness> witness;
    const LayeringRun run = chosen_layering(g, dist, s, witness);
    const int D = run.outer_diameter;

    std::vector<Check> checks;
    const int load = witness ? witness->cycle.load() : 0;
    const bool geodesic = !witness || !is_geodesic_loaded(g, dist, witness->cycle);
    checks.push_back(make_check("layering_witness_load_ge_D_minus_1", D - 1, load, geodesic));
    checks.push_back(make_check("expanded_inner_diameter_le_2D",
                                distance_operand(inner_diameter(g, expand_bags(g, run.decomposition, D))), 2 * D));

    json body = {{"root", run.root},
                 {"outer_diameter", D},
                 {"spread", run.spread},
                 {"decomposition", to_json(run.decomposition)},
                 {"witness", witness ? to_json(*witness) : json(nullptr)},
                 {"checks", checks_json(checks)}};
    return {body, {}, all_hold(checks) ? kExitOk : kExitCheckFailed};
}

Outcome cmd_glc(const Settings& s) {
    const Graph g = load_graph(s);
    require_connected(g, "glc");
    const GlcResult r = brute_force_glc(g, {.max_length = 0, .max_cycles = s.max_cycles});
    json body = {{"value", r.value},
                 {"complete", r.complete},
                 {"cycles_examined", r.cycles_examined},
                 {"witness", r.witness ? to_json(*r.witness) : json(nullptr)}};
    return {body, {}, kExitOk};
}

Outcome cmd_embed(const Settings& s) {
    const Graph g = load_graph(s);
    require_connected(g, "embed");
    if (!s.embedding_file.empty()) {
        const TreeEmbedding emb = embedding_from_json(find_certificate(read_json(s.embedding_file), "phi", {"embedding"}));
        const Rational L = rational_option(s.L, "L");
        const Rational C = rational_option(s.C, "C");
        const TreeDecomposition td = embedding_to_decomposition(g, emb, L, C);
        const Distance outer = outer_diameter(g, td);
        const Rational bound = L * (L + C + 1) + C;
        std::vector<Check> checks{
            make_check("outer_diameter_le_L(L+C+1)+C", distance_operand(outer), bound, !validate(g, td))};
        json body = {{"decomposition", to_json(td)},
                     {"outer_diameter", outer.to_string()},
                     {"checks", checks_json(checks)}};
        return {body, {}, all_hold(checks) ? kExitOk : kExitCheckFailed};
    }

    TreeDecomposition td;
    if (!s.decomposition_file.empty()) {
        td = decomposition_from_json(
            find_certificate(read_json(s.decomposition_file), "bags", {"decomposition"}));
        require_valid(g, td);
    } else {
        const DistanceMatrix dist = all_pairs_distances(g);
        std::optional<LayeringWitness> unused;
        td = chosen_layering(g, dist, s, unused).decomposition;
    }
    const int k = outer_diameter(g, td).hops();
    const TreeEmbedding emb = decomposition_to_embedding(g, td);
    const int distortion = additive_distortion(g, emb);
    std::vector<Check> checks{make_check("embedding_distortion_le_6k", distortion, 6 * k)};
    json body = {{"width", k},
                 {"embedding", to_json(emb)},
                 {"distortion", distortion},
                 {"checks", checks_json(checks)}};
    return {body, {}, all_hold(checks) ? kExitOk : kExitCheckFailed};
}

Outcome cmd_verify(const Settings& s) {
    const Graph g = load_graph(s);
    const int given = static_cast<int>(!s.decomposition_file.empty()) + static_cast<int>(!s.loaded_cycle_file.empty()) +
                      static_cast<int>(!s.embedding_file.empty());
    if (given != 1) {
        throw PreconditionError("give exactly one of --decomposition, --loaded-cycle or --embedding");
    }

    if (!s.decomposition_file.empty()) {
        const TreeDecomposition td =
            decomposition_from_json(find_certificate(read_json(s.decomposition_file), "bags", {"decomposition"}));
        if (const auto v = validate(g, td)) {
            throw Rejected{{{"ok", false}, {"certificate", "decomposition"}, {"violation", v->message},
                            {"witness", v->witness}}};
        }
        json body = {{"ok", true}, {"certificate", "decomposition"}};
        if (is_connected(g)) {
            body["outer_diameter"] = outer_diameter(g, td).to_string();
            body["inner_diameter"] = inner_diameter(g, td).to_string();
        }
        return {body, {}, kExitOk};
    }

    if (!s.loaded_cycle_file.empty()) {
        const LoadedCycle lc = loaded_cycle_from_json(find_certificate(
            read_json(s.loaded_cycle_file), "cycle",
            {"loaded_cycle", "witness", "layering_witness", "bottleneck_cycle"}));
        require_cycle_in(g, lc);
        if (const auto v = is_geodesic_loaded(g, lc)) {
            throw Rejected{{{"ok", false},
                            {"certificate", "loaded_cycle"},
                            {"violating_pair", {v->u, v->v}},
                            {"graph_distance", v->graph_distance.to_string()},
                            {"cycle_distance", v->cycle_distance}}};
        }
        return {{{"ok", true}, {"certificate", "loaded_cycle"}, {"load", lc.load()}}, {}, kExitOk};
    }

    const TreeEmbedding emb =
        embedding_from_json(find_certificate(read_json(s.embedding_file), "phi", {"embedding"}));
    require_embedding(g, emb);
    require_connected(g, "verify --embedding");
    json body = {{"ok", true}, {"certificate", "embedding"}, {"distortion", additive_distortion(g, emb)}};
    if (!s.L.empty() || !s.C.empty()) {
        const Rational L = rational_option(s.L, "L");
        const Rational C = rational_option(s.C, "C");
        if (const auto v = check_quasi_isometry(g, emb, L, C)) {
            throw Rejected{{{"ok", false}, {"certificate", "embedding"}, {"violation", v->message}}};
        }
        body["L"] = L.to_string();
        body["C"] = C.to_string();
    }
    return {body, {}, kExitOk};
}

Outcome cmd_params(const Settings& s) {
    const Graph g = load_graph(s);
    require_connected(g, "params");
    const Bottleneck b = bottleneck_constant(g);
    const McCartyWidth m = mccarty_width(g);

    std::vector<Check> checks;
    json bottleneck = {{"value", b.delta}};
    if (b.witness) {
        const LoadedCycle lc = bottleneck_witness_to_cycle(g, b.delta, *b.witness);
        bottleneck["triple"] = {b.witness->u, b.witness->v, b.witness->w};
        bottleneck["avoiding_path"] = b.witness->avoiding_path;
        bottleneck["loaded_cycle"] = to_json(lc);
        checks.push_back(make_check("bottleneck_cycle_load_eq_2_delta", 2 * b.delta, lc.load(),
                                    lc.load() == 2 * b.delta && !is_geodesic_loaded(g, lc)));
    }
    json mcw = {{"value", m.width}};
    if (m.worst_triple) {
        mcw["triple"] = *m.worst_triple;
        mcw["center"] = m.center;
    }
    json body = {{"bottleneck", bottleneck}, {"mcw", mcw}, {"checks", checks_json(checks)}};
    return {body, {}, all_hold(checks) ? kExitOk : kExitCheckFailed};
}

Outcome cmd_distortion(const Settings& s) {
    const Graph g = load_graph(s);
    require_connected(g, "distortion");
    const CycleDistortionSearch r = min_cycle_distortion(g, s.max_trees);
    const TreeDecomposition td = tree_ball_decomposition(g, r.best_tree, r.value);
    std::vector<Check> checks{
        make_check("tree_ball_inner_diameter_le_2d", distance_operand(inner_diameter(g, td)), 2 * r.value, !validate(g, td))};
    json tree = json::array();
    for (const auto& [a, b] : r.best_tree) {
        tree.push_back({a, b});
    }
    json body = {{"value", r.value},
                 {"complete", r.complete},
                 {"trees_examined", r.trees_examined},
                 {"tree", tree},
                 {"decomposition", to_json(td)},
                 {"checks", checks_json(checks)}};
    return {body, {}, all_hold(checks) ? kExitOk : kExitCheckFailed};
}

void add_input(CLI::App* cmd, Settings& s) {
    cmd->add_option("--graph", s.graph_file, "edge-list file");
    cmd->add_option("--family", s.family, "cycle | path | complete | grid | lattice | farey | random");
    cmd->add_option("--n", s.n, "family size")->check(CLI::NonNegativeNumber);
    cmd->add_option("--k", s.k, "family depth (alias of --n)")->check(CLI::NonNegativeNumber);
    cmd->add_option("--height", s.h, "grid height (default: square)")->check(CLI::NonNegativeNumber);
    cmd->add_option("--p", s.p, "random: extra edge probability")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--seed", s.seed, "random: seed");
    cmd->add_option("--out", s.out, "write output here instead of stdout");
}

void add_layering(CLI::App* cmd, Settings& s) {
    cmd->add_option("--root", s.root, "layering root");
    cmd->add_flag("--sweep-roots", s.sweep, "try every root");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Settings s;
    CLI::App app{"Diameter-width certificates for finite graphs", "dwidth"};
    app.require_subcommand(1);

    std::function<Outcome(const Settings&)> action;
    auto sub = [&](const char* name, const char* help, Outcome (*fn)(const Settings&)) {
        CLI::App* cmd = app.add_subcommand(name, help);
        add_input(cmd, s);
        cmd->callback([&action, fn] { action = fn; });
        return cmd;
    };

    sub("gen", "print a generated graph as an edge list", cmd_gen);

    CLI::App* report = sub("report", "width report with bounds, witnesses and checks", cmd_report);
    add_layering(report, s);
    report->add_option("--max-cycles", s.max_cycles, "cycle cap for the glc oracle")->check(CLI::PositiveNumber);
    report->add_option("--exact-limit", s.exact_limit, "largest n for the exact odw oracle")
        ->check(CLI::Range(0, 22));
    report->add_option("--checks", s.checks, "comma-separated checks to keep")->delimiter(',');

    add_layering(sub("layering", "BFS layering decomposition and loaded-cycle witness", cmd_layering), s);

    sub("glc", "exhaustive geodesic loaded cycle search", cmd_glc)
        ->add_option("--max-cycles", s.max_cycles, "cycle cap")
        ->check(CLI::PositiveNumber);

    CLI::App* embed = sub("embed", "decomposition to tree embedding, or back with --embedding", cmd_embed);
    add_layering(embed, s);
    embed->add_option("--decomposition", s.decomposition_file, "decomposition JSON");
    embed->add_option("--embedding", s.embedding_file, "embedding JSON");
    embed->add_option("--L", s.L, "multiplicative constant");
    embed->add_option("--C", s.C, "additive constant");

    CLI::App* verify = sub("verify", "check a certificate against a graph", cmd_verify);
    verify->add_option("--decomposition", s.decomposition_file, "decomposition JSON");
    verify->add_option("--loaded-cycle", s.loaded_cycle_file, "loaded cycle JSON");
    verify->add_option("--embedding", s.embedding_file, "embedding JSON");
    verify->add_option("--L", s.L, "multiplicative constant");
    verify->add_option("--C", s.C, "additive constant");

    sub("params", "bottleneck constant and McCarty-width", cmd_params);

    sub("distortion", "least cycle-distortion over spanning trees", cmd_distortion)
        ->add_option("--max-trees", s.max_trees, "spanning tree cap")
        ->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    Outcome outcome;
    try {
        outcome = action(s);
    } catch (const Rejected& r) {
        outcome = {r.body, {}, kExitInputError};
    } catch (const InvariantViolation& e) {
        err << "dwidth: internal check failed: " << e.what() << '\n';
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        err << "dwidth: " << e.what() << '\n';
        return kExitInputError;
    }

    const std::string text = outcome.text.empty() ? outcome.body.dump(2) + "\n" : outcome.text;
    if (s.out.empty()) {
        out << text;
    } else {
        std::ofstream file(s.out);
        if (!file || !(file << text)) {
            err << "dwidth: cannot write " << s.out << '\n';
            return kExitInputError;
        }
    }
    return outcome.code;
}

}  // namespace dwidth::cli
