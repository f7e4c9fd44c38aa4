#include "dwidth/report.hpp"

#include <algorithm>
#include <map>

#include "dwidth/certificates.hpp"
#include "dwidth/exact_odw.hpp"

namespace dwidth {

using nlohmann::json;

namespace {

const char* const kOdw = "odw";
const char* const kGlc = "glc";
const char* const kMcw = "mcw";
const char* const kBottleneck = "bottleneck";
const char* const kAd = "ad";

int ceil_div(int a, int b) { return a <= 0 ? 0 : (a + b - 1) / b; }

void raise_to(Bound& bound, int value, const char* source) {
    if (value > bound.value) {
        bound = {value, source};
    }
}

void lower_to(Bound& bound, int value, const char* source) {
    if (value < bound.value) {
        bound = {value, source};
    }
}

json rational_json(const Rational& r) {
    if (r.den() == 1) {
        return r.num();
    }
    return r.to_double();
}

}  // namespace

bool WidthReport::all_checks_hold() const {
    return std::ranges::all_of(checks, [](const Check& c) { return c.holds; });
}

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names = {
        "odw_interval_nonempty",
        "expanded_inner_diameter_le_2D",
        "odw_minus_1_le_glc",
        "glc_interval_nonempty",
        "layering_witness_load_ge_D_minus_1",
        "glc_le_3_odw",
        "glc_ge_2_delta",
        "odw_le_4_delta_plus_3",
        "bottleneck_cycle_load_eq_2_delta",
        "mcw_le_odw",
        "odw_minus_3_over_6_le_mcw",
        "embedding_distortion_le_6k",
    };
    return names;
}

WidthReport width_report(const Graph& g, const ReportOptions& options) {
    require_connected(g, "width_report");
    const int n = g.vertex_count();
    if (!options.sweep_roots && (options.root < 0 || options.root >= n)) {
        throw PreconditionError("root " + std::to_string(options.root) + " is not a vertex");
    }

    WidthReport report;
    report.vertex_count = n;
    report.edge_count = g.edge_count();
    const DistanceMatrix dist = all_pairs_distances(g);

    // Layering: decomposition of outer diameter D and a witness of load >= D - 1.
    LayeringRun layer_run;
    std::optional<LayeringWitness> layer_witness;
    if (options.sweep_roots) {
        RootSweep sweep = sweep_roots(g, dist);
        layer_run = sweep.runs[sweep.best_decomposition];
        layer_witness = sweep.runs[sweep.best_witness].witness;
    } else {
        layer_run = run_layering(g, dist, options.root);
        layer_witness = layer_run.witness;
    }
    const int D = layer_run.outer_diameter;
    report.layering_witness = layer_witness;

    std::optional<ExactOdw> exact;
    if (n <= options.exact_odw_limit) {
        exact = exact_odw(g, std::min(options.exact_odw_limit, kMaxExactOdwLimit));
    }

    std::optional<GlcResult> glc_oracle;
    if (n <= options.glc_vertex_limit) {
        glc_oracle = brute_force_glc(g, options.glc_limits);
    }
    const bool acyclic = report.edge_count == n - 1;
    const bool glc_known = acyclic || (glc_oracle && glc_oracle->complete);

    if (n <= options.bottleneck_vertex_limit) {
        report.bottleneck = bottleneck_constant(g);
        if (report.bottleneck->witness) {
            report.bottleneck_cycle =
                bottleneck_witness_to_cycle(g, report.bottleneck->delta, *report.bottleneck->witness);
        }
    }
    if (n <= options.mccarty_vertex_limit) {
        report.mccarty = mccarty_width(g);
    }

    // glc lower bound: the heaviest certified loaded cycle.
    Bound& glc_lo = report.glc.lower;
    glc_lo = {0, acyclic ? "acyclic" : "empty_load"};
    auto offer_cycle = [&](const LoadedCycle& lc, const char* source) {
        if (lc.load() > glc_lo.value) {
            glc_lo = {lc.load(), source};
            report.loaded_cycle = lc;
        }
    };
    if (layer_witness) {
        offer_cycle(layer_witness->cycle, "layering_witness");
    }
    if (report.bottleneck_cycle) {
        offer_cycle(*report.bottleneck_cycle, "bottleneck_cycle");
    }
    if (glc_oracle && glc_oracle->witness) {
        offer_cycle(*glc_oracle->witness, glc_oracle->complete ? "glc_oracle" : "glc_oracle_partial");
    }

    // odw upper bound before glc: layering, then the exact oracle.
    Bound& odw_hi = report.odw.upper;
    odw_hi = {D, "layering"};
    report.decomposition = layer_run.decomposition;
    if (exact && exact->width <= D) {
        odw_hi = {exact->width, "exact_odw"};
        report.decomposition = exact->decomposition;
    }

    Bound& glc_hi = report.glc.upper;
    glc_hi = {3 * odw_hi.value, "3*odw_upper"};
    if (glc_known) {
        glc_hi = {glc_lo.value, acyclic ? "acyclic" : "glc_oracle"};
        if (!acyclic) {
            glc_lo.source = "glc_oracle";
        }
        lower_to(odw_hi, glc_hi.value + 1, "glc+1");
    }

    Bound& odw_lo = report.odw.lower;
    odw_lo = {0, "empty_graph"};
    raise_to(odw_lo, report.edge_count > 0 ? 1 : 0, "has_edge");
    raise_to(odw_lo, ceil_div(glc_lo.value, 3), "ceil(glc_lower/3)");
    if (exact) {
        odw_lo = {exact->width, "exact_odw"};
    }

    report.ad_lower = std::max(Rational(0), Rational(odw_lo.value - 1, 2));
    report.ad_upper = 6 * odw_hi.value;

    const int k = outer_diameter(dist, report.decomposition).hops();
    report.embedding = decomposition_to_embedding(g, report.decomposition);
    report.embedding_distortion = additive_distortion(g, report.embedding);

    auto& checks = report.checks;
    auto check = [&](const char* parameter, const char* name, const Rational& lhs, const Rational& rhs,
                     bool extra = true) {
        checks.push_back({parameter, name, extra && lhs <= rhs, lhs, rhs});
    };

    check(kOdw, "odw_interval_nonempty", odw_lo.value, odw_hi.value);
    {
        const TreeDecomposition expanded = expand_bags(g, layer_run.decomposition, D);
        check(kOdw, "expanded_inner_diameter_le_2D", distance_operand(inner_diameter(g, expanded)), 2 * D);
    }
    check(kOdw, "odw_minus_1_le_glc", odw_lo.value - 1, glc_hi.value);

    check(kGlc, "glc_interval_nonempty", glc_lo.value, glc_hi.value);
    {
        const int load = layer_witness ? layer_witness->cycle.load() : 0;
        const bool geodesic = !layer_witness || !is_geodesic_loaded(g, dist, layer_witness->cycle);
        check(kGlc, "layering_witness_load_ge_D_minus_1", D - 1, load, geodesic);
    }
    check(kGlc, "glc_le_3_odw", glc_lo.value, 3 * odw_hi.value);

    if (report.bottleneck) {
        const int delta = report.bottleneck->delta;
        check(kBottleneck, "glc_ge_2_delta", 2 * delta, glc_hi.value);
        check(kBottleneck, "odw_le_4_delta_plus_3", odw_lo.value, 4 * delta + 3);
        const int load = report.bottleneck_cycle ? report.bottleneck_cycle->load() : 0;
        const bool verified = !report.bottleneck_cycle || !is_geodesic_loaded(g, dist, *report.bottleneck_cycle);
        check(kBottleneck, "bottleneck_cycle_load_eq_2_delta", 2 * delta, load, verified && load == 2 * delta);
    }
    if (report.mccarty) {
        const int mcw = report.mccarty->width;
        check(kMcw, "mcw_le_odw", mcw, odw_hi.value);
        check(kMcw, "odw_minus_3_over_6_le_mcw", Rational(odw_lo.value - 3, 6), mcw);
    }
    check(kAd, "embedding_distortion_le_6k", report.embedding_distortion, 6 * k);
    return report;
}

void select_checks(WidthReport& report, const std::vector<std::string>& names) {
    for (const auto& name : names) {
        if (std::ranges::find(check_names(), name) == check_names().end()) {
            throw PreconditionError("unknown check: " + name);
        }
    }
    std::erase_if(report.checks,
                  [&](const Check& c) { return std::ranges::find(names, c.name) == names.end(); });
}

json to_json(const Check& c) {
    return {{"name", c.name}, {"holds", c.holds}, {"lhs", rational_json(c.lhs)}, {"rhs", rational_json(c.rhs)}};
}

json to_json(const WidthReport& report) {
    std::map<std::string, json> check_lists;
    for (const auto& c : report.checks) {
        check_lists[c.parameter].push_back(to_json(c));
    }
    auto checks_for = [&](const char* parameter) {
        const auto it = check_lists.find(parameter);
        return it == check_lists.end() ? json::array() : it->second;
    };
    auto interval_json = [](const Interval& iv) {
        json out = {{"interval", {iv.lower.value, iv.upper.value}},
                    {"lower_source", iv.lower.source},
                    {"upper_source", iv.upper.source}};
        if (iv.exact()) {
            out["value"] = iv.lower.value;
        }
        return out;
    };

    json out;
    out["graph"] = {{"n", report.vertex_count}, {"m", report.edge_count}};

    out[kOdw] = interval_json(report.odw);
    out[kOdw]["witness_ref"] = "decomposition";
    out[kOdw]["checks"] = checks_for(kOdw);

    out[kGlc] = interval_json(report.glc);
    out[kGlc]["witness_ref"] = report.loaded_cycle ? json("loaded_cycle") : json(nullptr);
    out[kGlc]["checks"] = checks_for(kGlc);

    if (report.mccarty) {
        out[kMcw] = {{"value", report.mccarty->width},
                     {"witness_ref", report.mccarty->worst_triple ? json("mccarty_triple") : json(nullptr)},
                     {"checks", checks_for(kMcw)}};
    } else {
        out[kMcw] = {{"value", nullptr}, {"skipped", "vertex limit"}, {"witness_ref", nullptr}, {"checks", json::array()}};
    }

    if (report.bottleneck) {
        out[kBottleneck] = {{"value", report.bottleneck->delta},
                            {"witness_ref", report.bottleneck_cycle ? json("bottleneck_cycle") : json(nullptr)},
                            {"checks", checks_for(kBottleneck)}};
    } else {
        out[kBottleneck] = {
            {"value", nullptr}, {"skipped", "vertex limit"}, {"witness_ref", nullptr}, {"checks", json::array()}};
    }

    out[kAd] = {{"interval", {rational_json(report.ad_lower), report.ad_upper}},
                {"embedding_distortion", report.embedding_distortion},
                {"witness_ref", "embedding"},
                {"checks", checks_for(kAd)}};

    json witnesses;
    witnesses["decomposition"] = to_json(report.decomposition);
    witnesses["embedding"] = to_json(report.embedding);
    if (report.loaded_cycle) {
        witnesses["loaded_cycle"] = to_json(*report.loaded_cycle);
    }
    if (report.layering_witness) {
        witnesses["layering_witness"] = to_json(*report.layering_witness);
    }
    if (report.bottleneck_cycle) {
        json b = to_json(*report.bottleneck_cycle);
        const auto& w = *report.bottleneck->witness;
        b["triple"] = {w.u, w.v, w.w};
        witnesses["bottleneck_cycle"] = b;
    }
    if (report.mccarty && report.mccarty->worst_triple) {
        witnesses["mccarty_triple"] = {{"triple", *report.mccarty->worst_triple},
                                       {"center", report.mccarty->center}};
    }
    out["witnesses"] = witnesses;
    out["all_checks_hold"] = report.all_checks_hold();
    return out;
}

}  // namespace dwidth
