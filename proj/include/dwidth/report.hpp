#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dwidth/cycle_search.hpp"
#include "dwidth/decomposition.hpp"
#include "dwidth/embedding.hpp"
#include "dwidth/layering.hpp"
#include "dwidth/loaded_cycle.hpp"
#include "dwidth/metric_params.hpp"
#include "dwidth/rational.hpp"

namespace dwidth {

struct ReportOptions {
    bool sweep_roots = false;
    Vertex root = 0;
    int exact_odw_limit = 8;        // run exact_odw when n <= this
    int glc_vertex_limit = 10;      // run brute_force_glc when n <= this
    CycleLimits glc_limits{};
    int bottleneck_vertex_limit = 60;
    int mccarty_vertex_limit = 40;
};

/// One end of an interval and the operation that produced it.
struct Bound {
    int value = 0;
    std::string source;
};

struct Interval {
    Bound lower;
    Bound upper;
    bool exact() const { return lower.value == upper.value; }
};

/// lhs <= rhs, evaluated; `parameter` says which report entry it belongs to.
struct Check {
    std::string parameter;
    std::string name;
    bool holds = true;
    Rational lhs;
    Rational rhs;
};

/// Check operand for a distance; an infinite one becomes a value no bound admits.
inline Rational distance_operand(const Distance& d) {
    return d.is_finite() ? Rational(d.hops()) : Rational(std::numeric_limits<std::int32_t>::max());
}

struct WidthReport {
    int vertex_count = 0;
    int edge_count = 0;

    Interval odw;
    Interval glc;
    std::optional<Bottleneck> bottleneck;     // empty above the vertex limit
    std::optional<McCartyWidth> mccarty;      // empty above the vertex limit
    Rational ad_lower;
    int ad_upper = 0;

    TreeDecomposition decomposition;          // attains odw.upper
    std::optional<LoadedCycle> loaded_cycle;  // attains glc.lower, if positive
    std::optional<LayeringWitness> layering_witness;
    std::optional<LoadedCycle> bottleneck_cycle;
    TreeEmbedding embedding;
    int embedding_distortion = 0;

    std::vector<Check> checks;

    bool all_checks_hold() const;
};

WidthReport width_report(const Graph& g, const ReportOptions& options = {});

/// Keeps only checks whose name is listed; every listed name must exist.
void select_checks(WidthReport& report, const std::vector<std::string>& names);

/// Names of every check width_report can emit.
const std::vector<std::string>& check_names();

nlohmann::json to_json(const Check& check);
nlohmann::json to_json(const WidthReport& report);

}  // namespace dwidth
