#ifndef PARCALC_RENDER_HPP_
#define PARCALC_RENDER_HPP_

#include <optional>
#include <string>

#include "parcalc/execution_matrix.hpp"
#include "parcalc/metrics.hpp"
#include "parcalc/rational.hpp"

namespace parcalc {

struct RenderOptions {
    bool color = false;
    /// When set, time-valued quantities also get a wall-clock rendering with
    /// one elementary operation costing this many seconds.
    std::optional<double> tcalc_seconds;
};

/// Fixed-width ASCII grid of an execution matrix: one column per processor,
/// one line per row, subproblem ids in the cells, "." for idle slots.
std::string render_grid(const ExecutionMatrix& m);

std::string render_dependency_grid(const DependencyMatrix& m);

/// Human-readable metric table: performance metrics first, then the shape
/// parameters they derive from.
std::string render_report_table(const MetricsReport& rep, const std::string& title,
                                const RenderOptions& options);

/// {"r_e", "c_e", "class", "grid" (op ids or null), "subproblem_grid", ...}
Json matrix_to_json(const ExecutionMatrix& m);

Json report_to_json(const MetricsReport& rep, std::optional<double> tcalc_seconds);

}  // namespace parcalc

#endif  // PARCALC_RENDER_HPP_
