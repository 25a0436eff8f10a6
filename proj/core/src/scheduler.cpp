#include "parcalc/scheduler.hpp"

#include <algorithm>

namespace parcalc {

namespace {

void require_processors(std::size_t processors) {
    if (processors < 1) {
        throw PreconditionError("processor count must be at least 1");
    }
}

ExecutionMatrix::Cell scheduled_cell(const Algorithm& a, const ElementId& id) {
    return ScheduledOp{id, a.operator_for(id)};
}

}  // namespace

ExecutionMatrix schedule_level_chunked(const Algorithm& a, const DependencyMatrix& m_d,
                                       std::size_t processors) {
    require_processors(processors);
    std::vector<std::vector<ExecutionMatrix::Cell>> rows;
    for (std::size_t r = 0; r < m_d.rows(); ++r) {
        std::vector<ExecutionMatrix::Cell> current;
        for (std::size_t c = 0; c < m_d.cols(); ++c) {
            const auto& cell = m_d.cell(r, c);
            if (!cell.has_value()) {
                continue;
            }
            if (current.size() == processors) {
                rows.push_back(std::move(current));
                current.clear();
            }
            current.push_back(scheduled_cell(a, *cell));
        }
        if (!current.empty()) {
            rows.push_back(std::move(current));
        }
    }
    return ExecutionMatrix::from_rows(std::move(rows), processors);
}

ExecutionMatrix schedule_greedy_list(const Algorithm& a, const DependencyDag& dag,
                                     std::size_t processors) {
    require_processors(processors);
    const std::size_t n = dag.size();
    std::vector<bool> done(n, false);
    std::vector<std::size_t> unscheduled_prereqs(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        unscheduled_prereqs[v] = dag.prerequisite_indices(v).size();
    }

    std::vector<std::vector<ExecutionMatrix::Cell>> rows;
    std::size_t remaining = n;
    while (remaining > 0) {
        // Ready set under the rows completed so far; indices ascend, which is
        // the ascending-id tie-break.
        std::vector<std::size_t> picked;
        for (std::size_t v = 0; v < n && picked.size() < processors; ++v) {
            if (!done[v] && unscheduled_prereqs[v] == 0) {
                picked.push_back(v);
            }
        }
        std::vector<ExecutionMatrix::Cell> row;
        row.reserve(picked.size());
        for (const std::size_t v : picked) {
            row.push_back(scheduled_cell(a, dag.element_at(v)));
            done[v] = true;
        }
        for (const std::size_t v : picked) {
            for (const std::size_t dep : dag.dependent_indices(v)) {
                --unscheduled_prereqs[dep];
            }
        }
        remaining -= picked.size();
        rows.push_back(std::move(row));
    }
    return ExecutionMatrix::from_rows(std::move(rows), processors);
}

ExecutionMatrix build_perfectly_parallel(const Algorithm& a, const DependencyMatrix& m_d,
                                         std::size_t n) {
    if (!is_perfectly_decomposed(m_d)) {
        throw NotPerfectlyDecomposed(
            "the dependency matrix has empty cells or a single column");
    }
    const std::size_t c_d = m_d.cols();
    if (n < 1 || n >= c_d) {
        throw PreconditionError("row multiplier must satisfy 1 <= n < " + std::to_string(c_d) +
                                ", got " + std::to_string(n));
    }
    if (c_d % n != 0) {
        throw IndivisibleError("row multiplier " + std::to_string(n) +
                               " does not divide the concurrency degree " +
                               std::to_string(c_d));
    }
    const std::size_t processors = c_d / n;
    std::vector<std::vector<ExecutionMatrix::Cell>> rows;
    rows.reserve(m_d.rows() * n);
    for (std::size_t r = 0; r < m_d.rows(); ++r) {
        for (std::size_t chunk = 0; chunk < n; ++chunk) {
            std::vector<ExecutionMatrix::Cell> row;
            row.reserve(processors);
            for (std::size_t c = chunk * processors; c < (chunk + 1) * processors; ++c) {
                row.push_back(scheduled_cell(a, *m_d.cell(r, c)));
            }
            rows.push_back(std::move(row));
        }
    }
    return ExecutionMatrix::from_rows(std::move(rows), processors);
}

}  // namespace parcalc
