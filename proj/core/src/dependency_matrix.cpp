#include "parcalc/dependency_matrix.hpp"

#include <algorithm>
#include <map>

namespace parcalc {

DependencyMatrix DependencyMatrix::from_rows(std::vector<std::vector<Cell>> rows) {
    DependencyMatrix m;
    m.rows_ = rows.size();
    for (const auto& row : rows) {
        m.cols_ = std::max(m.cols_, row.size());
    }
    m.cells_.reserve(m.rows_ * m.cols_);
    for (auto& row : rows) {
        row.resize(m.cols_);
        for (auto& cell : row) {
            m.cells_.push_back(std::move(cell));
        }
    }
    return m;
}

const DependencyMatrix::Cell& DependencyMatrix::cell(std::size_t row, std::size_t col) const {
    if (row >= rows_ || col >= cols_) {
        throw RowOutOfRange("cell (" + std::to_string(row) + ", " + std::to_string(col) +
                            ") outside a " + std::to_string(rows_) + "x" +
                            std::to_string(cols_) + " matrix");
    }
    return cells_[row * cols_ + col];
}

std::size_t DependencyMatrix::row_width(std::size_t row) const {
    std::size_t width = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (cell(row, c).has_value()) {
            ++width;
        }
    }
    return width;
}

std::size_t DependencyMatrix::non_empty_count() const {
    std::size_t count = 0;
    for (const auto& c : cells_) {
        if (c.has_value()) {
            ++count;
        }
    }
    return count;
}

DependencyMatrix levelize(const DependencyDag& dag) {
    const std::size_t n = dag.size();

    // Longest chain below each element, walked in prerequisite-first order.
    std::vector<std::size_t> level(n, 0);
    std::vector<std::size_t> in_degree(n, 0);
    std::vector<std::size_t> order;
    order.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        in_degree[v] = dag.prerequisite_indices(v).size();
        if (in_degree[v] == 0) {
            order.push_back(v);
        }
    }
    for (std::size_t head = 0; head < order.size(); ++head) {
        const std::size_t v = order[head];
        for (const std::size_t dep : dag.dependent_indices(v)) {
            level[dep] = std::max(level[dep], level[v] + 1);
            if (--in_degree[dep] == 0) {
                order.push_back(dep);
            }
        }
    }

    std::size_t depth = 0;
    for (std::size_t v = 0; v < n; ++v) {
        depth = std::max(depth, level[v] + 1);
    }
    std::vector<std::vector<DependencyMatrix::Cell>> rows(n == 0 ? 0 : depth);
    // Element indices are already in ascending id order, so pushing them in
    // index order keeps rows canonically sorted.
    for (std::size_t v = 0; v < n; ++v) {
        rows[level[v]].emplace_back(dag.element_at(v));
    }
    return DependencyMatrix::from_rows(std::move(rows));
}

std::size_t concurrency_degree(const DependencyMatrix& m) {
    return m.cols();
}

std::size_t dependency_degree(const DependencyMatrix& m) {
    return m.rows();
}

ValidationReport validate_dependency_matrix(const DependencyMatrix& m,
                                            const DependencyDag& dag) {
    ValidationReport report;
    auto add = [&report](std::string rule, std::string detail,
                         std::optional<std::size_t> row, std::optional<std::size_t> col) {
        report.violations.push_back({std::move(rule), std::move(detail), row, col});
    };

    std::map<ElementId, std::size_t> seen;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& cell = m.cell(r, c);
            if (!cell.has_value()) {
                continue;
            }
            if (!dag.contains(*cell)) {
                add("conservation", "cell '" + cell->value + "' is not an element of the DAG",
                    r, c);
                continue;
            }
            if (++seen[*cell] > 1) {
                add("conservation", "element '" + cell->value + "' appears more than once", r, c);
            }
        }
    }
    for (const auto& id : dag.elements()) {
        if (seen.find(id) == seen.end()) {
            add("conservation", "element '" + id.value + "' is missing from the matrix",
                std::nullopt, std::nullopt);
        }
    }

    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& cell = m.cell(r, c);
            if (!cell.has_value() || !dag.contains(*cell)) {
                continue;
            }
            // Row-independence against the cells to the right.
            for (std::size_t c2 = c + 1; c2 < m.cols(); ++c2) {
                const auto& other = m.cell(r, c2);
                if (!other.has_value() || !dag.contains(*other)) {
                    continue;
                }
                if (!is_independent(dag, *cell, *other)) {
                    add("row-independence",
                        "'" + cell->value + "' and '" + other->value +
                            "' share row " + std::to_string(r) + " but depend on each other",
                        r, c);
                }
            }
            // Row-linkage to the previous row.
            if (r >= 1) {
                bool linked = false;
                for (std::size_t pc = 0; pc < m.cols() && !linked; ++pc) {
                    const auto& prev = m.cell(r - 1, pc);
                    if (prev.has_value() && dag.contains(*prev) &&
                        dag.directly_depends_on(*cell, *prev)) {
                        linked = true;
                    }
                }
                if (!linked) {
                    add("row-linkage",
                        "'" + cell->value + "' in row " + std::to_string(r) +
                            " has no direct prerequisite in row " + std::to_string(r - 1),
                        r, c);
                }
            }
        }
    }
    return report;
}

}  // namespace parcalc
