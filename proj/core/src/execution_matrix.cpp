#include "parcalc/execution_matrix.hpp"

#include <algorithm>
#include <map>

namespace parcalc {

ExecutionMatrix ExecutionMatrix::from_rows(std::vector<std::vector<Cell>> rows,
                                           std::size_t min_cols) {
    ExecutionMatrix m;
    m.rows_ = rows.size();
    m.cols_ = min_cols;
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

const ExecutionMatrix::Cell& ExecutionMatrix::cell(std::size_t row, std::size_t col) const {
    if (row >= rows_ || col >= cols_) {
        throw RowOutOfRange("cell (" + std::to_string(row) + ", " + std::to_string(col) +
                            ") outside a " + std::to_string(rows_) + "x" +
                            std::to_string(cols_) + " matrix");
    }
    return cells_[row * cols_ + col];
}

std::size_t ExecutionMatrix::row_width(std::size_t row) const {
    std::size_t width = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (cell(row, c).has_value()) {
            ++width;
        }
    }
    return width;
}

std::size_t ExecutionMatrix::non_empty_count() const {
    std::size_t count = 0;
    for (const auto& c : cells_) {
        if (c.has_value()) {
            ++count;
        }
    }
    return count;
}

std::size_t ExecutionMatrix::empty_in_row(std::size_t row) const {
    return cols_ - row_width(row);
}

std::string to_string(MatrixClass c) {
    switch (c) {
        case MatrixClass::PerfectlyParallel:
            return "perfectly-parallel";
        case MatrixClass::Sequential:
            return "sequential";
        case MatrixClass::Parallel:
            return "parallel";
    }
    return "unknown";
}

MatrixClass classify(const ExecutionMatrix& m) {
    if (m.cols() == 0) {
        throw PreconditionError("cannot classify a matrix with no columns");
    }
    if (m.cols() == 1) {
        return MatrixClass::Sequential;
    }
    if (m.non_empty_count() == m.rows() * m.cols()) {
        return MatrixClass::PerfectlyParallel;
    }
    return MatrixClass::Parallel;
}

RowProfile row_profile(const ExecutionMatrix& m) {
    RowProfile profile;
    profile.r_e = m.rows();
    profile.c_e = m.cols();
    profile.r_par.assign(m.cols() + 1, 0);
    profile.empties_per_row.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const std::size_t width = m.row_width(r);
        ++profile.r_par[width];
        const std::size_t empty = m.cols() - width;
        profile.empties_per_row.push_back(empty);
        profile.sparsity += empty;
    }
    profile.r_seq = m.cols() >= 1 ? profile.r_par[1] : 0;
    return profile;
}

ValidationReport validate_execution_matrix(const ExecutionMatrix& m,
                                           const DependencyDag& dag) {
    ValidationReport report;
    auto add = [&report](std::string rule, std::string detail,
                         std::optional<std::size_t> row, std::optional<std::size_t> col) {
        report.violations.push_back({std::move(rule), std::move(detail), row, col});
    };

    std::map<ElementId, std::size_t> scheduled_row;
    std::map<ElementId, std::size_t> seen;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& cell = m.cell(r, c);
            if (!cell.has_value()) {
                continue;
            }
            if (!dag.contains(cell->subproblem)) {
                add("conservation",
                    "cell '" + cell->subproblem.value + "' is not an element of the DAG", r, c);
                continue;
            }
            if (++seen[cell->subproblem] > 1) {
                add("conservation",
                    "element '" + cell->subproblem.value + "' is scheduled more than once", r,
                    c);
            } else {
                scheduled_row[cell->subproblem] = r;
            }
        }
    }
    for (const auto& id : dag.elements()) {
        if (seen.find(id) == seen.end()) {
            add("conservation", "element '" + id.value + "' is never scheduled", std::nullopt,
                std::nullopt);
        }
    }

    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& cell = m.cell(r, c);
            if (!cell.has_value() || !dag.contains(cell->subproblem)) {
                continue;
            }
            for (const auto& prereq : dag.prerequisites_of(cell->subproblem)) {
                const auto it = scheduled_row.find(prereq);
                if (it == scheduled_row.end()) {
                    continue;  // already reported as a conservation violation
                }
                if (it->second >= r) {
                    add("dependency-safety",
                        "'" + cell->subproblem.value + "' in row " + std::to_string(r) +
                            " needs '" + prereq.value + "', scheduled in row " +
                            std::to_string(it->second),
                        r, c);
                }
            }
        }
    }
    return report;
}

ExecutionMatrix sequentialize(const ExecutionMatrix& m) {
    std::vector<std::vector<ExecutionMatrix::Cell>> rows;
    rows.reserve(m.non_empty_count());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& cell = m.cell(r, c);
            if (cell.has_value()) {
                rows.push_back({cell});
            }
        }
    }
    return ExecutionMatrix::from_rows(std::move(rows), 1);
}

}  // namespace parcalc
