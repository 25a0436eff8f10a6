#ifndef PARCALC_EXECUTION_MATRIX_HPP_
#define PARCALC_EXECUTION_MATRIX_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "parcalc/algorithm.hpp"
#include "parcalc/dependency_matrix.hpp"

namespace parcalc {

/// One scheduled operator instance: the subproblem it solves plus the
/// operator that solves it.
struct ScheduledOp {
    ElementId subproblem;
    Operator op;

    friend bool operator==(const ScheduledOp&, const ScheduledOp&) = default;
};

/// The mapping of an algorithm onto P processors over time. Columns are
/// processors (c_E = P), rows are synchronous steps: a row completes before
/// the next one starts. Empty cells are idle slots.
class ExecutionMatrix {
public:
    using Cell = std::optional<ScheduledOp>;

    /// Builds from ragged rows, padding every row to `min_cols` or the widest
    /// row, whichever is larger.
    static ExecutionMatrix from_rows(std::vector<std::vector<Cell>> rows,
                                     std::size_t min_cols = 0);

    /// r_E.
    std::size_t rows() const { return rows_; }
    /// c_E, the processor count.
    std::size_t cols() const { return cols_; }

    const Cell& cell(std::size_t row, std::size_t col) const;

    std::size_t row_width(std::size_t row) const;
    /// k, the number of scheduled operator instances.
    std::size_t non_empty_count() const;
    /// V_r, the number of idle slots in one row.
    std::size_t empty_in_row(std::size_t row) const;

    friend bool operator==(const ExecutionMatrix&, const ExecutionMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Cell> cells_;  // row-major
};

enum class MatrixClass {
    PerfectlyParallel,  // c_E > 1, no empty cell
    Sequential,         // c_E = 1
    Parallel            // c_E > 1, some empty cell
};

std::string to_string(MatrixClass c);

MatrixClass classify(const ExecutionMatrix& m);

/// Row-shape summary of an execution matrix.
struct RowProfile {
    std::size_t r_e = 0;
    std::size_t c_e = 0;
    /// Rows with exactly one operator.
    std::size_t r_seq = 0;
    /// r_par[i] = rows with exactly i operators, for i in [1, c_E]. Index 0
    /// counts degenerate all-empty rows, which schedulers never emit.
    std::vector<std::size_t> r_par;
    /// V_r per row.
    std::vector<std::size_t> empties_per_row;
    /// Sparsity degree: total idle slots, sum of V_r.
    std::size_t sparsity = 0;
};

RowProfile row_profile(const ExecutionMatrix& m);

/// Checks an arbitrary grid against the execution-matrix rules:
///   dependency-safety : a prerequisite must sit in a strictly earlier row
///   conservation      : every DAG element is scheduled in exactly one cell
/// Empty report iff both hold.
ValidationReport validate_execution_matrix(const ExecutionMatrix& m,
                                           const DependencyDag& dag);

/// The canonical single-processor form: one column, operators in row-major
/// order of `m` (topological by construction, ids ascending within a row).
ExecutionMatrix sequentialize(const ExecutionMatrix& m);

}  // namespace parcalc

#endif  // PARCALC_EXECUTION_MATRIX_HPP_
