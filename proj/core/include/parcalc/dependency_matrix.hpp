#ifndef PARCALC_DEPENDENCY_MATRIX_HPP_
#define PARCALC_DEPENDENCY_MATRIX_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "parcalc/dag.hpp"

namespace parcalc {

/// Rectangular grid of optional elements describing a dependency structure
/// level by level. Within a row every pair of elements is independent; every
/// element of row i >= 1 directly depends on at least one element of row
/// i - 1. Rows are right-padded with empty cells to a common width.
///
/// The column count is the concurrency degree (maximum number of
/// simultaneously executable elements); the row count is the dependency
/// degree (a lower bound, in rows, on execution length).
class DependencyMatrix {
public:
    using Cell = std::optional<ElementId>;

    /// Builds from ragged rows; pads every row to the widest one.
    static DependencyMatrix from_rows(std::vector<std::vector<Cell>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Cell& cell(std::size_t row, std::size_t col) const;

    /// Number of non-empty cells in one row.
    std::size_t row_width(std::size_t row) const;
    std::size_t non_empty_count() const;

    friend bool operator==(const DependencyMatrix&, const DependencyMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Cell> cells_;  // row-major
};

/// One rule violation found by a matrix validator.
struct Violation {
    std::string rule;
    std::string detail;
    std::optional<std::size_t> row;
    std::optional<std::size_t> col;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Constructs the dependency matrix of a DAG by longest-chain levelization.
///
/// The row of an element is the length of the longest dependency chain below
/// it (elements without prerequisites sit in row 0). This is the unique row
/// assignment for which every element of row i has a direct prerequisite in
/// row i - 1. Within a row, cells are ordered by ascending id, the canonical
/// tie-break; the matrix is otherwise unique up to within-row permutations.
DependencyMatrix levelize(const DependencyDag& dag);

/// Column count c_D.
std::size_t concurrency_degree(const DependencyMatrix& m);
/// Row count r_D.
std::size_t dependency_degree(const DependencyMatrix& m);

/// Checks an arbitrary grid against the dependency-matrix rules:
///   row-independence : two cells of one row must not depend on each other
///   row-linkage      : a cell of row i >= 1 needs a direct prerequisite in row i - 1
///   conservation     : every DAG element appears in exactly one cell
/// Returns every violated (row, cell) with the violated rule; an empty report
/// means the grid is a valid dependency matrix of `dag`.
ValidationReport validate_dependency_matrix(const DependencyMatrix& m,
                                            const DependencyDag& dag);

}  // namespace parcalc

#endif  // PARCALC_DEPENDENCY_MATRIX_HPP_
