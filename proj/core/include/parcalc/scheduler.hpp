#ifndef PARCALC_SCHEDULER_HPP_
#define PARCALC_SCHEDULER_HPP_

#include <cstddef>

#include "parcalc/execution_matrix.hpp"

namespace parcalc {

/// Maps an algorithm onto P processors level by level: each dependency-matrix
/// row of width w becomes ceil(w / P) execution rows, filled left to right in
/// canonical cell order. Dependency safety follows from the level structure.
/// The column count is always P; unused slots stay empty.
ExecutionMatrix schedule_level_chunked(const Algorithm& a, const DependencyMatrix& m_d,
                                       std::size_t processors);

/// Row-synchronous greedy list scheduling: each new row takes up to P
/// operators whose prerequisites are all scheduled in earlier rows, ascending
/// id first. An alternative mapping within the same algorithm class; its row
/// count is never below the dependency degree.
ExecutionMatrix schedule_greedy_list(const Algorithm& a, const DependencyDag& dag,
                                     std::size_t processors);

/// Reshapes a perfectly decomposed matrix into an execution matrix with zero
/// empty cells on P = c_D / n processors: every dependency row splits into n
/// full rows, so r_E = n * r_D. With n = 1 the execution matrix has exactly
/// the structure of the dependency matrix.
/// Throws NotPerfectlyDecomposed, IndivisibleError (c_D mod n != 0) or
/// PreconditionError (n outside [1, c_D)).
ExecutionMatrix build_perfectly_parallel(const Algorithm& a, const DependencyMatrix& m_d,
                                         std::size_t n);

}  // namespace parcalc

#endif  // PARCALC_SCHEDULER_HPP_
