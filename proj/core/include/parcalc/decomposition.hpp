#ifndef PARCALC_DECOMPOSITION_HPP_
#define PARCALC_DECOMPOSITION_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "parcalc/dag.hpp"
#include "parcalc/dependency_matrix.hpp"
#include "parcalc/problem.hpp"

namespace parcalc {

struct Subproblem {
    ElementId id;
    ComputationalProblem problem;

    friend auto operator<=>(const Subproblem&, const Subproblem&) = default;
};

/// A problem split into strictly smaller subproblems whose sizes add up to at
/// least the parent size, together with the dependency order among them.
/// Immutable value; refinement returns a new decomposition.
class Decomposition {
public:
    /// The identity decomposition {parent}: a single subproblem equal to the
    /// parent itself. This is the degenerate k = 1 case produced when a
    /// problem is already a single machine operation and cannot be split
    /// further; the general validation path rejects equal-size subproblems.
    static Decomposition trivial(ComputationalProblem parent, ElementId id);

    const ComputationalProblem& parent() const { return parent_; }
    /// Subproblems in ascending id order.
    const std::vector<Subproblem>& subproblems() const { return subproblems_; }
    const DependencyDag& dag() const { return dag_; }

    std::size_t cardinality() const { return subproblems_.size(); }
    bool is_trivial() const;

    const ComputationalProblem& problem_of(const ElementId& id) const;

    friend bool operator==(const Decomposition& lhs, const Decomposition& rhs) {
        return lhs.parent_ == rhs.parent_ && lhs.subproblems_ == rhs.subproblems_ &&
               lhs.dag_ == rhs.dag_;
    }

private:
    Decomposition(ComputationalProblem parent, std::vector<Subproblem> subproblems,
                  DependencyDag dag);

    friend Decomposition decompose(const ComputationalProblem&, std::vector<Subproblem>,
                                   std::vector<DependencyEdge>);

    ComputationalProblem parent_;
    std::vector<Subproblem> subproblems_;
    DependencyDag dag_;
};

/// Validates and builds a decomposition.
/// Throws SubproblemTooLarge (some size >= parent size), SizeSumError (sizes
/// sum below the parent size), DuplicateElement, UnknownElement or CycleError
/// from the dependency structure.
Decomposition decompose(const ComputationalProblem& parent,
                        std::vector<Subproblem> parts,
                        std::vector<DependencyEdge> deps);

/// Similar decompositions: equal cardinality, similar parents, and a
/// bijection pairing subproblems by family and by rank of their size within
/// their own decomposition (sizes themselves may differ).
bool is_similar_decomposition(const Decomposition& d1, const Decomposition& d2);

/// Splices `sub`'s subproblems in place of `target`.
///
/// `sub.parent` must have the target's family and exact size, and must be a
/// proper decomposition (not the trivial identity). Spliced ids are
/// namespaced as "<target>.<sub id>". External dependencies are rewired so
/// that everything the target depended on feeds every source of `sub`, and
/// everything that depended on the target consumes every sink of `sub`. The
/// result is re-validated from scratch, so acyclicity and the size bounds
/// hold by construction.
Decomposition refine(const Decomposition& d, const ElementId& target,
                     const Decomposition& sub);

/// True iff the matrix has more than one column and no empty cell.
bool is_perfectly_decomposed(const DependencyMatrix& m);

/// Pairwise-combination decompositions of a size-N reduction problem, one per
/// refinement level. levels.front() splits into two halves plus a combiner;
/// levels.back() is the full binary tree of N-1 pairwise combinations. For
/// N = 2 the only level is the trivial single-operation decomposition.
struct ReductionLevels {
    ComputationalProblem problem;
    std::vector<Decomposition> levels;
};

/// Throws NotPowerOfTwo unless n is a power of two >= 2.
ReductionLevels generate_reduction(std::int64_t n);

/// Cardinality bookkeeping for solving a problem as mu concatenated chunks,
/// each similar to the whole and of complexity poly(size / mu).
struct ConcatDescriptor {
    std::int64_t mu = 1;
    Rational chunk_complexity;  // complexity of one chunk
    Rational total_complexity;  // mu * chunk_complexity
};

/// Throws IndivisibleError unless mu divides the parent input size.
ConcatDescriptor concat_similar(const ComputationalProblem& parent, std::int64_t mu,
                                const PolynomialComplexity& complexity);

}  // namespace parcalc

#endif  // PARCALC_DECOMPOSITION_HPP_
