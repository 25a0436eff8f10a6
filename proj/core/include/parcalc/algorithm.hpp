#ifndef PARCALC_ALGORITHM_HPP_
#define PARCALC_ALGORITHM_HPP_

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "parcalc/decomposition.hpp"
#include "parcalc/rational.hpp"

namespace parcalc {

/// A machine operator together with its cost coefficient, expressed as a
/// multiple (>= 1) of the time of one elementary operation.
class Operator {
public:
    Operator(std::string op_id, Rational beta_calc);

    const std::string& op_id() const { return op_id_; }
    const Rational& beta_calc() const { return beta_calc_; }

    friend bool operator==(const Operator& lhs, const Operator& rhs) {
        return lhs.op_id_ == rhs.op_id_ && lhs.beta_calc_ == rhs.beta_calc_;
    }

private:
    std::string op_id_;
    Rational beta_calc_;
};

/// Catalog of distinct operators a machine can execute, keyed by op_id.
class OperatorSet {
public:
    OperatorSet() = default;
    explicit OperatorSet(std::vector<Operator> ops);

    /// Throws ValidationError on a repeated op_id.
    void insert(Operator op);

    bool contains(const std::string& op_id) const;
    /// Throws UnknownOperator.
    const Operator& at(const std::string& op_id) const;

    std::size_t size() const { return ops_.size(); }
    const std::map<std::string, Operator>& ops() const { return ops_; }

private:
    std::map<std::string, Operator> ops_;
};

/// An algorithm: a decomposition whose every subproblem is bound to the
/// operator instance that solves it. Operators may repeat across
/// subproblems; the binding itself is one-to-one on instances.
class Algorithm {
public:
    const Decomposition& decomposition() const { return decomposition_; }
    const std::map<ElementId, Operator>& binding() const { return binding_; }
    const Operator& operator_for(const ElementId& id) const;

    /// k, the number of operator instances.
    std::size_t cardinality() const { return binding_.size(); }

    friend bool operator==(const Algorithm& lhs, const Algorithm& rhs) {
        return lhs.decomposition_ == rhs.decomposition_ && lhs.binding_ == rhs.binding_;
    }

private:
    Algorithm(Decomposition decomposition, std::map<ElementId, Operator> binding)
        : decomposition_(std::move(decomposition)), binding_(std::move(binding)) {}

    friend Algorithm bind_operators(const Decomposition&, const std::map<ElementId, Operator>&);

    Decomposition decomposition_;
    std::map<ElementId, Operator> binding_;
};

/// Binds every subproblem of `d` to an operator. Throws UnboundSubproblem if
/// a subproblem has no operator, UnknownElement if the assignment names an id
/// that is not a subproblem of `d`.
Algorithm bind_operators(const Decomposition& d, const std::map<ElementId, Operator>& assignment);

/// Same, resolving op_ids through a catalog; throws UnknownOperator for ids
/// missing from the catalog.
Algorithm bind_operators(const Decomposition& d, const std::map<ElementId, std::string>& op_ids,
               const OperatorSet& catalog);

/// k: equals the decomposition cardinality and the number of non-empty cells
/// of the decomposition matrix.
std::size_t complexity(const Algorithm& a);

/// The distinct operator ids used by the algorithm.
std::set<std::string> granularity_set(const Algorithm& a);

bool same_granularity(const Algorithm& a, const Algorithm& b);

/// True iff both algorithms realize the same decomposition (structural
/// equality); such algorithms form one equivalence class.
bool same_class(const Algorithm& a, const Algorithm& b);

}  // namespace parcalc

#endif  // PARCALC_ALGORITHM_HPP_
