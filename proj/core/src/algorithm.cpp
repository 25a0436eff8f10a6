#include "parcalc/algorithm.hpp"

namespace parcalc {

Operator::Operator(std::string op_id, Rational beta_calc)
    : op_id_(std::move(op_id)), beta_calc_(beta_calc) {
    if (op_id_.empty()) {
        throw ValidationError("operator id must be non-empty");
    }
    if (beta_calc_ < Rational(1)) {
        throw ValidationError("operator '" + op_id_ + "' has cost coefficient " +
                              to_string(beta_calc_) + "; coefficients must be >= 1");
    }
}

OperatorSet::OperatorSet(std::vector<Operator> ops) {
    for (auto& op : ops) {
        insert(std::move(op));
    }
}

void OperatorSet::insert(Operator op) {
    const std::string id = op.op_id();
    if (!ops_.emplace(id, std::move(op)).second) {
        throw ValidationError("duplicate operator id: '" + id + "'");
    }
}

bool OperatorSet::contains(const std::string& op_id) const {
    return ops_.find(op_id) != ops_.end();
}

const Operator& OperatorSet::at(const std::string& op_id) const {
    const auto it = ops_.find(op_id);
    if (it == ops_.end()) {
        throw UnknownOperator("unknown operator id: '" + op_id + "'");
    }
    return it->second;
}

const Operator& Algorithm::operator_for(const ElementId& id) const {
    const auto it = binding_.find(id);
    if (it == binding_.end()) {
        throw UnknownElement("no operator bound for subproblem '" + id.value + "'");
    }
    return it->second;
}

Algorithm bind_operators(const Decomposition& d, const std::map<ElementId, Operator>& assignment) {
    for (const auto& [id, op] : assignment) {
        d.problem_of(id);  // throws UnknownElement for stray ids
    }
    std::map<ElementId, Operator> binding;
    for (const auto& sub : d.subproblems()) {
        const auto it = assignment.find(sub.id);
        if (it == assignment.end()) {
            throw UnboundSubproblem("subproblem '" + sub.id.value + "' has no operator");
        }
        binding.emplace(sub.id, it->second);
    }
    return Algorithm(d, std::move(binding));
}

Algorithm bind_operators(const Decomposition& d, const std::map<ElementId, std::string>& op_ids,
               const OperatorSet& catalog) {
    std::map<ElementId, Operator> assignment;
    for (const auto& [id, op_id] : op_ids) {
        assignment.emplace(id, catalog.at(op_id));
    }
    return bind_operators(d, assignment);
}

std::size_t complexity(const Algorithm& a) {
    return a.cardinality();
}

std::set<std::string> granularity_set(const Algorithm& a) {
    std::set<std::string> out;
    for (const auto& [id, op] : a.binding()) {
        out.insert(op.op_id());
    }
    return out;
}

bool same_granularity(const Algorithm& a, const Algorithm& b) {
    return granularity_set(a) == granularity_set(b);
}

bool same_class(const Algorithm& a, const Algorithm& b) {
    return a.decomposition() == b.decomposition();
}

}  // namespace parcalc
