#include "parcalc/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace parcalc {

Decomposition::Decomposition(ComputationalProblem parent, std::vector<Subproblem> subproblems,
                             DependencyDag dag)
    : parent_(std::move(parent)), subproblems_(std::move(subproblems)), dag_(std::move(dag)) {
    std::sort(subproblems_.begin(), subproblems_.end());
}

Decomposition Decomposition::trivial(ComputationalProblem parent, ElementId id) {
    if (parent.input_size < 1) {
        throw ValidationError("problem input size must be at least 1");
    }
    std::vector<Subproblem> parts{{id, parent}};
    DependencyDag dag = DependencyDag::build({std::move(id)}, {});
    return Decomposition(std::move(parent), std::move(parts), std::move(dag));
}

bool Decomposition::is_trivial() const {
    return subproblems_.size() == 1 && subproblems_.front().problem == parent_;
}

const ComputationalProblem& Decomposition::problem_of(const ElementId& id) const {
    const auto it = std::lower_bound(
        subproblems_.begin(), subproblems_.end(), id,
        [](const Subproblem& s, const ElementId& key) { return s.id < key; });
    if (it == subproblems_.end() || it->id != id) {
        throw UnknownElement("unknown subproblem id: '" + id.value + "'");
    }
    return it->problem;
}

Decomposition decompose(const ComputationalProblem& parent,
                        std::vector<Subproblem> parts,
                        std::vector<DependencyEdge> deps) {
    if (parent.input_size < 1) {
        throw ValidationError("problem input size must be at least 1");
    }
    if (parts.empty()) {
        throw ValidationError("a decomposition needs at least one subproblem");
    }
    std::int64_t size_sum = 0;
    for (const auto& part : parts) {
        if (part.problem.input_size < 1) {
            throw ValidationError("subproblem '" + part.id.value +
                                  "' must have input size at least 1");
        }
        if (part.problem.input_size >= parent.input_size) {
            throw SubproblemTooLarge("subproblem '" + part.id.value + "' has size " +
                                     std::to_string(part.problem.input_size) +
                                     ", not smaller than the parent size " +
                                     std::to_string(parent.input_size));
        }
        size_sum += part.problem.input_size;
    }
    if (size_sum < parent.input_size) {
        throw SizeSumError("subproblem sizes sum to " + std::to_string(size_sum) +
                           ", below the parent size " + std::to_string(parent.input_size));
    }
    std::vector<ElementId> ids;
    ids.reserve(parts.size());
    for (const auto& part : parts) {
        ids.push_back(part.id);
    }
    DependencyDag dag = DependencyDag::build(std::move(ids), std::move(deps));
    return Decomposition(parent, std::move(parts), std::move(dag));
}

namespace {

// (family, rank of the size among the decomposition's distinct sizes); the
// multiset of these pairs is what similar decompositions must share.
std::multiset<std::pair<std::string, std::size_t>> family_rank_multiset(
    const Decomposition& d) {
    std::set<std::int64_t> sizes;
    for (const auto& sub : d.subproblems()) {
        sizes.insert(sub.problem.input_size);
    }
    std::map<std::int64_t, std::size_t> rank;
    std::size_t next = 0;
    for (const auto size : sizes) {
        rank[size] = next++;
    }
    std::multiset<std::pair<std::string, std::size_t>> out;
    for (const auto& sub : d.subproblems()) {
        out.emplace(sub.problem.family, rank[sub.problem.input_size]);
    }
    return out;
}

}  // namespace

bool is_similar_decomposition(const Decomposition& d1, const Decomposition& d2) {
    if (!is_similar(d1.parent(), d2.parent())) {
        return false;
    }
    if (d1.cardinality() != d2.cardinality()) {
        return false;
    }
    return family_rank_multiset(d1) == family_rank_multiset(d2);
}

Decomposition refine(const Decomposition& d, const ElementId& target,
                     const Decomposition& sub) {
    const ComputationalProblem& target_problem = d.problem_of(target);
    if (sub.parent().family != target_problem.family ||
        sub.parent().input_size != target_problem.input_size) {
        throw TargetMismatch("replacement decomposes (" + sub.parent().family + ", " +
                             std::to_string(sub.parent().input_size) +
                             ") but the target '" + target.value + "' is (" +
                             target_problem.family + ", " +
                             std::to_string(target_problem.input_size) + ")");
    }
    if (sub.is_trivial()) {
        throw TargetMismatch("replacement must be a proper decomposition, not the identity");
    }

    auto spliced_id = [&target](const ElementId& id) {
        return ElementId(target.value + "." + id.value);
    };

    std::vector<Subproblem> parts;
    for (const auto& part : d.subproblems()) {
        if (part.id != target) {
            parts.push_back(part);
        }
    }
    for (const auto& part : sub.subproblems()) {
        parts.push_back({spliced_id(part.id), part.problem});
    }

    // Sources of `sub` inherit the target's inputs, sinks its outputs.
    std::vector<ElementId> sources;
    std::vector<ElementId> sinks;
    for (std::size_t v = 0; v < sub.dag().size(); ++v) {
        if (sub.dag().prerequisite_indices(v).empty()) {
            sources.push_back(sub.dag().element_at(v));
        }
        if (sub.dag().dependent_indices(v).empty()) {
            sinks.push_back(sub.dag().element_at(v));
        }
    }

    std::vector<DependencyEdge> deps;
    for (const auto& edge : d.dag().edges()) {
        if (edge.dependent == target) {
            for (const auto& source : sources) {
                deps.push_back({spliced_id(source), edge.prerequisite});
            }
        } else if (edge.prerequisite == target) {
            for (const auto& sink : sinks) {
                deps.push_back({edge.dependent, spliced_id(sink)});
            }
        } else {
            deps.push_back(edge);
        }
    }
    for (const auto& edge : sub.dag().edges()) {
        deps.push_back({spliced_id(edge.dependent), spliced_id(edge.prerequisite)});
    }

    return decompose(d.parent(), std::move(parts), std::move(deps));
}

bool is_perfectly_decomposed(const DependencyMatrix& m) {
    if (m.cols() <= 1) {
        return false;
    }
    return m.non_empty_count() == m.rows() * m.cols();
}

namespace {

bool is_power_of_two(std::int64_t n) {
    return n >= 1 && (n & (n - 1)) == 0;
}

std::string padded_index(std::size_t index, std::size_t max_index) {
    std::string digits = std::to_string(max_index);
    std::string text = std::to_string(index);
    return std::string(digits.size() - text.size(), '0') + text;
}

// Binary combination tree with 2^level leaves, nodes named by heap index:
// node i combines nodes 2i and 2i + 1. Leaves hold size n / 2^level chunks;
// interior nodes are pairwise combinations of size 2.
Decomposition reduction_level(const ComputationalProblem& parent, std::int64_t n,
                              std::size_t level) {
    const std::size_t leaf_count = std::size_t{1} << level;
    const std::size_t node_count = 2 * leaf_count - 1;
    const std::int64_t leaf_size = n >> level;

    std::vector<Subproblem> parts;
    std::vector<DependencyEdge> deps;
    auto node_id = [node_count](std::size_t heap_index) {
        return ElementId("n" + padded_index(heap_index, node_count));
    };
    for (std::size_t i = 1; i <= node_count; ++i) {
        const bool leaf = i >= leaf_count;
        parts.push_back({node_id(i), {parent.family, leaf ? leaf_size : 2}});
        if (!leaf) {
            deps.push_back({node_id(i), node_id(2 * i)});
            deps.push_back({node_id(i), node_id(2 * i + 1)});
        }
    }
    return decompose(parent, std::move(parts), std::move(deps));
}

}  // namespace

ReductionLevels generate_reduction(std::int64_t n) {
    if (n < 2 || !is_power_of_two(n)) {
        throw NotPowerOfTwo("reduction size must be a power of two >= 2, got " +
                            std::to_string(n));
    }
    ReductionLevels out;
    out.problem = {"sum", n};
    if (n == 2) {
        out.levels.push_back(Decomposition::trivial(out.problem, ElementId("n1")));
        return out;
    }
    std::size_t max_level = 0;
    while ((n >> (max_level + 1)) > 1) {
        ++max_level;
    }
    for (std::size_t level = 1; level <= max_level; ++level) {
        out.levels.push_back(reduction_level(out.problem, n, level));
    }
    return out;
}

ConcatDescriptor concat_similar(const ComputationalProblem& parent, std::int64_t mu,
                                const PolynomialComplexity& complexity) {
    if (mu < 1 || mu > parent.input_size) {
        throw PreconditionError("chunk count must satisfy 1 <= mu <= input size, got " +
                                std::to_string(mu));
    }
    if (parent.input_size % mu != 0) {
        throw IndivisibleError("chunk count " + std::to_string(mu) +
                               " does not divide the input size " +
                               std::to_string(parent.input_size));
    }
    ConcatDescriptor out;
    out.mu = mu;
    out.chunk_complexity = complexity.evaluate(Rational(parent.input_size / mu));
    out.total_complexity = Rational(mu) * out.chunk_complexity;
    return out;
}

}  // namespace parcalc
