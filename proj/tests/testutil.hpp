// Shared fixtures for the test suites: random structure generators and the
// independent brute-force oracles the expected values are checked against.
#ifndef PARCALC_TESTS_TESTUTIL_HPP_
#define PARCALC_TESTS_TESTUTIL_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "parcalc/algorithm.hpp"
#include "parcalc/dag.hpp"
#include "parcalc/execution_matrix.hpp"

namespace testutil {

using namespace parcalc;

inline ElementId indexed_id(const std::string& prefix, std::size_t i) {
    std::string text = std::to_string(i);
    return ElementId(prefix + std::string(text.size() < 4 ? 4 - text.size() : 0, '0') + text);
}

struct RawDag {
    std::vector<ElementId> elements;
    std::vector<DependencyEdge> edges;
};

// Random DAG on `size` nodes; edges only point from higher to lower index, so
// the result is acyclic by construction.
inline RawDag random_raw_dag(std::mt19937_64& rng, std::size_t size) {
    std::uniform_real_distribution<double> density_dist(0.05, 0.35);
    const double density = density_dist(rng);
    std::bernoulli_distribution edge(density);
    RawDag raw;
    for (std::size_t i = 0; i < size; ++i) {
        raw.elements.push_back(indexed_id("v", i));
    }
    for (std::size_t i = 1; i < size; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (edge(rng)) {
                raw.edges.push_back({raw.elements[i], raw.elements[j]});
            }
        }
    }
    return raw;
}

inline DependencyDag random_dag(std::mt19937_64& rng, std::size_t size) {
    RawDag raw = random_raw_dag(rng, size);
    return build_dag(std::move(raw.elements), std::move(raw.edges));
}

// beta in [1, 10] with denominator up to 8.
inline Rational random_beta(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> den_dist(1, 8);
    const std::int64_t den = den_dist(rng);
    std::uniform_int_distribution<std::int64_t> num_dist(den, 10 * den);
    return Rational(num_dist(rng), den);
}

// --- Reachability oracle: DFS over the raw edge list, no transitive closure.

inline bool oracle_reaches(const RawDag& raw, const ElementId& from, const ElementId& to) {
    std::map<ElementId, std::vector<ElementId>> prereqs;
    for (const auto& edge : raw.edges) {
        prereqs[edge.dependent].push_back(edge.prerequisite);
    }
    std::vector<ElementId> stack{from};
    std::vector<ElementId> seen;
    while (!stack.empty()) {
        const ElementId current = stack.back();
        stack.pop_back();
        if (std::find(seen.begin(), seen.end(), current) != seen.end()) {
            continue;
        }
        seen.push_back(current);
        for (const auto& prereq : prereqs[current]) {
            if (prereq == to) {
                return true;
            }
            stack.push_back(prereq);
        }
    }
    return false;
}

// --- Longest-chain oracle: recursive longest path below each element.

inline std::size_t oracle_longest_chain_below(const RawDag& raw, const ElementId& id,
                                              std::map<ElementId, std::size_t>& memo) {
    const auto it = memo.find(id);
    if (it != memo.end()) {
        return it->second;
    }
    std::size_t best = 0;
    for (const auto& edge : raw.edges) {
        if (edge.dependent == id) {
            best = std::max(best, 1 + oracle_longest_chain_below(raw, edge.prerequisite, memo));
        }
    }
    memo[id] = best;
    return best;
}

struct LevelOracle {
    std::size_t longest_chain = 0;       // rows: longest chain length, in elements
    std::size_t widest_level = 0;        // cols: largest level
    std::map<ElementId, std::size_t> level;
};

inline LevelOracle oracle_levels(const RawDag& raw) {
    LevelOracle out;
    std::map<ElementId, std::size_t> memo;
    std::map<std::size_t, std::size_t> level_sizes;
    for (const auto& id : raw.elements) {
        const std::size_t depth = oracle_longest_chain_below(raw, id, memo);
        out.level[id] = depth;
        ++level_sizes[depth];
        out.longest_chain = std::max(out.longest_chain, depth + 1);
    }
    for (const auto& [depth, count] : level_sizes) {
        out.widest_level = std::max(out.widest_level, count);
    }
    return out;
}

// --- Row-simulation oracle: walks the grid cell by cell, takes per-row
// maxima the long way round.

inline Rational oracle_total_time(const ExecutionMatrix& m) {
    Rational total(0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Rational slowest(0);
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& cell = m.cell(r, c);
            if (cell.has_value() && cell->op.beta_calc() > slowest) {
                slowest = cell->op.beta_calc();
            }
        }
        total += slowest;
    }
    return total;
}

inline Rational oracle_speed_up(const ExecutionMatrix& m) {
    Rational serial(0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& cell = m.cell(r, c);
            if (cell.has_value()) {
                serial += cell->op.beta_calc();
            }
        }
    }
    return serial / oracle_total_time(m);
}

// --- Helpers to assemble algorithms and matrices.

// Wraps a DAG into a decomposition: size-2 subproblems of a parent one unit
// larger than the node count (single-node DAGs take the identity form).
inline Decomposition dag_decomposition(const DependencyDag& dag,
                                       const std::string& family = "work") {
    const auto n = static_cast<std::int64_t>(dag.size());
    if (n == 1) {
        return Decomposition::trivial({family, 2}, dag.elements().front());
    }
    std::vector<Subproblem> parts;
    for (const auto& element : dag.elements()) {
        parts.push_back({element, {family, 2}});
    }
    return decompose({family, n + 1}, std::move(parts), dag.edges());
}

inline Algorithm unit_algorithm(const DependencyDag& dag, const std::string& family = "work") {
    Decomposition d = dag_decomposition(dag, family);
    std::map<ElementId, Operator> assignment;
    for (const auto& element : dag.elements()) {
        assignment.emplace(element, Operator("op", Rational(1)));
    }
    return bind_operators(d, assignment);
}

inline Algorithm random_beta_algorithm(std::mt19937_64& rng, const DependencyDag& dag) {
    Decomposition d = dag_decomposition(dag);
    std::map<ElementId, Operator> assignment;
    std::size_t counter = 0;
    for (const auto& element : dag.elements()) {
        assignment.emplace(element,
                           Operator("op" + std::to_string(counter++), random_beta(rng)));
    }
    return bind_operators(d, assignment);
}

// Random execution matrix: `rows` x `cols`, every row keeps at least one
// operator (schedulers never emit fully idle rows).
inline ExecutionMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                     bool classical_widths = false) {
    std::uniform_real_distribution<double> fill_dist(0.2, 1.0);
    std::bernoulli_distribution full_row(0.5);
    std::vector<std::vector<ExecutionMatrix::Cell>> grid;
    std::size_t counter = 0;
    for (std::size_t r = 0; r < rows; ++r) {
        std::size_t width = 0;
        if (classical_widths) {
            width = full_row(rng) ? cols : 1;
        } else {
            std::uniform_int_distribution<std::size_t> width_dist(1, cols);
            width = width_dist(rng);
        }
        std::vector<ExecutionMatrix::Cell> row;
        for (std::size_t c = 0; c < width; ++c) {
            const std::string label = "x" + std::to_string(counter++);
            row.push_back(ScheduledOp{ElementId(label), Operator(label, random_beta(rng))});
        }
        grid.push_back(std::move(row));
    }
    return ExecutionMatrix::from_rows(std::move(grid), cols);
}

}  // namespace testutil

#endif  // PARCALC_TESTS_TESTUTIL_HPP_
