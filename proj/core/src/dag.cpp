#include "parcalc/dag.hpp"

#include <algorithm>
#include <ostream>

namespace parcalc {

std::ostream& operator<<(std::ostream& os, const ElementId& id) {
    return os << id.value;
}

namespace {

std::string format_cycle(const std::vector<std::string>& cycle) {
    std::string out;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i > 0) {
            out += " <- ";
        }
        out += cycle[i];
    }
    return out;
}

// DFS over direct prerequisites; returns one cycle (first id repeated at the
// end) if the relation has one.
std::vector<std::string> find_cycle(const std::vector<ElementId>& elements,
                                    const std::vector<std::vector<std::size_t>>& prereqs) {
    enum class Mark { White, Gray, Black };
    std::vector<Mark> mark(elements.size(), Mark::White);

    // Explicit stack of (node, next prerequisite position).
    std::vector<std::pair<std::size_t, std::size_t>> stack;
    for (std::size_t start = 0; start < elements.size(); ++start) {
        if (mark[start] != Mark::White) {
            continue;
        }
        stack.clear();
        stack.emplace_back(start, 0);
        mark[start] = Mark::Gray;
        while (!stack.empty()) {
            auto& [node, pos] = stack.back();
            if (pos < prereqs[node].size()) {
                const std::size_t next = prereqs[node][pos++];
                if (mark[next] == Mark::Gray) {
                    // Unwind the stack back to `next`; the unwind walks the
                    // chain backwards, so flip the middle to read
                    // "next <- ... <- next" in dependency order.
                    std::vector<std::string> cycle{elements[next].value};
                    for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
                        cycle.push_back(elements[it->first].value);
                        if (it->first == next) {
                            break;
                        }
                    }
                    std::reverse(cycle.begin() + 1, cycle.end() - 1);
                    return cycle;
                }
                if (mark[next] == Mark::White) {
                    mark[next] = Mark::Gray;
                    stack.emplace_back(next, 0);
                }
            } else {
                mark[node] = Mark::Black;
                stack.pop_back();
            }
        }
    }
    return {};
}

}  // namespace

DependencyDag DependencyDag::build(std::vector<ElementId> elements,
                                   std::vector<DependencyEdge> edges) {
    DependencyDag dag;
    std::sort(elements.begin(), elements.end());
    const auto dup = std::adjacent_find(elements.begin(), elements.end());
    if (dup != elements.end()) {
        throw DuplicateElement("duplicate element id: '" + dup->value + "'");
    }
    dag.elements_ = std::move(elements);

    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    dag.edges_ = std::move(edges);

    const std::size_t n = dag.elements_.size();
    dag.direct_prereqs_.assign(n, {});
    dag.direct_dependents_.assign(n, {});
    for (const auto& edge : dag.edges_) {
        const std::size_t a = dag.index_of(edge.dependent);
        const std::size_t b = dag.index_of(edge.prerequisite);
        dag.direct_prereqs_[a].push_back(b);
        dag.direct_dependents_[b].push_back(a);
    }

    auto cycle = find_cycle(dag.elements_, dag.direct_prereqs_);
    if (!cycle.empty()) {
        const std::string message = "dependency cycle: " + format_cycle(cycle);
        throw CycleError(message, std::move(cycle));
    }

    // Closure in an order where prerequisites come first.
    std::vector<std::size_t> in_degree(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        in_degree[v] = dag.direct_prereqs_[v].size();
    }
    std::vector<std::size_t> order;
    order.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (in_degree[v] == 0) {
            order.push_back(v);
        }
    }
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (const std::size_t dep : dag.direct_dependents_[order[head]]) {
            if (--in_degree[dep] == 0) {
                order.push_back(dep);
            }
        }
    }

    dag.reachable_.assign(n, std::vector<bool>(n, false));
    for (const std::size_t v : order) {
        auto& row = dag.reachable_[v];
        for (const std::size_t p : dag.direct_prereqs_[v]) {
            row[p] = true;
            const auto& prow = dag.reachable_[p];
            for (std::size_t b = 0; b < n; ++b) {
                if (prow[b]) {
                    row[b] = true;
                }
            }
        }
    }
    return dag;
}

bool DependencyDag::contains(const ElementId& id) const {
    return std::binary_search(elements_.begin(), elements_.end(), id);
}

std::size_t DependencyDag::index_of(const ElementId& id) const {
    const auto it = std::lower_bound(elements_.begin(), elements_.end(), id);
    if (it == elements_.end() || *it != id) {
        throw UnknownElement("unknown element id: '" + id.value + "'");
    }
    return static_cast<std::size_t>(it - elements_.begin());
}

bool DependencyDag::depends_on(const ElementId& a, const ElementId& b) const {
    return reaches(index_of(a), index_of(b));
}

bool DependencyDag::directly_depends_on(const ElementId& a, const ElementId& b) const {
    const std::size_t ia = index_of(a);
    const std::size_t ib = index_of(b);
    const auto& prereqs = direct_prereqs_[ia];
    return std::find(prereqs.begin(), prereqs.end(), ib) != prereqs.end();
}

std::vector<ElementId> DependencyDag::prerequisites_of(const ElementId& id) const {
    std::vector<ElementId> out;
    for (const std::size_t p : direct_prereqs_[index_of(id)]) {
        out.push_back(elements_[p]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ElementId> DependencyDag::dependents_of(const ElementId& id) const {
    std::vector<ElementId> out;
    for (const std::size_t d : direct_dependents_[index_of(id)]) {
        out.push_back(elements_[d]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

DependencyDag build_dag(std::vector<ElementId> elements,
                        std::vector<DependencyEdge> depends_on) {
    return DependencyDag::build(std::move(elements), std::move(depends_on));
}

bool is_independent(const DependencyDag& dag, const ElementId& a, const ElementId& b) {
    const std::size_t ia = dag.index_of(a);
    const std::size_t ib = dag.index_of(b);
    if (ia == ib) {
        return false;
    }
    return !dag.reaches(ia, ib) && !dag.reaches(ib, ia);
}

}  // namespace parcalc
