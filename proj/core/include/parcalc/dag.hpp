#ifndef PARCALC_DAG_HPP_
#define PARCALC_DAG_HPP_

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "parcalc/errors.hpp"

namespace parcalc {

/// Opaque identifier of one element of a dependency structure. Ordering is
/// lexicographic and serves as the canonical tie-break everywhere.
struct ElementId {
    std::string value;

    ElementId() = default;
    ElementId(std::string v) : value(std::move(v)) {}
    ElementId(const char* v) : value(v) {}

    friend auto operator<=>(const ElementId&, const ElementId&) = default;
};

std::ostream& operator<<(std::ostream& os, const ElementId& id);

/// Directed dependency: `dependent` cannot run before `prerequisite`.
struct DependencyEdge {
    ElementId dependent;
    ElementId prerequisite;

    friend auto operator<=>(const DependencyEdge&, const DependencyEdge&) = default;
};

/// A finite element set under a strict partial order "depends on".
///
/// Immutable once built. The transitive closure is computed eagerly at build
/// time, so reachability and independence queries are O(1); concurrent reads
/// from multiple threads are safe.
class DependencyDag {
public:
    /// Validates and builds. Throws DuplicateElement, UnknownElement (edge
    /// endpoint not in `elements`) or CycleError (relation is not a strict
    /// partial order; the error names one cycle).
    static DependencyDag build(std::vector<ElementId> elements,
                               std::vector<DependencyEdge> edges);

    std::size_t size() const { return elements_.size(); }

    /// Elements in ascending id order; the position of an element in this
    /// vector is its index for the index-based accessors below.
    const std::vector<ElementId>& elements() const { return elements_; }

    /// Direct edges, deduplicated, in canonical order.
    const std::vector<DependencyEdge>& edges() const { return edges_; }

    bool contains(const ElementId& id) const;

    /// Index of `id` in elements(); throws UnknownElement.
    std::size_t index_of(const ElementId& id) const;
    const ElementId& element_at(std::size_t index) const { return elements_.at(index); }

    /// True iff `a` depends on `b` directly or transitively (a <- b).
    bool depends_on(const ElementId& a, const ElementId& b) const;
    bool directly_depends_on(const ElementId& a, const ElementId& b) const;

    /// Index-based transitive reachability: element `a` depends on `b`.
    bool reaches(std::size_t a, std::size_t b) const { return reachable_.at(a).at(b); }

    const std::vector<std::size_t>& prerequisite_indices(std::size_t index) const {
        return direct_prereqs_.at(index);
    }
    const std::vector<std::size_t>& dependent_indices(std::size_t index) const {
        return direct_dependents_.at(index);
    }

    std::vector<ElementId> prerequisites_of(const ElementId& id) const;
    std::vector<ElementId> dependents_of(const ElementId& id) const;

    friend bool operator==(const DependencyDag& lhs, const DependencyDag& rhs) {
        return lhs.elements_ == rhs.elements_ && lhs.edges_ == rhs.edges_;
    }

private:
    DependencyDag() = default;

    std::vector<ElementId> elements_;
    std::vector<DependencyEdge> edges_;
    std::vector<std::vector<std::size_t>> direct_prereqs_;
    std::vector<std::vector<std::size_t>> direct_dependents_;
    std::vector<std::vector<bool>> reachable_;
};

DependencyDag build_dag(std::vector<ElementId> elements,
                        std::vector<DependencyEdge> depends_on);

/// True iff neither element reaches the other. An element is not independent
/// of itself (the order is strict). Throws UnknownElement.
bool is_independent(const DependencyDag& dag, const ElementId& a, const ElementId& b);

}  // namespace parcalc

#endif  // PARCALC_DAG_HPP_
