#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "saito/matrix.hpp"

namespace saito {

// Vertices are dense ids 0..N-1 in insertion order; 0 is always the root and a
// parent's id is strictly smaller than its child's.
using VertexId = int;

enum class StepKind { rule1, rule2 };

// rule1 attaches a new vertex to c; rule2 splits the existing edge c--c_prime.
struct ConstructionStep {
    StepKind kind;
    VertexId c;
    VertexId c_prime;  // rule2 only

    static ConstructionStep rule1(VertexId c) { return {StepKind::rule1, c, -1}; }
    static ConstructionStep rule2(VertexId c, VertexId c_prime) { return {StepKind::rule2, c, c_prime}; }

    friend bool operator==(const ConstructionStep&, const ConstructionStep&) = default;
};

// Ordered resolution tree produced by replaying construction steps. Immutable
// once built; every derived quantity is a pure function of it.
class ResolutionTree {
public:
    // Replays the steps starting from a single root. Throws UnknownVertex or
    // Rule2EdgeMissing when a step is invalid at its point in the replay.
    static ResolutionTree build(const std::vector<ConstructionStep>& steps);

    // Rebuilds from per-vertex parent sets (vertex 0 must have none, others one
    // or two smaller ids). Validates by deriving steps and replaying them.
    static ResolutionTree from_parent_sets(const std::vector<std::vector<VertexId>>& parents);

    int size() const { return static_cast<int>(parents_.size()); }
    const std::vector<VertexId>& parents(VertexId v) const { return parents_[v]; }
    const std::vector<VertexId>& children(VertexId v) const { return children_[v]; }
    // Neighbours in the final edge structure (edges deleted by rule 2 excluded).
    const std::vector<VertexId>& neighbors(VertexId v) const { return neighbors_[v]; }
    const std::vector<ConstructionStep>& steps() const { return steps_; }
    const std::vector<std::vector<VertexId>>& parent_sets() const { return parents_; }

    i64 edge_count() const;

    // a <= b in the partial order (reflexive-transitive parent relation).
    bool leq(VertexId a, VertexId b) const;

    // Access tree from c to c_prime: c_prime, its parents >= c, recursively,
    // plus c itself. Sorted ascending; ascending id order is the chain order
    // whenever the result is totally ordered. Throws NotComparable.
    std::vector<VertexId> access_tree(VertexId c, VertexId c_prime) const;
    // Access tree from the root.
    std::vector<VertexId> access_chain(VertexId c) const { return access_tree(0, c); }

    friend bool operator==(const ResolutionTree& a, const ResolutionTree& b) {
        return a.parents_ == b.parents_ && a.neighbors_ == b.neighbors_;
    }

private:
    ResolutionTree() = default;
    std::vector<std::vector<VertexId>> parents_;
    std::vector<std::vector<VertexId>> children_;
    std::vector<std::vector<VertexId>> neighbors_;
    std::vector<ConstructionStep> steps_;
};

using Numbering = std::vector<i64>;

// P_{ii} = 1, P_{ij} = -1 iff i is a parent of j.
IntMatrix proximity_matrix(const ResolutionTree& tree);
// Exact integer inverse of the (unit upper triangular) proximity matrix.
IntMatrix inverse_proximity(const IntMatrix& p);
// rho_root = 1, rho_c = sum of parent multiplicities.
std::vector<i64> multiplicities(const ResolutionTree& tree);
// nu = P^{-1} n, computed by the equivalent recursion nu_c = n_c + sum over children.
std::vector<i64> valuations(const ResolutionTree& tree, const Numbering& n);
// Intersection matrix of the exceptional divisor: -(P P^t). Diagonal entries
// are the (negative) self-intersections; off-diagonal entries are 1 exactly at
// the final edges.
IntMatrix intersection_matrix(const ResolutionTree& tree);

}  // namespace saito
