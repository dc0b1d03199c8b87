#include "saito/tree.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "saito/errors.hpp"

namespace saito {

namespace {

std::pair<VertexId, VertexId> norm_edge(VertexId a, VertexId b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace

ResolutionTree ResolutionTree::build(const std::vector<ConstructionStep>& steps) {
    ResolutionTree t;
    t.parents_.push_back({});
    t.steps_ = steps;
    std::set<std::pair<VertexId, VertexId>> edges;
    for (const auto& step : steps) {
        const VertexId s = static_cast<VertexId>(t.parents_.size());
        if (step.c < 0 || step.c >= s)
            throw UnknownVertex("step for vertex " + std::to_string(s) + " references unknown vertex " +
                                std::to_string(step.c));
        if (step.kind == StepKind::rule1) {
            t.parents_.push_back({step.c});
            edges.insert(norm_edge(s, step.c));
        } else {
            if (step.c_prime < 0 || step.c_prime >= s)
                throw UnknownVertex("step for vertex " + std::to_string(s) + " references unknown vertex " +
                                    std::to_string(step.c_prime));
            auto e = norm_edge(step.c, step.c_prime);
            if (edges.erase(e) == 0)
                throw Rule2EdgeMissing("vertex " + std::to_string(s) + " splits missing edge " +
                                       std::to_string(e.first) + "-" + std::to_string(e.second));
            t.parents_.push_back({e.first, e.second});
            edges.insert(norm_edge(s, step.c));
            edges.insert(norm_edge(s, step.c_prime));
        }
    }
    const int n = t.size();
    t.children_.assign(n, {});
    t.neighbors_.assign(n, {});
    for (VertexId v = 0; v < n; ++v)
        for (VertexId p : t.parents_[v]) t.children_[p].push_back(v);
    for (auto [a, b] : edges) {
        t.neighbors_[a].push_back(b);
        t.neighbors_[b].push_back(a);
    }
    for (auto& nb : t.neighbors_) std::sort(nb.begin(), nb.end());
    return t;
}

ResolutionTree ResolutionTree::from_parent_sets(const std::vector<std::vector<VertexId>>& parents) {
    if (parents.empty()) throw UnknownVertex("a tree needs at least the root vertex");
    if (!parents[0].empty()) throw UnknownVertex("vertex 0 must be the root (no parents)");
    std::vector<ConstructionStep> steps;
    steps.reserve(parents.size() - 1);
    for (std::size_t v = 1; v < parents.size(); ++v) {
        auto p = parents[v];
        std::sort(p.begin(), p.end());
        if (p.size() == 1)
            steps.push_back(ConstructionStep::rule1(p[0]));
        else if (p.size() == 2 && p[0] != p[1])
            steps.push_back(ConstructionStep::rule2(p[0], p[1]));
        else
            throw UnknownVertex("vertex " + std::to_string(v) + " must have one or two distinct parents");
        for (VertexId q : p)
            if (q < 0 || q >= static_cast<VertexId>(v))
                throw UnknownVertex("vertex " + std::to_string(v) + " has parent " + std::to_string(q) +
                                    " outside 0.." + std::to_string(v - 1));
    }
    return build(steps);
}

i64 ResolutionTree::edge_count() const {
    i64 twice = 0;
    for (const auto& nb : neighbors_) twice += static_cast<i64>(nb.size());
    return twice / 2;
}

bool ResolutionTree::leq(VertexId a, VertexId b) const {
    if (a == b) return true;
    if (a > b) return false;  // ids refine the order
    // walk parent sets downward from b
    std::vector<VertexId> stack{b};
    std::vector<bool> seen(static_cast<std::size_t>(b) + 1, false);
    seen[b] = true;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId p : parents_[v]) {
            if (p == a) return true;
            if (p > a && !seen[p]) {
                seen[p] = true;
                stack.push_back(p);
            }
        }
    }
    return false;
}

std::vector<VertexId> ResolutionTree::access_tree(VertexId c, VertexId c_prime) const {
    if (!leq(c, c_prime))
        throw NotComparable("no access tree: " + std::to_string(c) + " is not below " + std::to_string(c_prime));
    std::vector<bool> in(static_cast<std::size_t>(size()), false);
    in[c] = true;
    in[c_prime] = true;
    std::vector<VertexId> stack{c_prime};
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId p : parents_[v])
            if (!in[p] && leq(c, p)) {
                in[p] = true;
                stack.push_back(p);
            }
    }
    std::vector<VertexId> out;
    for (VertexId v = 0; v < size(); ++v)
        if (in[v]) out.push_back(v);
    return out;
}

IntMatrix proximity_matrix(const ResolutionTree& tree) {
    const int n = tree.size();
    IntMatrix p(n);
    for (VertexId j = 0; j < n; ++j) {
        p(j, j) = 1;
        for (VertexId i : tree.parents(j)) p(i, j) = -1;
    }
    return p;
}

IntMatrix inverse_proximity(const IntMatrix& p) { return inverse_unit_upper(p); }

std::vector<i64> multiplicities(const ResolutionTree& tree) {
    std::vector<i64> rho(static_cast<std::size_t>(tree.size()), 0);
    rho[0] = 1;
    for (VertexId v = 1; v < tree.size(); ++v)
        for (VertexId p : tree.parents(v)) rho[v] += rho[p];
    return rho;
}

std::vector<i64> valuations(const ResolutionTree& tree, const Numbering& n) {
    std::vector<i64> nu(n.begin(), n.end());
    for (VertexId v = tree.size() - 1; v >= 0; --v)
        for (VertexId j : tree.children(v)) nu[v] += nu[j];
    return nu;
}

IntMatrix intersection_matrix(const ResolutionTree& tree) {
    IntMatrix p = proximity_matrix(tree);
    IntMatrix ppt = p * p.transposed();
    IntMatrix out(tree.size());
    for (int i = 0; i < tree.size(); ++i)
        for (int j = 0; j < tree.size(); ++j) out(i, j) = -ppt(i, j);
    return out;
}

}  // namespace saito
