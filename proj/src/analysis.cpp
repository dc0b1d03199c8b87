#include "saito/analysis.hpp"

#include <algorithm>

#include "saito/errors.hpp"

namespace saito {

namespace {

i64 saito_number_of(const SaitoSolution& sol, const std::vector<i64>& nu) {
    const HalfInt half_nu = HalfInt::from_twice(nu[0]);
    const HalfInt s = half_nu - parity_select(HalfInt(1 - sol.delta[0]), HalfInt::half(), nu[0]);
    return s.to_integer();
}

void check_reconciliation(const ResolutionTree& tree, const SaitoSolution& sol, i64 s) {
    const auto rho = multiplicities(tree);
    i64 weighted = 0;
    for (VertexId v = 0; v < tree.size(); ++v) weighted += rho[v] * sol.epsilon[v];
    if (weighted != s + 1)
        throw InternalInconsistency("sum rho*eps = " + std::to_string(weighted) +
                                    " does not equal saito_number + 1 = " + std::to_string(s + 1));
}

}  // namespace

i64 saito_number(const ResolutionTree& tree, const Numbering& n) {
    const SaitoSolution sol = saito_inductive(tree, n);
    const auto nu = valuations(tree, n);
    const i64 s = saito_number_of(sol, nu);
    check_reconciliation(tree, sol, s);
    return s;
}

SaitoProfile saito_valuation_profile(const ResolutionTree& tree, const Numbering& n) {
    SaitoProfile profile;
    const SaitoSolution sol = saito_inductive(tree, n);
    const auto nu = valuations(tree, n);
    const auto dc = delta_count(tree, sol.delta);
    profile.saito_number = saito_number_of(sol, nu);
    check_reconciliation(tree, sol, profile.saito_number);
    profile.per_vertex.resize(static_cast<std::size_t>(tree.size()));
    for (VertexId s = 0; s < tree.size(); ++s) {
        const i64 total = nu[s] + dc[s];
        const HalfInt val =
            HalfInt::from_twice(total) - parity_select(HalfInt(1 - sol.delta[s]), HalfInt::half(), total);
        profile.per_vertex[s] = val.to_integer();
        if (profile.per_vertex[s] < 0)
            throw InternalInconsistency("negative Saito valuation at vertex " + std::to_string(s));
    }
    profile.dicriticity = sol.delta;
    profile.epsilon = sol.epsilon;
    return profile;
}

bool check_upper_bound(const ResolutionTree& tree, const Numbering& n, i64 s) {
    const auto nu = valuations(tree, n);
    return s <= nu[0] / 2;
}

namespace {

constexpr int kMaxGluingAttempts = 32;

Rational perturbed(i64 base, int attempt, unsigned seed) {
    // small positive rational, distinct across slots and attempts; the 1/2
    // offset keeps sums of these away from the integral residuals they must
    // not cancel
    const i64 shift = attempt + static_cast<i64>(seed % 97);
    return Rational(2 * base - 1, 2) + Rational(shift, 2 * base + 1);
}

}  // namespace

GluingData gluing_data(const ResolutionTree& tree, const Numbering& n, unsigned seed) {
    const SaitoSolution sol = saito_inductive(tree, n);
    const IntMatrix inter = intersection_matrix(tree);

    GluingData data;
    data.delta = sol.delta;
    data.epsilon = sol.epsilon;
    data.models.resize(static_cast<std::size_t>(tree.size()));

    for (VertexId s = 0; s < tree.size(); ++s) {
        data.models[s].self_int_magnitude = -inter(s, s);
        if (sol.delta[s] == 0) {
            data.models[s].dicritical = true;
            i64 white_neighbors = 0;
            for (VertexId v : tree.neighbors(s)) white_neighbors += sol.delta[v];
            data.models[s].tangency_count = sol.epsilon[s] - 2 + white_neighbors;
            if (data.models[s].tangency_count < 0)
                throw InternalInconsistency("negative tangency count at vertex " + std::to_string(s));
        }
    }

    for (const auto& comp : white_components(tree, sol.delta)) {
        VertexId root = -1;
        for (VertexId v : comp)
            if (sol.epsilon[v] > 0) {
                root = v;
                break;
            }
        if (root == -1)
            throw InternalInconsistency("white component without a positive configuration entry");

        // breadth-first order rooted at a vertex whose free weights can absorb
        // the Camacho-Sad residual
        std::vector<VertexId> order{root};
        std::map<VertexId, VertexId> parent{{root, -1}};
        for (std::size_t i = 0; i < order.size(); ++i)
            for (VertexId w : tree.neighbors(order[i]))
                if (sol.delta[w] == 1 && !parent.count(w) &&
                    std::find(comp.begin(), comp.end(), w) != comp.end()) {
                    parent[w] = order[i];
                    order.push_back(w);
                }

        bool done = false;
        for (int attempt = 0; attempt < kMaxGluingAttempts && !done; ++attempt) {
            std::map<VertexId, std::vector<Rational>> free;
            std::map<std::pair<VertexId, VertexId>, Rational> edge;
            bool ok = true;
            for (auto it = order.rbegin(); it != order.rend() && ok; ++it) {
                const VertexId v = *it;
                const i64 p = data.models[v].self_int_magnitude;
                Rational resolved(0);
                for (VertexId w : tree.neighbors(v))
                    if (parent.count(w) && parent[w] == v) resolved += edge[{v, w}];
                const i64 eps = sol.epsilon[v];
                if (v == root) {
                    std::vector<Rational> weights;
                    Rational tail(0);
                    for (i64 i = 2; i <= eps; ++i) {
                        weights.push_back(perturbed(i, attempt, seed));
                        tail += weights.back();
                    }
                    const Rational lead = Rational(p) - resolved - tail;
                    if (lead == Rational(0)) {
                        ok = false;
                        break;
                    }
                    weights.insert(weights.begin(), lead);
                    free[v] = std::move(weights);
                } else {
                    std::vector<Rational> weights;
                    Rational used(0);
                    for (i64 i = 1; i <= eps; ++i) {
                        weights.push_back(perturbed(i, attempt, seed));
                        used += weights.back();
                    }
                    const Rational lambda = Rational(p) - resolved - used;
                    if (lambda == Rational(0)) {
                        ok = false;
                        break;
                    }
                    free[v] = std::move(weights);
                    edge[{v, parent[v]}] = lambda;
                    edge[{parent[v], v}] = Rational(1) / lambda;
                }
            }
            if (!ok) continue;
            for (VertexId v : comp) {
                data.models[v].free_weights = free[v];
                for (VertexId w : tree.neighbors(v))
                    if (edge.count({v, w})) data.models[v].edge_weights[w] = edge[{v, w}];
            }
            done = true;
        }
        if (!done)
            throw DegenerateAssignment("no nonzero weight assignment found after " +
                                       std::to_string(kMaxGluingAttempts) + " attempts");
    }

    validate_gluing(tree, data);
    return data;
}

void validate_gluing(const ResolutionTree& tree, const GluingData& data) {
    for (VertexId s = 0; s < tree.size(); ++s) {
        const VertexModel& m = data.models[s];
        if (data.delta[s] == 0) {
            if (!m.dicritical || m.tangency_count < 0)
                throw InternalInconsistency("invalid dicritical model at vertex " + std::to_string(s));
            continue;
        }
        if (m.dicritical) throw InternalInconsistency("white vertex carries a dicritical model");
        if (static_cast<i64>(m.free_weights.size()) != data.epsilon[s])
            throw InternalInconsistency("free weight count differs from epsilon at vertex " + std::to_string(s));
        Rational total(0);
        for (const Rational& w : m.free_weights) {
            if (w == Rational(0)) throw InternalInconsistency("zero free weight at vertex " + std::to_string(s));
            total += w;
        }
        i64 white_neighbors = 0;
        for (VertexId v : tree.neighbors(s)) {
            if (data.delta[v] != 1) continue;
            ++white_neighbors;
            auto it = m.edge_weights.find(v);
            if (it == m.edge_weights.end())
                throw InternalInconsistency("missing edge weight " + std::to_string(s) + "-" + std::to_string(v));
            if (it->second == Rational(0))
                throw InternalInconsistency("zero edge weight " + std::to_string(s) + "-" + std::to_string(v));
            const auto& back = data.models[v].edge_weights;
            auto rit = back.find(s);
            if (rit == back.end() || it->second * rit->second != Rational(1))
                throw InternalInconsistency("reciprocity fails on edge " + std::to_string(s) + "-" +
                                            std::to_string(v));
            total += it->second;
        }
        if (static_cast<i64>(m.edge_weights.size()) != white_neighbors)
            throw InternalInconsistency("stray edge weights at vertex " + std::to_string(s));
        if (total != Rational(m.self_int_magnitude))
            throw InternalInconsistency("Camacho-Sad sum fails at vertex " + std::to_string(s));
    }
}

IndexSums index_sums(const ResolutionTree& tree, const Numbering& n) {
    const SaitoSolution sol = saito_inductive(tree, n);
    const auto rho = multiplicities(tree);
    IndexSums sums;
    sums.totals.resize(static_cast<std::size_t>(tree.size()));
    i64 weighted = 0;
    for (VertexId s = 0; s < tree.size(); ++s) {
        i64 white_neighbors = 0;
        for (VertexId v : tree.neighbors(s)) white_neighbors += sol.delta[v];
        sums.totals[s] =
            sol.delta[s] == 1 ? sol.epsilon[s] + white_neighbors : sol.epsilon[s] - 2 + white_neighbors;
        weighted += rho[s] * sol.epsilon[s];
    }
    sums.weighted_sum = weighted;
    const auto nu = valuations(tree, n);
    if (weighted != saito_number_of(sol, nu) + 1)
        throw InternalInconsistency("index sums do not reconcile with the Saito number");
    return sums;
}

}  // namespace saito
