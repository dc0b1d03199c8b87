#pragma once

#include <boost/rational.hpp>
#include <map>
#include <vector>

#include "saito/dicriticity.hpp"
#include "saito/tree.hpp"

namespace saito {

using Rational = boost::rational<i64>;

struct SaitoProfile {
    i64 saito_number = 0;
    std::vector<i64> per_vertex;  // valuation of the Saito field's strict transform at each vertex
    Dicriticity dicriticity;
    Configuration epsilon;
};

// Root instance of the valuation formula: nu_root/2 - [1 - Delta_root | 1/2].
// Also asserts the reconciliation identity sum(rho eps) = result + 1.
i64 saito_number(const ResolutionTree& tree, const Numbering& n);

// Per-vertex (nu_s + delta_s)/2 - [1 - Delta_s | 1/2]_{nu_s + delta_s} under
// the Saito dicriticity.
SaitoProfile saito_valuation_profile(const ResolutionTree& tree, const Numbering& n);

// Topological upper bound: s <= floor(nu_root / 2).
bool check_upper_bound(const ResolutionTree& tree, const Numbering& n, i64 s);

// Semi-local model data for one vertex of the gluing.
struct VertexModel {
    bool dicritical = false;                // black vertex: model R_{p, tangency_count}
    i64 self_int_magnitude = 0;             // p = -I_{s,s}
    i64 tangency_count = 0;                 // black only: eps - 2 + white neighbours
    std::vector<Rational> free_weights;     // white only: eps of them
    std::map<VertexId, Rational> edge_weights;  // white only: one per white neighbour
};

struct GluingData {
    Dicriticity delta;
    Configuration epsilon;
    std::vector<VertexModel> models;  // one per vertex
};

// Exact rational Camacho-Sad weights: at every white vertex the free and edge
// weights sum to p_s, reciprocal edge weights multiply to 1, nothing is zero,
// and black tangency counts are nonnegative. Deterministic for a given seed;
// the seed only shifts the retry perturbations on forced zeros.
GluingData gluing_data(const ResolutionTree& tree, const Numbering& n, unsigned seed = 0);

// Throws InternalInconsistency if any GluingData invariant fails.
void validate_gluing(const ResolutionTree& tree, const GluingData& data);

struct IndexSums {
    std::vector<i64> totals;  // Ind-sum at white vertices, Tan-sum at black ones
    i64 weighted_sum = 0;     // sum rho_s eps_s, checked to equal saito_number + 1
};

IndexSums index_sums(const ResolutionTree& tree, const Numbering& n);

}  // namespace saito
