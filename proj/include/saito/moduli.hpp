#pragma once

#include <functional>
#include <vector>

#include "saito/dicriticity.hpp"
#include "saito/tree.hpp"

namespace saito {

struct BlowupComponent {
    ResolutionTree tree;
    Numbering numbering;
    std::vector<VertexId> original_ids;  // component vertex -> id in the parent tree
};

struct BlowupStep {
    std::vector<BlowupComponent> components;
};

// Removes the root: each connected component of the remainder is re-rooted at
// its minimal vertex and the numbering gains 1 at every former root neighbour
// (the removed divisor becomes a branch there).
BlowupStep blowup_root(const ResolutionTree& tree, const Numbering& n);

// Dimension contributed by one blow-up level. Replaceable; the default rule
// must reproduce the r-cusps levels and the Peraire total.
using LevelRule = std::function<i64(const ResolutionTree&, const Numbering&)>;

// Default rule, driven by the root data of the level instance: with
// s = saito_number and nu = nu_root,
//   T(s - 1) + T(s - Delta_root * [nu even]) + (black root ? max(0, n_root - 3) : 0)
// where T(k) = k(k-1)/2. The last term counts the moduli of the attachment
// points on a dicritical root component.
i64 default_level_rule(const ResolutionTree& tree, const Numbering& n);

struct LevelContribution {
    int level_index = 1;  // 1-based blow-up depth
    i64 value = 0;
    Numbering numbering;
    Dicriticity delta;
    Configuration epsilon;
};

LevelContribution level_contribution(const ResolutionTree& tree, const Numbering& n,
                                     const LevelRule& rule = default_level_rule, int level_index = 1);

struct ModuliReport {
    std::vector<LevelContribution> levels;  // breadth-first over levels and components
    i64 total = 0;
};

// Iterates blowup_root over all components until no vertices remain, summing
// the level contributions.
ModuliReport generic_moduli_dimension(const ResolutionTree& tree, const Numbering& n,
                                      const LevelRule& rule = default_level_rule);

// tau_gen = mu - delta_modularity + dim. Throws NegativeResult when negative.
i64 generic_tjurina(i64 mu, i64 delta_modularity, i64 dim);

}  // namespace saito
