#include "saito/moduli.hpp"

#include <algorithm>
#include <deque>

#include "saito/errors.hpp"

namespace saito {

BlowupStep blowup_root(const ResolutionTree& tree, const Numbering& n) {
    if (static_cast<int>(n.size()) != tree.size())
        throw SaitoError("numbering size does not match the tree");
    Numbering bumped = n;
    for (VertexId v : tree.neighbors(0)) bumped[v] += 1;

    BlowupStep step;
    std::vector<bool> seen(static_cast<std::size_t>(tree.size()), false);
    seen[0] = true;
    for (VertexId start = 1; start < tree.size(); ++start) {
        if (seen[start]) continue;
        std::vector<VertexId> comp{start};
        seen[start] = true;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (VertexId w : tree.neighbors(comp[i]))
                if (w != 0 && !seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        std::vector<int> local(static_cast<std::size_t>(tree.size()), -1);
        for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
        std::vector<std::vector<VertexId>> parents(comp.size());
        Numbering sub(comp.size());
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (VertexId p : tree.parents(comp[i]))
                if (p != 0) parents[i].push_back(local[p]);
            sub[i] = bumped[comp[i]];
        }
        step.components.push_back({ResolutionTree::from_parent_sets(parents), std::move(sub), std::move(comp)});
    }
    return step;
}

namespace {

constexpr i64 triangle(i64 k) { return k >= 2 ? k * (k - 1) / 2 : 0; }

}  // namespace

i64 default_level_rule(const ResolutionTree& tree, const Numbering& n) {
    const SaitoSolution sol = saito_inductive(tree, n);
    const auto nu = valuations(tree, n);
    const i64 nu_root = nu[0];
    const HalfInt s_half =
        HalfInt::from_twice(nu_root) - parity_select(HalfInt(1 - sol.delta[0]), HalfInt::half(), nu_root);
    const i64 s = s_half.to_integer();
    const bool even = nu_root % 2 == 0;
    i64 value = triangle(s - 1) + triangle(s - (even ? sol.delta[0] : 0));
    if (sol.delta[0] == 0) value += std::max<i64>(0, n[0] - 3);
    return value;
}

LevelContribution level_contribution(const ResolutionTree& tree, const Numbering& n, const LevelRule& rule,
                                     int level_index) {
    LevelContribution out;
    out.level_index = level_index;
    out.numbering = n;
    const SaitoSolution sol = saito_inductive(tree, n);
    out.delta = sol.delta;
    out.epsilon = sol.epsilon;
    out.value = rule(tree, n);
    if (out.value < 0)
        throw UnsupportedInstance("level rule produced a negative contribution at level " +
                                  std::to_string(level_index));
    return out;
}

ModuliReport generic_moduli_dimension(const ResolutionTree& tree, const Numbering& n, const LevelRule& rule) {
    ModuliReport report;
    struct Item {
        ResolutionTree tree;
        Numbering numbering;
        int level;
    };
    std::deque<Item> work;
    work.push_back({tree, n, 1});
    while (!work.empty()) {
        Item item = std::move(work.front());
        work.pop_front();
        report.levels.push_back(level_contribution(item.tree, item.numbering, rule, item.level));
        report.total += report.levels.back().value;
        for (auto& comp : blowup_root(item.tree, item.numbering).components)
            work.push_back({std::move(comp.tree), std::move(comp.numbering), item.level + 1});
    }
    return report;
}

i64 generic_tjurina(i64 mu, i64 delta_modularity, i64 dim) {
    const i64 tau = mu - delta_modularity + dim;
    if (tau < 0)
        throw NegativeResult("tau = " + std::to_string(tau) + " is negative; inputs are inconsistent");
    return tau;
}

}  // namespace saito
