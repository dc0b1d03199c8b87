#include "saito/dicriticity.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "saito/errors.hpp"

namespace saito {

namespace {

void require_sizes(const ResolutionTree& tree, const Numbering& n) {
    if (static_cast<int>(n.size()) != tree.size())
        throw SaitoError("numbering has " + std::to_string(n.size()) + " entries for a tree of size " +
                         std::to_string(tree.size()));
}

void require_sizes(const ResolutionTree& tree, const Dicriticity& delta) {
    if (static_cast<int>(delta.size()) != tree.size())
        throw SaitoError("dicriticity has " + std::to_string(delta.size()) + " entries for a tree of size " +
                         std::to_string(tree.size()));
}

}  // namespace

std::vector<i64> delta_count(const ResolutionTree& tree, const Dicriticity& delta) {
    require_sizes(tree, delta);
    std::vector<i64> dc(static_cast<std::size_t>(tree.size()), 0);
    for (VertexId v = 0; v < tree.size(); ++v)
        for (VertexId p : tree.parents(v)) dc[v] += delta[p];
    return dc;
}

namespace {

// Per-(tree, numbering) data reused across the 2^N dicriticities of the brute
// force sweep: valuations and the flattened access lists of the neighbour
// expansion route.
struct EvalContext {
    std::vector<i64> nu;
    std::vector<std::vector<VertexId>> expansion;  // per vertex, the s != c of all upper access trees
};

EvalContext make_context(const ResolutionTree& tree, const Numbering& n) {
    EvalContext ctx;
    ctx.nu = valuations(tree, n);
    ctx.expansion.resize(static_cast<std::size_t>(tree.size()));
    for (VertexId c = 0; c < tree.size(); ++c)
        for (VertexId v : tree.neighbors(c)) {
            if (v < c) continue;  // every edge joins comparable vertices, the smaller id below
            for (VertexId s : tree.access_tree(c, v))
                if (s != c) ctx.expansion[c].push_back(s);
        }
    return ctx;
}

std::vector<HalfInt> squares_from(const ResolutionTree& tree, const std::vector<i64>& nu,
                                  const Dicriticity& delta) {
    std::vector<HalfInt> sq(static_cast<std::size_t>(tree.size()));
    for (VertexId c = 0; c < tree.size(); ++c) {
        i64 dc = 0;
        for (VertexId p : tree.parents(c)) dc += delta[p];
        sq[c] = HalfInt::from_twice(dc) - parity_select(HalfInt(delta[c]), HalfInt::half(), nu[c] - dc);
    }
    return sq;
}

Configuration configuration_from(const ResolutionTree& tree, const Numbering& n, const EvalContext& ctx,
                                 const Dicriticity& delta) {
    const int size = tree.size();
    const auto sq = squares_from(tree, ctx.nu, delta);
    Configuration eps(static_cast<std::size_t>(size));
    for (VertexId c = 0; c < size; ++c) {
        // matrix route: eps = P(nu/2 - sq), row c picking up -1 at every child
        HalfInt direct = HalfInt::from_twice(n[c]) - sq[c];
        for (VertexId j : tree.children(c)) direct += sq[j];
        // neighbour access-tree expansion of the same row
        HalfInt expanded = HalfInt::from_twice(n[c]) - sq[c];
        for (VertexId s : ctx.expansion[c]) expanded += sq[s];
        if (direct != expanded)
            throw InternalInconsistency("configuration routes disagree at vertex " + std::to_string(c) + ": " +
                                        direct.str() + " vs " + expanded.str());
        if (!direct.is_integer())
            throw IntegralityViolation("configuration entry at vertex " + std::to_string(c) +
                                       " is not an integer: " + direct.str());
        eps[c] = direct.to_integer();
    }
    return eps;
}

Admissibility check_admissible_from(const ResolutionTree& tree, const Numbering& n, const EvalContext& ctx,
                                    const Dicriticity& delta) {
    Admissibility result;
    result.epsilon = configuration_from(tree, n, ctx, delta);
    for (VertexId c = 0; c < tree.size(); ++c) {
        i64 bound;
        if (delta[c] == 1) {
            bound = n[c];
        } else {
            i64 white_neighbors = 0;
            for (VertexId v : tree.neighbors(c)) white_neighbors += delta[v];
            bound = 2 - white_neighbors;
        }
        if (result.epsilon[c] < bound) result.violations.push_back({c, result.epsilon[c], bound});
    }
    result.admissible = result.violations.empty();
    return result;
}

}  // namespace

std::vector<HalfInt> square_indices(const ResolutionTree& tree, const Numbering& n, const Dicriticity& delta) {
    require_sizes(tree, n);
    require_sizes(tree, delta);
    return squares_from(tree, valuations(tree, n), delta);
}

HalfInt square_index(const ResolutionTree& tree, const Numbering& n, const Dicriticity& delta, VertexId c) {
    return square_indices(tree, n, delta)[c];
}

Configuration configuration(const ResolutionTree& tree, const Numbering& n, const Dicriticity& delta) {
    require_sizes(tree, n);
    require_sizes(tree, delta);
    return configuration_from(tree, n, make_context(tree, n), delta);
}

Admissibility check_admissible(const ResolutionTree& tree, const Numbering& n, const Dicriticity& delta) {
    require_sizes(tree, n);
    require_sizes(tree, delta);
    return check_admissible_from(tree, n, make_context(tree, n), delta);
}

SaitoSolution saito_bruteforce(const ResolutionTree& tree, const Numbering& n, int cap) {
    require_sizes(tree, n);
    const int size = tree.size();
    if (size > cap)
        throw TreeTooLarge("brute force cap is " + std::to_string(cap) + " vertices, tree has " +
                           std::to_string(size));
    const EvalContext ctx = make_context(tree, n);
    std::vector<SaitoSolution> found;
    Dicriticity delta(static_cast<std::size_t>(size));
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << size); ++bits) {
        for (int v = 0; v < size; ++v) delta[v] = static_cast<std::uint8_t>((bits >> v) & 1);
        Admissibility a = check_admissible_from(tree, n, ctx, delta);
        if (a.admissible) found.push_back({delta, std::move(a.epsilon)});
    }
    if (found.size() != 1)
        throw UniquenessViolation("expected exactly one admissible dicriticity, found " +
                                  std::to_string(found.size()));
    return found.front();
}

Numbering bump(const Numbering& n, VertexId c) {
    Numbering out = n;
    out.at(static_cast<std::size_t>(c)) += 1;
    return out;
}

namespace {

// One connected component of tree \ {root}, re-rooted at its minimal vertex.
struct Component {
    ResolutionTree tree;
    std::vector<VertexId> orig_ids;   // local -> parent-tree id, ascending
    VertexId attach_local;            // the unique vertex adjacent to the removed root
};

std::vector<Component> split_at_root(const ResolutionTree& tree) {
    const int size = tree.size();
    std::vector<Component> out;
    std::vector<bool> seen(static_cast<std::size_t>(size), false);
    seen[0] = true;
    for (VertexId start = 1; start < size; ++start) {
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
        std::vector<int> local(static_cast<std::size_t>(size), -1);
        for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
        std::vector<std::vector<VertexId>> parents(comp.size());
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (VertexId p : tree.parents(comp[i]))
                if (p != 0) parents[i].push_back(local[p]);
        VertexId attach = -1;
        for (VertexId v : tree.neighbors(0))
            if (local[v] >= 0) {
                if (attach != -1) throw InternalInconsistency("component touches the root twice");
                attach = local[v];
            }
        if (attach == -1) throw InternalInconsistency("component does not touch the root");
        out.push_back({ResolutionTree::from_parent_sets(parents), std::move(comp), attach});
    }
    return out;
}

using MemoKey = std::pair<std::vector<VertexId>, Numbering>;

SaitoSolution solve_inductive(const ResolutionTree& tree, const Numbering& n,
                              const std::vector<VertexId>& orig_ids,
                              std::map<MemoKey, SaitoSolution>& memo) {
    MemoKey key{orig_ids, n};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const auto comps = split_at_root(tree);
    struct Solved {
        const Component* comp;
        SaitoSolution plain;   // component numbering as inherited
        SaitoSolution bumped;  // inherited numbering bumped at the attach vertex
    };
    std::vector<Solved> solved;
    solved.reserve(comps.size());
    for (const auto& comp : comps) {
        Numbering sub(comp.orig_ids.size());
        std::vector<VertexId> sub_orig(comp.orig_ids.size());
        for (std::size_t i = 0; i < comp.orig_ids.size(); ++i) {
            sub[i] = n[comp.orig_ids[i]];
            sub_orig[i] = orig_ids[comp.orig_ids[i]];
        }
        SaitoSolution plain = solve_inductive(comp.tree, sub, sub_orig, memo);
        SaitoSolution bumped = solve_inductive(comp.tree, bump(sub, comp.attach_local), sub_orig, memo);
        solved.push_back({&comp, std::move(plain), std::move(bumped)});
    }

    auto assemble = [&](std::uint8_t root_color) {
        Dicriticity delta(static_cast<std::size_t>(tree.size()), 0);
        delta[0] = root_color;
        for (const auto& s : solved) {
            const Dicriticity& part = root_color == 1 ? s.bumped.delta : s.plain.delta;
            for (std::size_t i = 0; i < s.comp->orig_ids.size(); ++i) delta[s.comp->orig_ids[i]] = part[i];
        }
        return delta;
    };

    Dicriticity white = assemble(1);
    Dicriticity black = assemble(0);
    Configuration eps_white = configuration(tree, n, white);
    Configuration eps_black = configuration(tree, n, black);

    const bool white_ok = eps_white[0] >= n[0];
    i64 white_neighbors = 0;
    for (VertexId v : tree.neighbors(0)) white_neighbors += black[v];
    const bool black_ok = eps_black[0] >= 2 - white_neighbors;
    if (white_ok == black_ok)
        throw InternalInconsistency(std::string("root admissibility held for ") +
                                    (white_ok ? "both" : "neither") + " candidate dicriticity");

    SaitoSolution out = white_ok ? SaitoSolution{std::move(white), std::move(eps_white)}
                                 : SaitoSolution{std::move(black), std::move(eps_black)};
    memo.emplace(std::move(key), out);
    return out;
}

}  // namespace

SaitoSolution saito_inductive(const ResolutionTree& tree, const Numbering& n) {
    require_sizes(tree, n);
    std::vector<VertexId> ids(static_cast<std::size_t>(tree.size()));
    for (int i = 0; i < tree.size(); ++i) ids[i] = i;
    std::map<MemoKey, SaitoSolution> memo;
    return solve_inductive(tree, n, ids, memo);
}

HalfInt theta01(const ResolutionTree& tree, const Numbering& n, VertexId c) {
    const auto chain = tree.access_chain(c);
    const auto sq_n = square_indices(tree, n, saito_inductive(tree, n).delta);
    const Numbering nc = bump(n, c);
    const auto sq_cn = square_indices(tree, nc, saito_inductive(tree, nc).delta);
    HalfInt total;
    for (VertexId s : chain) total += sq_n[s] + sq_cn[s];
    return total;
}

HalfInt theta02(const ResolutionTree& tree, const Numbering& n, VertexId c0, VertexId c1) {
    const auto chain = tree.access_chain(c1);
    const auto sq_n = square_indices(tree, n, saito_inductive(tree, n).delta);
    const Numbering n2 = bump(bump(n, c0), c1);
    const auto sq_n2 = square_indices(tree, n2, saito_inductive(tree, n2).delta);
    HalfInt total;
    for (VertexId s : chain) total += sq_n[s] + sq_n2[s];
    return total;
}

HalfInt theta11(const ResolutionTree& tree, const Numbering& n, VertexId c0, VertexId c1) {
    const auto chain = tree.access_chain(c1);
    const Numbering na = bump(n, c0);
    const Numbering nb = bump(n, c1);
    const auto sq_a = square_indices(tree, na, saito_inductive(tree, na).delta);
    const auto sq_b = square_indices(tree, nb, saito_inductive(tree, nb).delta);
    HalfInt total;
    for (VertexId s : chain) total += sq_a[s] + sq_b[s];
    return total;
}

std::optional<MixedBranchReport> find_mixed_branch(const ResolutionTree& tree, const Numbering& n, VertexId c) {
    if (multiplicities(tree)[c] != 1)
        throw SaitoError("mixed branches are defined for multiplicity-1 vertices only");
    MixedBranchReport report;
    report.c = c;
    report.chain = tree.access_chain(c);

    const SaitoSolution sol_n = saito_inductive(tree, n);
    const Numbering nc = bump(n, c);
    const SaitoSolution sol_cn = saito_inductive(tree, nc);
    const auto nu_n = valuations(tree, n);
    const auto nu_cn = valuations(tree, nc);

    for (VertexId s : report.chain) {
        report.delta_n.push_back(sol_n.delta[s]);
        report.delta_cn.push_back(sol_cn.delta[s]);
        report.nu_n.push_back(nu_n[s]);
    }
    report.nu_root_n = nu_n[report.chain.front()];
    report.nu_root_cn = nu_cn[report.chain.front()];

    if (report.delta_n[0] + report.delta_cn[0] != 1) return std::nullopt;  // the root is not mixed

    std::size_t m = 0;
    while (m + 1 < report.chain.size() && report.delta_n[m + 1] + report.delta_cn[m + 1] == 1) ++m;
    report.m_c = report.chain[m];
    report.is_pure = (m + 1 == report.chain.size());
    if (!report.is_pure) {
        report.m_c_plus = report.chain[m + 1];
        report.nu_mplus_n = nu_n[report.chain[m + 1]];
        report.nu_mplus_cn = nu_cn[report.chain[m + 1]];
    }
    return report;
}

bool check_mixed_inequality(const MixedBranchReport& r) {
    const HalfInt start = parity_select(HalfInt(r.delta_n[0]), HalfInt(r.delta_cn[0]), r.nu_root_n);
    if (r.is_pure) {
        bool ok = start >= HalfInt(1);
        if (r.chain.size() > 1) ok = ok && r.delta_n.back() == 1;
        return ok;
    }
    std::size_t pos = 0;
    while (r.chain[pos] != *r.m_c_plus) ++pos;  // first non-mixing position
    const i64 delta_prev = r.delta_n[pos - 1];
    const HalfInt end = parity_select(HalfInt(r.delta_n[pos]), HalfInt(1 - r.delta_n[pos]),
                                      r.nu_n[pos] - delta_prev);
    return start - end >= HalfInt(1);
}

std::vector<std::vector<VertexId>> white_components(const ResolutionTree& tree, const Dicriticity& delta) {
    require_sizes(tree, delta);
    std::vector<std::vector<VertexId>> comps;
    std::vector<bool> seen(static_cast<std::size_t>(tree.size()), false);
    for (VertexId v = 0; v < tree.size(); ++v) {
        if (seen[v] || delta[v] != 1) continue;
        std::vector<VertexId> comp{v};
        seen[v] = true;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (VertexId w : tree.neighbors(comp[i]))
                if (!seen[w] && delta[w] == 1) {
                    seen[w] = true;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace saito
