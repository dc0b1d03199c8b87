#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "saito/half_integer.hpp"
#include "saito/tree.hpp"

namespace saito {

// Per-vertex coloring: 1 = white (invariant component), 0 = black (dicritical).
using Dicriticity = std::vector<std::uint8_t>;
using Configuration = std::vector<i64>;

// Number of white parents of each vertex; always 0 at the root.
std::vector<i64> delta_count(const ResolutionTree& tree, const Dicriticity& delta);

// Square index of one vertex: delta_c/2 - [Delta_c | 1/2]_{nu_c - delta_c}.
HalfInt square_index(const ResolutionTree& tree, const Numbering& n, const Dicriticity& delta, VertexId c);
std::vector<HalfInt> square_indices(const ResolutionTree& tree, const Numbering& n, const Dicriticity& delta);

// Configuration eps = P(nu/2 - sq). Evaluated both directly and through the
// neighbour access-tree expansion; the two routes must agree and the entries
// must be integers (IntegralityViolation / InternalInconsistency otherwise).
Configuration configuration(const ResolutionTree& tree, const Numbering& n, const Dicriticity& delta);

struct AdmissibilityViolation {
    VertexId vertex;
    i64 epsilon;
    i64 bound;  // eps_vertex >= bound failed
};

struct Admissibility {
    bool admissible = false;
    std::vector<AdmissibilityViolation> violations;  // ascending vertex order
    Configuration epsilon;
};

// White vertices need eps_c >= n_c, black ones eps_c >= 2 - (white neighbours).
Admissibility check_admissible(const ResolutionTree& tree, const Numbering& n, const Dicriticity& delta);

struct SaitoSolution {
    Dicriticity delta;
    Configuration epsilon;
};

inline constexpr int kBruteforceCap = 20;

// Enumerates all 2^N dicriticities and returns the unique admissible one.
// Throws TreeTooLarge beyond the cap and UniquenessViolation if the count of
// admissible dicriticities is not exactly one (which would be a bug).
SaitoSolution saito_bruteforce(const ResolutionTree& tree, const Numbering& n, int cap = kBruteforceCap);

// Inductive solver from the gluing construction: solves each component of
// A \ {root} under the plain and bumped numberings, assembles the two root
// candidates and keeps the one satisfying the root admissibility condition.
// Subproblems are memoized per invocation.
SaitoSolution saito_inductive(const ResolutionTree& tree, const Numbering& n);

// n with the entry at c incremented.
Numbering bump(const Numbering& n, VertexId c);

// Theta invariants: sums of square indices over the access chain of c (resp.
// c1) under the Saito dicriticities of the listed numberings.
HalfInt theta01(const ResolutionTree& tree, const Numbering& n, VertexId c);
HalfInt theta02(const ResolutionTree& tree, const Numbering& n, VertexId c0, VertexId c1);
HalfInt theta11(const ResolutionTree& tree, const Numbering& n, VertexId c0, VertexId c1);

// Mixed branch of the access chain of c (requires rho_c = 1): the maximal
// prefix on which the Saito dicriticities for n and c.n disagree everywhere.
struct MixedBranchReport {
    VertexId c = 0;
    VertexId m_c = 0;                      // maximal mixed vertex
    bool is_pure = false;                  // m_c == c
    std::optional<VertexId> m_c_plus;      // successor of m_c in the chain
    std::vector<VertexId> chain;           // the access chain of c, ascending
    std::vector<std::uint8_t> delta_n;     // Delta^n along the chain
    std::vector<std::uint8_t> delta_cn;    // Delta^{c.n} along the chain
    std::vector<i64> nu_n;                 // nu^n along the chain
    i64 nu_root_n = 0;                     // = nu_n.front()
    i64 nu_root_cn = 0;
    std::optional<i64> nu_mplus_n;
    std::optional<i64> nu_mplus_cn;
};

std::optional<MixedBranchReport> find_mixed_branch(const ResolutionTree& tree, const Numbering& n, VertexId c);

// Terminal inequality of the mixed-branch proof; pure branches use the
// reduced form (and force a white end when the branch has length > 1).
bool check_mixed_inequality(const MixedBranchReport& report);

// Connected components of the subgraph induced on white vertices.
std::vector<std::vector<VertexId>> white_components(const ResolutionTree& tree, const Dicriticity& delta);

}  // namespace saito
