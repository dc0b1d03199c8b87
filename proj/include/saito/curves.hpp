#pragma once

#include <string>
#include <vector>

#include "saito/tree.hpp"

namespace saito {

struct NumberedTree {
    ResolutionTree tree;
    Numbering numbering;
};

// Multiplicity sequence of the irreducible branch with characteristic
// exponents (beta0; beta1..betag), by the subtractive Euclidean algorithm.
std::vector<i64> multiplicity_sequence(i64 beta0, const std::vector<i64>& betas);

// Resolution tree of that branch: one vertex per infinitely near point, each
// point proximate to its predecessor and satellite points to one more; the
// numbering is 1 at the last vertex. The valuations of the result reproduce
// the multiplicity sequence.
NumberedTree tree_from_char_exponents(i64 beta0, const std::vector<i64>& betas);

// Built-in families: cusp, r_cusps (one even integer parameter), double_cusp,
// example1.
NumberedTree builtin_family(const std::string& name, const std::vector<i64>& params);

struct MilnorResult {
    i64 mu;
    i64 branch_count;
};

// mu = sum nu(nu-1) - r + 1 with r the total branch count.
MilnorResult milnor_number(const ResolutionTree& tree, const Numbering& n);

}  // namespace saito
