#pragma once

#include <string>

#include "saito/analysis.hpp"
#include "saito/curves.hpp"
#include "saito/moduli.hpp"

#include <json.hpp>

namespace saito {

// Text format, one vertex per line in construction order:
//   saito-tree v1
//   vertex 0 parents=- n=0
//   vertex 1 parents=0 n=0
//   vertex 2 parents=0,1 n=1
// '#' starts a comment line. Parsing replays the records through the
// construction rules, so rule-2 validity is checked on the way in.
NumberedTree parse_tree(const std::string& text);
std::string serialize_tree(const ResolutionTree& tree, const Numbering& n);

// Graphviz export of the colored numbered tree; white = invariant vertex,
// black = dicritical (with white label text). Deterministic output.
std::string emit_dot(const ResolutionTree& tree, const Numbering& n, const Dicriticity& delta,
                     const Configuration& epsilon);

std::string rational_string(const Rational& r);

// Structured report pieces. Every number is an exact integer or a "p/q" string.
nlohmann::json tree_json(const ResolutionTree& tree, const Numbering& n);
nlohmann::json analysis_json(const ResolutionTree& tree, const Numbering& n);
nlohmann::json profile_json(const ResolutionTree& tree, const Numbering& n);
nlohmann::json gluing_json(const ResolutionTree& tree, const Numbering& n, unsigned seed);
nlohmann::json moduli_json(const ResolutionTree& tree, const Numbering& n);
nlohmann::json tjurina_json(const ResolutionTree& tree, const Numbering& n, i64 modularity);

}  // namespace saito
