#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "saito/analysis.hpp"
#include "saito/curves.hpp"
#include "saito/errors.hpp"
#include "saito/io.hpp"
#include "saito/moduli.hpp"

namespace py = pybind11;
using namespace saito;

namespace {

py::object to_fraction(i64 num, i64 den) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(num, den);
}

py::object to_fraction(const Rational& r) { return to_fraction(r.numerator(), r.denominator()); }
py::object to_fraction(const HalfInt& h) { return to_fraction(h.twice(), 2); }

py::dict solution_dict(const SaitoSolution& sol) {
    py::dict d;
    d["delta"] = std::vector<int>(sol.delta.begin(), sol.delta.end());
    d["epsilon"] = sol.epsilon;
    return d;
}

py::dict gluing_dict(const ResolutionTree& tree, const GluingData& data) {
    py::dict d = solution_dict({data.delta, data.epsilon});
    py::list models;
    for (VertexId v = 0; v < tree.size(); ++v) {
        const VertexModel& m = data.models[v];
        py::dict entry;
        entry["vertex"] = v;
        entry["self_intersection"] = -m.self_int_magnitude;
        entry["dicritical"] = m.dicritical;
        if (m.dicritical) {
            entry["tangency_count"] = m.tangency_count;
        } else {
            py::list frees;
            for (const Rational& w : m.free_weights) frees.append(to_fraction(w));
            entry["free_weights"] = frees;
            py::dict edges;
            for (const auto& [to, w] : m.edge_weights) edges[py::int_(to)] = to_fraction(w);
            entry["edge_weights"] = edges;
        }
        models.append(entry);
    }
    d["models"] = models;
    return d;
}

}  // namespace

PYBIND11_MODULE(_saitotree, m) {
    m.doc() = "Saito dicriticities, configurations and moduli dimensions of numbered resolution trees";

    py::register_exception<SaitoError>(m, "SaitoError");

    py::class_<ResolutionTree>(m, "Tree")
        .def_static("from_parent_sets", &ResolutionTree::from_parent_sets, py::arg("parents"))
        .def_property_readonly("size", &ResolutionTree::size)
        .def("parents", &ResolutionTree::parents, py::arg("v"))
        .def("children", &ResolutionTree::children, py::arg("v"))
        .def("neighbors", &ResolutionTree::neighbors, py::arg("v"))
        .def("parent_sets", &ResolutionTree::parent_sets)
        .def("leq", &ResolutionTree::leq, py::arg("a"), py::arg("b"))
        .def("access_tree", &ResolutionTree::access_tree, py::arg("c"), py::arg("c_prime"))
        .def("__eq__", [](const ResolutionTree& a, const ResolutionTree& b) { return a == b; })
        .def("__len__", &ResolutionTree::size)
        .def("__repr__", [](const ResolutionTree& t) {
            return "<saitotree.Tree with " + std::to_string(t.size()) + " vertices>";
        });

    m.def(
        "parse",
        [](const std::string& text) {
            NumberedTree doc = parse_tree(text);
            return py::make_tuple(doc.tree, doc.numbering);
        },
        py::arg("text"), "Parse a tree document; returns (tree, numbering).");
    m.def("serialize", &serialize_tree, py::arg("tree"), py::arg("numbering"));
    m.def(
        "family",
        [](const std::string& name, const std::vector<i64>& params) {
            NumberedTree doc = builtin_family(name, params);
            return py::make_tuple(doc.tree, doc.numbering);
        },
        py::arg("name"), py::arg("params") = std::vector<i64>{});
    m.def(
        "from_char_exponents",
        [](i64 beta0, const std::vector<i64>& betas) {
            NumberedTree doc = tree_from_char_exponents(beta0, betas);
            return py::make_tuple(doc.tree, doc.numbering);
        },
        py::arg("beta0"), py::arg("betas"));
    m.def("multiplicity_sequence", &multiplicity_sequence, py::arg("beta0"), py::arg("betas"));

    m.def("multiplicities", &multiplicities, py::arg("tree"));
    m.def("valuations", &valuations, py::arg("tree"), py::arg("numbering"));
    m.def(
        "saito",
        [](const ResolutionTree& tree, const Numbering& n) { return solution_dict(saito_inductive(tree, n)); },
        py::arg("tree"), py::arg("numbering"),
        "Unique admissible (Saito) dicriticity and its configuration.");
    m.def(
        "saito_bruteforce",
        [](const ResolutionTree& tree, const Numbering& n, int cap) {
            return solution_dict(saito_bruteforce(tree, n, cap));
        },
        py::arg("tree"), py::arg("numbering"), py::arg("cap") = kBruteforceCap);
    m.def("saito_number", &saito_number, py::arg("tree"), py::arg("numbering"));
    m.def(
        "profile",
        [](const ResolutionTree& tree, const Numbering& n) {
            const SaitoProfile p = saito_valuation_profile(tree, n);
            py::dict d = solution_dict({p.dicriticity, p.epsilon});
            d["saito_number"] = p.saito_number;
            d["valuations"] = p.per_vertex;
            return d;
        },
        py::arg("tree"), py::arg("numbering"));
    m.def(
        "milnor",
        [](const ResolutionTree& tree, const Numbering& n) {
            const MilnorResult r = milnor_number(tree, n);
            return py::make_tuple(r.mu, r.branch_count);
        },
        py::arg("tree"), py::arg("numbering"), "Returns (mu, branch_count).");
    m.def(
        "moduli",
        [](const ResolutionTree& tree, const Numbering& n) {
            const ModuliReport r = generic_moduli_dimension(tree, n);
            py::list levels;
            for (const auto& level : r.levels) {
                py::dict entry;
                entry["level"] = level.level_index;
                entry["value"] = level.value;
                entry["numbering"] = level.numbering;
                entry["delta"] = std::vector<int>(level.delta.begin(), level.delta.end());
                entry["epsilon"] = level.epsilon;
                levels.append(entry);
            }
            py::dict d;
            d["levels"] = levels;
            d["total"] = r.total;
            return d;
        },
        py::arg("tree"), py::arg("numbering"));
    m.def("tjurina", &generic_tjurina, py::arg("mu"), py::arg("modularity"), py::arg("dim"));
    m.def("check_upper_bound", &check_upper_bound, py::arg("tree"), py::arg("numbering"), py::arg("s"));
    m.def(
        "index_sums",
        [](const ResolutionTree& tree, const Numbering& n) {
            const IndexSums s = index_sums(tree, n);
            return py::make_tuple(s.totals, s.weighted_sum);
        },
        py::arg("tree"), py::arg("numbering"),
        "Per-vertex Ind/Tan totals and the weighted sum rho*eps (= saito_number + 1).");
    m.def(
        "gluing",
        [](const ResolutionTree& tree, const Numbering& n, unsigned seed) {
            return gluing_dict(tree, gluing_data(tree, n, seed));
        },
        py::arg("tree"), py::arg("numbering"), py::arg("seed") = 0u);
    m.def(
        "theta01",
        [](const ResolutionTree& tree, const Numbering& n, VertexId c) { return to_fraction(theta01(tree, n, c)); },
        py::arg("tree"), py::arg("numbering"), py::arg("c"));
    m.def(
        "theta02",
        [](const ResolutionTree& tree, const Numbering& n, VertexId c0, VertexId c1) {
            return to_fraction(theta02(tree, n, c0, c1));
        },
        py::arg("tree"), py::arg("numbering"), py::arg("c0"), py::arg("c1"));
    m.def(
        "theta11",
        [](const ResolutionTree& tree, const Numbering& n, VertexId c0, VertexId c1) {
            return to_fraction(theta11(tree, n, c0, c1));
        },
        py::arg("tree"), py::arg("numbering"), py::arg("c0"), py::arg("c1"));
    m.def(
        "dot",
        [](const ResolutionTree& tree, const Numbering& n) {
            const SaitoSolution sol = saito_inductive(tree, n);
            return emit_dot(tree, n, sol.delta, sol.epsilon);
        },
        py::arg("tree"), py::arg("numbering"));
}
