#include "saito/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "saito/errors.hpp"

namespace saito {

namespace {

constexpr const char* kHeader = "saito-tree v1";

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

i64 parse_int(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        i64 v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    }
}

}  // namespace

NumberedTree parse_tree(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    bool header_seen = false;
    std::vector<std::vector<VertexId>> parents;
    Numbering numbering;
    std::set<std::pair<VertexId, VertexId>> edges;

    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != kHeader) throw ParseError(line_no, "expected header '" + std::string(kHeader) + "'");
            header_seen = true;
            continue;
        }
        std::istringstream rec(line);
        std::string word, id_tok, parents_tok, n_tok, extra;
        rec >> word >> id_tok >> parents_tok >> n_tok;
        if (word != "vertex" || id_tok.empty() || parents_tok.rfind("parents=", 0) != 0 ||
            n_tok.rfind("n=", 0) != 0 || (rec >> extra))
            throw ParseError(line_no, "expected 'vertex <id> parents=<p1[,p2]|-> n=<int>'");

        const i64 id = parse_int(id_tok, line_no);
        const i64 next = static_cast<i64>(parents.size());
        if (id < 0) throw ParseError(line_no, "vertex ids are non-negative");
        if (id < next) throw DuplicateId(line_no, "vertex " + std::to_string(id) + " already declared");
        if (id > next)
            throw ParseError(line_no, "vertex ids must be consecutive; expected " + std::to_string(next));

        std::vector<VertexId> ps;
        const std::string spec = parents_tok.substr(8);
        if (spec != "-") {
            std::string item;
            std::istringstream list(spec);
            while (std::getline(list, item, ',')) {
                const i64 p = parse_int(item, line_no);
                if (p >= id)
                    throw ForwardReference(line_no, "vertex " + std::to_string(id) +
                                                        " references vertex " + std::to_string(p) +
                                                        " which is not declared yet");
                if (p < 0) throw ParseError(line_no, "negative parent id");
                ps.push_back(static_cast<VertexId>(p));
            }
            if (ps.empty() || ps.size() > 2)
                throw ParseError(line_no, "a vertex has one or two parents (or '-' for the root)");
        } else if (id != 0) {
            throw ParseError(line_no, "only vertex 0 may be the root");
        }
        if (id == 0 && !ps.empty()) throw ParseError(line_no, "vertex 0 must have parents=-");

        const i64 n_val = parse_int(n_tok.substr(2), line_no);
        if (n_val < 0) throw ParseError(line_no, "numbering entries are non-negative");

        // replay the construction rules as records arrive
        std::sort(ps.begin(), ps.end());
        if (ps.size() == 1) {
            edges.insert({ps[0], static_cast<VertexId>(id)});
        } else if (ps.size() == 2) {
            if (ps[0] == ps[1]) throw ParseError(line_no, "the two parents must be distinct");
            if (edges.erase({ps[0], ps[1]}) == 0)
                throw Rule2EdgeMissing("line " + std::to_string(line_no) + ": vertex " + std::to_string(id) +
                                       " splits edge " + std::to_string(ps[0]) + "-" + std::to_string(ps[1]) +
                                       " which does not exist at this point");
            edges.insert({ps[0], static_cast<VertexId>(id)});
            edges.insert({ps[1], static_cast<VertexId>(id)});
        }

        parents.push_back(std::move(ps));
        numbering.push_back(n_val);
    }

    if (!header_seen) throw ParseError(1, "missing header '" + std::string(kHeader) + "'");
    if (parents.empty()) throw EmptyTree(line_no, "document declares no vertices");
    return {ResolutionTree::from_parent_sets(parents), std::move(numbering)};
}

std::string serialize_tree(const ResolutionTree& tree, const Numbering& n) {
    std::ostringstream out;
    out << kHeader << "\n";
    for (VertexId v = 0; v < tree.size(); ++v) {
        out << "vertex " << v << " parents=";
        if (tree.parents(v).empty()) {
            out << "-";
        } else {
            for (std::size_t i = 0; i < tree.parents(v).size(); ++i) {
                if (i) out << ",";
                out << tree.parents(v)[i];
            }
        }
        out << " n=" << n[v] << "\n";
    }
    return out.str();
}

std::string emit_dot(const ResolutionTree& tree, const Numbering& n, const Dicriticity& delta,
                     const Configuration& epsilon) {
    std::ostringstream out;
    out << "graph saito_tree {\n";
    out << "  node [shape=box, style=filled];\n";
    for (VertexId v = 0; v < tree.size(); ++v) {
        const bool white = delta[v] == 1;
        out << "  v" << v << " [label=\"" << v << " | n=" << n[v] << " | eps=" << epsilon[v] << "\", fillcolor="
            << (white ? "white" : "black") << ", fontcolor=" << (white ? "black" : "white") << "];\n";
    }
    for (VertexId v = 0; v < tree.size(); ++v)
        for (VertexId w : tree.neighbors(v))
            if (v < w) out << "  v" << v << " -- v" << w << ";\n";
    out << "}\n";
    return out.str();
}

std::string rational_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

nlohmann::json tree_json(const ResolutionTree& tree, const Numbering& n) {
    nlohmann::json vertices = nlohmann::json::array();
    for (VertexId v = 0; v < tree.size(); ++v)
        vertices.push_back({{"id", v}, {"parents", tree.parents(v)}, {"n", n[v]}});
    return {{"format", kHeader}, {"vertices", vertices}};
}

nlohmann::json analysis_json(const ResolutionTree& tree, const Numbering& n) {
    const SaitoSolution sol = saito_inductive(tree, n);
    nlohmann::json j;
    j["tree"] = tree_json(tree, n);
    j["multiplicities"] = multiplicities(tree);
    j["valuations"] = valuations(tree, n);
    j["dicriticity"] = sol.delta;
    j["configuration"] = sol.epsilon;
    return j;
}

nlohmann::json profile_json(const ResolutionTree& tree, const Numbering& n) {
    nlohmann::json j = analysis_json(tree, n);
    const SaitoProfile profile = saito_valuation_profile(tree, n);
    j["saito_number"] = profile.saito_number;
    j["saito_valuations"] = profile.per_vertex;
    j["upper_bound_holds"] = check_upper_bound(tree, n, profile.saito_number);
    return j;
}

nlohmann::json gluing_json(const ResolutionTree& tree, const Numbering& n, unsigned seed) {
    nlohmann::json j = profile_json(tree, n);
    const GluingData data = gluing_data(tree, n, seed);
    nlohmann::json models = nlohmann::json::array();
    for (VertexId v = 0; v < tree.size(); ++v) {
        const VertexModel& m = data.models[v];
        nlohmann::json entry{{"vertex", v}, {"self_intersection", -m.self_int_magnitude}};
        if (m.dicritical) {
            entry["model"] = "dicritical";
            entry["tangency_count"] = m.tangency_count;
        } else {
            entry["model"] = "non_dicritical";
            nlohmann::json weights = nlohmann::json::array();
            for (const Rational& w : m.free_weights) weights.push_back(rational_string(w));
            entry["free_weights"] = weights;
            nlohmann::json edges = nlohmann::json::object();
            for (const auto& [to, w] : m.edge_weights) edges[std::to_string(to)] = rational_string(w);
            entry["edge_weights"] = edges;
        }
        models.push_back(std::move(entry));
    }
    j["gluing"] = {{"models", models}};
    return j;
}

nlohmann::json moduli_json(const ResolutionTree& tree, const Numbering& n) {
    nlohmann::json j = analysis_json(tree, n);
    const ModuliReport report = generic_moduli_dimension(tree, n);
    nlohmann::json levels = nlohmann::json::array();
    for (const auto& level : report.levels)
        levels.push_back({{"level", level.level_index},
                          {"value", level.value},
                          {"numbering", level.numbering},
                          {"dicriticity", level.delta},
                          {"configuration", level.epsilon}});
    j["moduli"] = {{"levels", levels}, {"total", report.total}};
    return j;
}

nlohmann::json tjurina_json(const ResolutionTree& tree, const Numbering& n, i64 modularity) {
    nlohmann::json j = moduli_json(tree, n);
    const MilnorResult milnor = milnor_number(tree, n);
    const i64 dim = j["moduli"]["total"].get<i64>();
    j["tjurina"] = {{"mu", milnor.mu},
                    {"branch_count", milnor.branch_count},
                    {"modularity", modularity},
                    {"dimension", dim},
                    {"tau", generic_tjurina(milnor.mu, modularity, dim)}};
    return j;
}

}  // namespace saito
